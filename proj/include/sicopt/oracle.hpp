#pragma once

#include <random>

#include "sicopt/centralized.hpp"
#include "sicopt/sim.hpp"

namespace sicopt {

// Brute-force references used by the tests and the `verify` command. Nothing
// here reads the closed-form candidate sets.

struct GridSpec {
  int n_points = 201;  // per axis, both endpoints included

  void Validate() const;
};

/// Exhaustive search of one sub-problem over the (gamma1, gamma2) grid. Ties go
/// to the lexicographically smallest (gamma1, gamma2). An axis with zero peak
/// SNR collapses to the single point 0.
Allocation GridOptimize(const ChannelGains& gains, Strategy strategy, const GridSpec& spec = {});

/// Best over all four sub-problems.
Allocation GridOptimizeGlobal(const ChannelGains& gains, const GridSpec& spec = {});

/// Upper bound on how far the true optimum can sit above the grid optimum:
/// a Lipschitz constant of the objective (2 max_gain / ln 2 per axis) times
/// half the grid spacing, summed over the axes.
double GridLipschitzTolerance(const ChannelGains& gains, const GridSpec& spec = {});

/// Trapezoidal time-average of the achieved sum throughput over `window` whole
/// periods starting at the first steady-state sample. Throws
/// std::invalid_argument if the trajectory is too short.
double TimeAverage(const Trajectory& traj, int window);

/// Random instance for property sweeps. Direct gains in [0.2, 2]; with
/// `dominant` each cross gain is a random fraction in [0.01, 0.99] of the
/// receiving side's direct gain, otherwise all gains are in [0.05, 2]. Peak
/// SNRs are uniform in [0, gamma_max_hi].
ChannelGains RandomGains(std::mt19937_64& rng, bool dominant, double gamma_max_hi);

/// Random symmetric channel with eps, mu in [0.01, 0.99] and log-uniform gamma
/// in [gamma_lo, gamma_hi]. With `mu_ge_eps` the pair is sorted so mu >= eps.
SymmetricChannel RandomSymmetric(std::mt19937_64& rng, double gamma_lo, double gamma_hi,
                                 bool mu_ge_eps);

}  // namespace sicopt
