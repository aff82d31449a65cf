#pragma once

#include <optional>
#include <vector>

#include "sicopt/centralized.hpp"
#include "sicopt/channel.hpp"

namespace sicopt {

/// Long-run average rates of the oscillation scheme. The init phase is not
/// included. t_prime and t_double_prime are fractions of the period (T = 1);
/// the expected rates themselves do not depend on T.
struct ExpectedRates {
  double e_r1 = 0.0;
  double e_r2 = 0.0;
  double e_sum = 0.0;
  double t_prime = 0.0;
  double t_double_prime = 0.0;
};

/// Time within a period after which the greedy receiver can no longer cancel
/// the ramp: T op2 / ws2 (labels taken with mu >= eps).
double TPrime(const SymmetricChannel& sym, double period);

/// Time within a period at which the ramp passes th: T th / ws2.
double TDoublePrime(const SymmetricChannel& sym, double period);

/// e_r1 = (op2/ws2)(mv - ws1) + ws1 and e_r2 = th^2/(2 ws2) + ws2 - th for the
/// mu >= eps labeling. For mu < eps the channel is evaluated with the users
/// exchanged and e_r1, e_r2 are mapped back to the caller's labels.
ExpectedRates ComputeExpectedRates(const SymmetricChannel& sym);

/// e_sum over the best of the three closed-form sum-rates.
double EfficiencyOsc(const SymmetricChannel& sym);

/// Both users at full power treating interference as noise.
double BenchmarkGreedy(const SymmetricChannel& sym);

/// Time sharing at full power: phi(gamma).
double BenchmarkOrthogonal(const SymmetricChannel& sym);

struct ComparisonRow {
  double epsilon = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  double r_opt = 0.0;
  double e_osc = 0.0;
  double e_greedy = 0.0;
  double e_orth = 0.0;
  double rho_osc = 0.0;
  double rho_greedy = 0.0;
  double rho_orth = 0.0;
  Strategy region = Strategy::kNoSic;
};

ComparisonRow Compare(const SymmetricChannel& sym);

/// Interior grid points {step, 2 step, ...} strictly inside (0, 1). When 1/step
/// is an integer M the points are computed as i/M so they print cleanly.
std::vector<double> OpenUnitGrid(double step);

/// Rows over the full (eps, mu) grid, or over eps at a fixed mu when `mu_fixed`
/// is set. Ordered by (eps, mu).
std::vector<ComparisonRow> Sweep(double gamma, double grid_step,
                                 std::optional<double> mu_fixed = std::nullopt);

}  // namespace sicopt
