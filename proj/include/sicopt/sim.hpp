#pragma once

#include <optional>
#include <vector>

#include "sicopt/channel.hpp"
#include "sicopt/symmetric.hpp"

namespace sicopt {

// Time-stepped simulation of the decentralized rate-oscillation scheme on the
// symmetric channel. Both transmitters always use peak power; only rates move.
//
// Init phase, t in [0, T): both rates fall linearly from mv at slope mv/T. The
// first receiver that can cancel the other signal makes its transmitter jump
// back to mv (greedy role); the other keeps descending (sawtooth role).
//
// Steady phase: the sawtooth transmitter ramps from 0 with speed ws/T, holds
// ws once the ramp passes th, and resets every period. The greedy transmitter
// sends mv while its receiver can cancel the ramp and its own ws otherwise.

struct SimConfig {
  SymmetricChannel sym;
  double period = 1.0;
  double dt = 1e-3;
  int n_periods = 10;
  bool include_init = true;

  /// Throws std::domain_error on dt > T/100, n_periods < 1, or when T/dt is
  /// not an integer.
  void Validate() const;
  int StepsPerPeriod() const;
};

enum class Phase { kInit, kSteady };

struct Sample {
  double t = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  bool r1_decoded = false;
  bool r2_decoded = false;
  bool sic_at_r1 = false;  // R1 can decode and cancel T2's signal
  bool sic_at_r2 = false;
  Phase phase = Phase::kSteady;

  double Throughput() const { return (r1_decoded ? r1 : 0.0) + (r2_decoded ? r2 : 0.0); }
};

struct Trajectory {
  std::vector<Sample> samples;
  double dt = 0.0;
  double period = 0.0;
  int steps_per_period = 0;
  User greedy = User::kOne;
  double sawtooth_speed = 0.0;  // ws of the sawtooth side over T

  /// Index of the first steady-state sample.
  std::size_t SteadyBegin() const;
};

/// Rate of T2 in the steady phase with T2 ramping: v (t mod T) while that is
/// at most th, ws2 afterwards, v = ws2 / T.
double SawtoothR2(double t, const SymmetricChannel& sym, double period);

/// T1's greedy reply: mv while R1 can cancel r2 (r2 <= op2), ws1 otherwise.
double GreedyR1(double r2_now, const SymmetricChannel& sym);

struct InitPhase {
  std::vector<Sample> samples;
  User greedy = User::kOne;
};

InitPhase RunInitPhase(const SimConfig& cfg);

/// n_periods * T / dt + 1 steady samples starting at t = first_step * dt.
std::vector<Sample> RunSteadyState(const SimConfig& cfg, User greedy, long first_step = 0);

/// Init (optional) followed by the steady phase. Deterministic.
Trajectory Simulate(const SimConfig& cfg);

/// Event times recovered from a trajectory by linear interpolation between the
/// bracketing samples. Missing events stay empty.
struct Events {
  std::optional<double> first_r2_decode;
  std::optional<double> first_r1_decode;
  std::optional<double> greedy_switch;  // greedy transmitter jumps to mv in init
  std::optional<double> sic_loss;       // first loss of SIC in the steady phase
  std::optional<double> ramp_jump;      // sawtooth passes th and jumps to ws
};

Events DetectEvents(const Trajectory& traj, const SymmetricChannel& sym);

}  // namespace sicopt
