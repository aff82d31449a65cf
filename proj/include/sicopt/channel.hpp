#pragma once

#include <cmath>

namespace sicopt {

/// User / receiver label. Transmitter T_i is intended for receiver R_i.
enum class User { kOne = 1, kTwo = 2 };

constexpr User Other(User u) { return u == User::kOne ? User::kTwo : User::kOne; }

/// Power path losses of the two-user interference channel plus the peak SNR of
/// each transmitter. `gij` is the gain from T_i to R_j, so g21 is the
/// interference T2 causes at R1. Noise variance is folded into the SNRs.
struct ChannelGains {
  double g11 = 1.0;
  double g12 = 1.0;
  double g21 = 1.0;
  double g22 = 1.0;
  double gamma1_max = 0.0;
  double gamma2_max = 0.0;

  /// Throws std::domain_error unless every gain is positive and finite and
  /// both peak SNRs are finite and non-negative.
  void Validate() const;

  /// g11 > g12 and g22 > g21: each transmitter is closer to its own receiver.
  bool DominantIntendedLinks() const { return g11 > g12 && g22 > g21; }

  double Gain(User from, User to) const;
  double GammaMax(User u) const { return u == User::kOne ? gamma1_max : gamma2_max; }

  /// The same channel with user labels exchanged.
  ChannelGains Swapped() const { return {g22, g21, g12, g11, gamma2_max, gamma1_max}; }
};

/// Normalized symmetric channel: unit direct gains, g21 = 1 - epsilon,
/// g12 = 1 - mu, common peak SNR gamma.
struct SymmetricChannel {
  double epsilon = 0.5;
  double mu = 0.5;
  double gamma = 1.0;

  void Validate() const;
  ChannelGains ToGains() const;
  SymmetricChannel Swapped() const { return {mu, epsilon, gamma}; }
};

/// log2(1 + x). Throws std::domain_error for negative or non-finite x.
double Phi(double x);

/// Capacity at receiver `rx` for the signal of `tx`, treating the other
/// transmitter as noise.
double CapacityWithInterference(const ChannelGains& gains, User tx, User rx, double gamma1,
                                double gamma2);

/// Interference-free capacity of user `u` at its own receiver (after SIC).
double CapacitySic(const ChannelGains& gains, User u, double gamma);

/// A signal is decodable when its rate does not exceed the capacity; equality
/// counts as decodable.
constexpr bool CanDecode(double rate, double capacity) { return rate <= capacity; }

}  // namespace sicopt
