#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "sicopt/channel.hpp"

namespace sicopt {

/// Decoding architecture. PartialSicR1 means receiver R1 cancels the
/// interference from T2; PartialSicR2 the converse.
enum class Strategy { kNoSic, kPartialSicR1, kPartialSicR2, kFullSic };

std::string_view ToString(Strategy s);

struct Allocation {
  Strategy strategy = Strategy::kNoSic;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double sum_rate = 0.0;
};

struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Largest rates the decoding architecture supports at the given SNRs: each
/// rate is the minimum over every receiver that has to decode that signal.
RatePair MaxRates(const ChannelGains& gains, Strategy strategy, double gamma1, double gamma2);

/// Allocation at (gamma1, gamma2) with rates from MaxRates.
Allocation Evaluate(const ChannelGains& gains, Strategy strategy, double gamma1, double gamma2);

/// True when the allocation's SNRs are in range, its rates are non-negative,
/// sum_rate == r1 + r2, and both rates sit within `tol` of the strategy's
/// decodability constraints.
bool IsFeasible(const ChannelGains& gains, const Allocation& alloc, double tol = 1e-12);

/// (g11 - g12) / (g12 g21 - g11 g22): the gamma2 at which the two constraints on
/// r1 in the partial-SIC problem swap. Signed infinity for a zero denominator,
/// nullopt for 0/0.
std::optional<double> ThresholdKt(const ChannelGains& gains);

/// Full-SIC kinks: gamma1 = (g21 - g22)/(g11 g22) and gamma2 = (g12 - g11)/(g11 g22).
std::pair<double, double> FullSicThresholds(const ChannelGains& gains);

Allocation SolveNoSic(const ChannelGains& gains);
/// Candidates: the non-cancelling transmitter at peak SNR, the canceller's side at
/// 0, its peak, or the k_t kink when that falls inside the range.
Allocation SolvePartialSic(const ChannelGains& gains, User canceller);
Allocation SolveFullSic(const ChannelGains& gains);

/// Best of the four sub-problems. Ties go to the first of
/// NoSic, PartialSicR2, PartialSicR1, FullSic.
Allocation SolveGlobal(const ChannelGains& gains);

/// No-SIC optimum is at least the full-SIC optimum and the global optimum uses
/// both peak SNRs. Requires dominant intended links (std::domain_error otherwise).
bool CheckProposition1(const ChannelGains& gains);

/// Low-SNR conditions (gamma2 < (g11-g12)/(g21 g12), gamma1 < (g22-g21)/(g12 g21)).
std::pair<bool, bool> Proposition2Conditions(const ChannelGains& gains, double gamma1,
                                             double gamma2);

/// Omega = phi(g12/g22) / [phi(g12 gamma/(g22 gamma + 1)) + phi(g22 gamma)] on the
/// symmetric gains. Relative gap between a single transmitter and the
/// R2-cancelling partial-SIC optimum.
double SingleTxGapOmega(const SymmetricChannel& sym);

}  // namespace sicopt
