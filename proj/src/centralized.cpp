#include "sicopt/centralized.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sicopt {
namespace {

// Picks the best allocation; earlier entries win ties.
Allocation Best(const ChannelGains& gains, Strategy strategy,
                const std::vector<std::pair<double, double>>& candidates) {
  Allocation best = Evaluate(gains, strategy, candidates.front().first, candidates.front().second);
  for (const auto& [g1, g2] : candidates) {
    Allocation a = Evaluate(gains, strategy, g1, g2);
    if (a.sum_rate > best.sum_rate) best = a;
  }
  return best;
}

bool InRange(double x, double hi) { return x >= 0.0 && x <= hi; }

}  // namespace

std::string_view ToString(Strategy s) {
  switch (s) {
    case Strategy::kNoSic: return "NoSic";
    case Strategy::kPartialSicR1: return "PartialSicR1";
    case Strategy::kPartialSicR2: return "PartialSicR2";
    case Strategy::kFullSic: return "FullSic";
  }
  return "?";
}

RatePair MaxRates(const ChannelGains& gains, Strategy strategy, double gamma1, double gamma2) {
  const double c11 = CapacityWithInterference(gains, User::kOne, User::kOne, gamma1, gamma2);
  const double c12 = CapacityWithInterference(gains, User::kOne, User::kTwo, gamma1, gamma2);
  const double c21 = CapacityWithInterference(gains, User::kTwo, User::kOne, gamma1, gamma2);
  const double c22 = CapacityWithInterference(gains, User::kTwo, User::kTwo, gamma1, gamma2);
  const double s1 = CapacitySic(gains, User::kOne, gamma1);
  const double s2 = CapacitySic(gains, User::kTwo, gamma2);
  switch (strategy) {
    case Strategy::kNoSic: return {c11, c22};
    // R2 must decode T1 before cancelling it; R1 decodes T1 with T2 as noise.
    case Strategy::kPartialSicR2: return {std::min(c12, c11), s2};
    case Strategy::kPartialSicR1: return {s1, std::min(c21, c22)};
    case Strategy::kFullSic: return {std::min(c12, s1), std::min(c21, s2)};
  }
  return {};
}

Allocation Evaluate(const ChannelGains& gains, Strategy strategy, double gamma1, double gamma2) {
  const RatePair r = MaxRates(gains, strategy, gamma1, gamma2);
  return {strategy, gamma1, gamma2, r.r1, r.r2, r.r1 + r.r2};
}

bool IsFeasible(const ChannelGains& gains, const Allocation& alloc, double tol) {
  if (!InRange(alloc.gamma1, gains.gamma1_max) || !InRange(alloc.gamma2, gains.gamma2_max)) {
    return false;
  }
  if (alloc.r1 < 0.0 || alloc.r2 < 0.0 || alloc.sum_rate != alloc.r1 + alloc.r2) return false;
  const RatePair cap = MaxRates(gains, alloc.strategy, alloc.gamma1, alloc.gamma2);
  return alloc.r1 <= cap.r1 + tol && alloc.r2 <= cap.r2 + tol;
}

std::optional<double> ThresholdKt(const ChannelGains& gains) {
  const double num = gains.g11 - gains.g12;
  const double den = gains.g12 * gains.g21 - gains.g11 * gains.g22;
  if (den == 0.0) {
    if (num == 0.0) return std::nullopt;
    return std::copysign(std::numeric_limits<double>::infinity(), num);
  }
  return num / den;
}

std::pair<double, double> FullSicThresholds(const ChannelGains& gains) {
  const double den = gains.g11 * gains.g22;
  return {(gains.g21 - gains.g22) / den, (gains.g12 - gains.g11) / den};
}

Allocation SolveNoSic(const ChannelGains& gains) {
  gains.Validate();
  const double a = gains.gamma1_max;
  const double b = gains.gamma2_max;
  return Best(gains, Strategy::kNoSic, {{0.0, 0.0}, {a, 0.0}, {0.0, b}, {a, b}});
}

Allocation SolvePartialSic(const ChannelGains& gains, User canceller) {
  gains.Validate();
  const double a = gains.gamma1_max;
  const double b = gains.gamma2_max;
  // The non-cancelling side's transmitter always runs at peak SNR. With strong
  // cross links (k_t denominator > 0) the increasing branch lies below k_t, so
  // the kink itself can be the optimum; it never lies in range for dominant links.
  if (canceller == User::kTwo) {
    std::vector<std::pair<double, double>> c{{a, 0.0}, {a, b}};
    const std::optional<double> kt = ThresholdKt(gains);
    if (kt && InRange(*kt, b)) c.insert(c.begin() + 1, {a, *kt});
    return Best(gains, Strategy::kPartialSicR2, c);
  }
  std::vector<std::pair<double, double>> c{{0.0, b}, {a, b}};
  const std::optional<double> kt = ThresholdKt(gains.Swapped());
  if (kt && InRange(*kt, a)) c.insert(c.begin() + 1, {*kt, b});
  return Best(gains, Strategy::kPartialSicR1, c);
}

Allocation SolveFullSic(const ChannelGains& gains) {
  gains.Validate();
  const auto [k1, k2] = FullSicThresholds(gains);
  std::vector<double> g1s{0.0, gains.gamma1_max};
  std::vector<double> g2s{0.0, gains.gamma2_max};
  // Kinks outside the box are dropped; the corners cover the boundary.
  if (InRange(k1, gains.gamma1_max)) g1s.insert(g1s.begin() + 1, k1);
  if (InRange(k2, gains.gamma2_max)) g2s.insert(g2s.begin() + 1, k2);
  std::vector<std::pair<double, double>> candidates;
  for (double g1 : g1s) {
    for (double g2 : g2s) candidates.emplace_back(g1, g2);
  }
  return Best(gains, Strategy::kFullSic, candidates);
}

Allocation SolveGlobal(const ChannelGains& gains) {
  const std::array<Allocation, 4> all{SolveNoSic(gains), SolvePartialSic(gains, User::kTwo),
                                      SolvePartialSic(gains, User::kOne), SolveFullSic(gains)};
  Allocation best = all[0];
  for (const Allocation& a : all) {
    if (a.sum_rate > best.sum_rate) best = a;
  }
  return best;
}

bool CheckProposition1(const ChannelGains& gains) {
  gains.Validate();
  if (!gains.DominantIntendedLinks()) {
    throw std::domain_error("dominant-link check requires g11 > g12 and g22 > g21");
  }
  const bool ns_beats_fs = SolveNoSic(gains).sum_rate >= SolveFullSic(gains).sum_rate - 1e-12;
  const Allocation global = SolveGlobal(gains);
  return ns_beats_fs && global.gamma1 == gains.gamma1_max && global.gamma2 == gains.gamma2_max;
}

std::pair<bool, bool> Proposition2Conditions(const ChannelGains& gains, double gamma1,
                                             double gamma2) {
  gains.Validate();
  const double t2 = (gains.g11 - gains.g12) / (gains.g21 * gains.g12);
  const double t1 = (gains.g22 - gains.g21) / (gains.g12 * gains.g21);
  return {gamma2 < t2, gamma1 < t1};
}

double SingleTxGapOmega(const SymmetricChannel& sym) {
  sym.Validate();
  const ChannelGains g = sym.ToGains();
  const double gamma = sym.gamma;
  return Phi(g.g12 / g.g22) /
         (Phi(g.g12 * gamma / (g.g22 * gamma + 1.0)) + Phi(g.g22 * gamma));
}

}  // namespace sicopt
