#include "sicopt/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sicopt {

Landmarks ComputeLandmarks(const SymmetricChannel& sym) {
  sym.Validate();
  const double g = sym.gamma;
  return {
      Phi(g),
      Phi(g / ((1.0 - sym.epsilon) * g + 1.0)),
      Phi(g / ((1.0 - sym.mu) * g + 1.0)),
      Phi((1.0 - sym.mu) * g / (g + 1.0)),
      Phi((1.0 - sym.epsilon) * g / (g + 1.0)),
      Phi(g / (g + 1.0)),
  };
}

double SumRateNoSic(const SymmetricChannel& sym) {
  const Landmarks l = ComputeLandmarks(sym);
  return l.ws1 + l.ws2;
}

double SumRatePartialI(const SymmetricChannel& sym) {
  const Landmarks l = ComputeLandmarks(sym);
  return l.op1 + l.mv;
}

double SumRatePartialII(const SymmetricChannel& sym) {
  const Landmarks l = ComputeLandmarks(sym);
  return l.mv + l.op2;
}

double OptimalSumRate(const SymmetricChannel& sym) {
  return std::max({SumRateNoSic(sym), SumRatePartialI(sym), SumRatePartialII(sym)});
}

double SwitchingCurveMu(double epsilon, double gamma) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon must lie in (0, 1)");
  if (!(gamma > 0.0)) throw std::domain_error("gamma must be positive");
  return 1.0 - epsilon / (gamma * (1.0 - epsilon));
}

double DiagonalIntersectionQ(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::domain_error("gamma must be positive");
  // 1 + 2g - sqrt(1 + 4g) cancels badly for small g; use the conjugate form
  // 2g / (1 + 2g + sqrt(1 + 4g)), algebraically identical.
  return 2.0 * gamma / (1.0 + 2.0 * gamma + std::sqrt(1.0 + 4.0 * gamma));
}

Strategy ClassifyRegion(const SymmetricChannel& sym) {
  const double ns = SumRateNoSic(sym);
  const double pi = SumRatePartialI(sym);
  const double pii = SumRatePartialII(sym);
  if (ns >= pi && ns >= pii) return Strategy::kNoSic;
  if (pii >= pi) return Strategy::kPartialSicR1;
  return Strategy::kPartialSicR2;
}

}  // namespace sicopt
