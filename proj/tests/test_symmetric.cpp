#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "sicopt/centralized.hpp"
#include "sicopt/symmetric.hpp"

using namespace sicopt;

namespace {
const SymmetricChannel kExample{0.3, 0.7, 4.0};
}  // namespace

TEST_CASE("closed-form sum rates") {
  CHECK(SumRateNoSic(kExample) == doctest::Approx(2.53223939716824080).epsilon(1e-12));
  CHECK(SumRatePartialI(kExample) == doctest::Approx(2.63226821549951286).epsilon(1e-12));
  CHECK(SumRatePartialII(kExample) == doctest::Approx(2.96347412397488599).epsilon(1e-12));

  const Landmarks l = ComputeLandmarks({0.4, 0.4, 3.0});
  CHECK(l.ws1 == l.ws2);
  CHECK(SumRateNoSic({0.3, 0.7, 1e-12}) < 1e-11);
  CHECK(SumRatePartialI({0.3, 1.0 - 1e-15, 4.0}) == doctest::Approx(Phi(4.0)).epsilon(1e-14));
  CHECK(SumRatePartialII({1.0 - 1e-15, 0.3, 4.0}) == doctest::Approx(Phi(4.0)).epsilon(1e-14));
  CHECK(SumRatePartialI(kExample.Swapped()) == SumRatePartialII(kExample));
  CHECK(SumRatePartialII(kExample.Swapped()) == SumRatePartialI(kExample));
}

TEST_CASE("partial forms order with the margins") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> margin(0.01, 0.99);
  std::uniform_real_distribution<double> gamma(0.01, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const SymmetricChannel s{margin(rng), margin(rng), gamma(rng)};
    CHECK((SumRatePartialI(s) <= SumRatePartialII(s)) == (s.mu >= s.epsilon));
  }
}

TEST_CASE("switching curve") {
  // r_NS = r_PII at eps = 0.3, gamma = 4.
  const double mu = SwitchingCurveMu(0.3, 4.0);
  CHECK(mu == doctest::Approx(0.892857142857142857).epsilon(1e-14));
  CHECK(std::abs(SumRateNoSic({0.3, mu, 4.0}) - SumRatePartialII({0.3, mu, 4.0})) < 1e-9);
  CHECK(SwitchingCurveMu(0.8 - 1e-9, 4.0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(SwitchingCurveMu(0.9, 4.0) < 0.0);
}

TEST_CASE("boundary identity over random (eps, gamma)") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double gamma = std::exp(std::log(0.05) + unit(rng) * std::log(400.0));
    const double eps = (0.001 + 0.998 * unit(rng)) * gamma / (gamma + 1.0);
    const double mu = SwitchingCurveMu(eps, gamma);
    if (!(mu > 0.0 && mu < 1.0)) continue;
    CHECK(std::abs(SumRateNoSic({eps, mu, gamma}) - SumRatePartialII({eps, mu, gamma})) < 1e-9);
  }
}

TEST_CASE("diagonal intersection q") {
  CHECK(DiagonalIntersectionQ(4.0) == doctest::Approx(0.609611796797792431).epsilon(1e-14));
  const double q = DiagonalIntersectionQ(4.0);
  CHECK(std::abs(SwitchingCurveMu(q, 4.0) - q) < 1e-9);
  CHECK(DiagonalIntersectionQ(1e-9) < 1e-4);
  CHECK(DiagonalIntersectionQ(1e9) > 1.0 - 1e-4);
  double prev = 0.0;
  for (double g = 0.01; g < 1e4; g *= 1.3) {
    const double cur = DiagonalIntersectionQ(g);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("region classification") {
  CHECK(ClassifyRegion(kExample) == Strategy::kPartialSicR1);
  // Inside the square below q(4) = 0.6096 interference is strong enough for SIC.
  CHECK(ClassifyRegion({0.2, 0.2, 4.0}) == Strategy::kPartialSicR1);
  CHECK(ClassifyRegion({0.7, 0.7, 4.0}) == Strategy::kNoSic);
  CHECK(ClassifyRegion({0.7, 0.3, 4.0}) == Strategy::kPartialSicR2);
  CHECK(SumRatePartialI({0.45, 0.45, 4.0}) == SumRatePartialII({0.45, 0.45, 4.0}));
}

TEST_CASE("region map agrees with the general solver") {
  int compared = 0;
  for (int i = 1; i < 100; ++i) {
    for (int j = 1; j < 100; ++j) {
      const SymmetricChannel s{i / 100.0, j / 100.0, 4.0};
      const double ns = SumRateNoSic(s);
      const double pi = SumRatePartialI(s);
      const double pii = SumRatePartialII(s);
      const double top = std::max({ns, pi, pii});
      int near_top = 0;
      for (double v : {ns, pi, pii}) near_top += (top - v) < 1e-9;
      const Allocation a = SolveGlobal(s.ToGains());
      CHECK(a.sum_rate == doctest::Approx(top).epsilon(1e-12));
      if (near_top > 1) continue;
      ++compared;
      CHECK(ClassifyRegion(s) == a.strategy);
    }
  }
  CHECK(compared > 9000);
}

TEST_CASE("landmarks") {
  const Landmarks l = ComputeLandmarks(kExample);
  CHECK(std::abs(l.ws2 - 1.49) <= 0.01);
  CHECK(std::abs(l.op2 - 0.64) <= 0.01);
  CHECK(std::abs(l.th - 0.85) <= 0.01);
  CHECK(l.mv == doctest::Approx(2.32192809488736).epsilon(1e-13));
  CHECK(l.ws1 == doctest::Approx(1.03747470542).epsilon(1e-10));
  CHECK(l.op1 == doctest::Approx(0.310340120612).epsilon(1e-10));

  const Landmarks sym = ComputeLandmarks({0.4, 0.4, 2.0});
  CHECK(sym.op1 == sym.op2);
  CHECK(ComputeLandmarks({1e-12, 0.5, 4.0}).op2 == doctest::Approx(l.th).epsilon(1e-10));
}

TEST_CASE("landmark ordering") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> margin(1e-6, 1.0 - 1e-6);
  std::uniform_real_distribution<double> log_gamma(std::log(1e-3), std::log(1e4));
  for (int i = 0; i < 5000; ++i) {
    const Landmarks l = ComputeLandmarks({margin(rng), margin(rng), std::exp(log_gamma(rng))});
    CHECK(l.op1 <= l.th);
    CHECK(l.op2 <= l.th);
    CHECK(l.th < l.ws1);
    CHECK(l.th < l.ws2);
    CHECK(l.ws1 <= l.mv);
    CHECK(l.ws2 <= l.mv);
  }
}
