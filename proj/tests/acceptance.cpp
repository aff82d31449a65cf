// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any line fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sicopt/analysis.hpp"
#include "sicopt/centralized.hpp"
#include "sicopt/oracle.hpp"
#include "sicopt/sim.hpp"
#include "sicopt/symmetric.hpp"

using namespace sicopt;

namespace {

// Tolerances and budgets.
constexpr double kPrintedLandmarkTol = 0.01;
constexpr double kPrintedEventTol = 0.01;  // seconds
constexpr double kDt = 1e-3;
constexpr double kFeasTol = 1e-12;
constexpr double kCurveTol = 1e-9;
constexpr double kQTol = 1e-5;
constexpr double kRhoSlack = 1e-9;
constexpr double kStructTol = 1e-12;
constexpr std::uint64_t kSeed = 20240601;

const SymmetricChannel kExample{0.3, 0.7, 4.0};

int failures = 0;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

void Report(const std::string& id, bool ok, const std::string& detail, double secs,
            double budget) {
  const bool in_time = secs <= budget;
  const bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %s: %s (%.3f s, budget %.0f s)%s\n", pass ? "PASS" : "FAIL",
              id.c_str(), detail.c_str(), secs, budget, in_time ? "" : " over budget");
}

std::string Fmt(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

void Landmarks1() {
  const auto t0 = Clock::now();
  const Landmarks l = ComputeLandmarks(kExample);
  const bool ok = std::abs(l.ws2 - 1.49) <= kPrintedLandmarkTol &&
                  std::abs(l.op2 - 0.64) <= kPrintedLandmarkTol &&
                  std::abs(l.th - 0.85) <= kPrintedLandmarkTol;
  Report("1", ok, Fmt("ws2=%.5f op2=%.5f th=%.5f", l.ws2, l.op2, l.th), Seconds(t0), 1);
}

void Events2() {
  const auto t0 = Clock::now();
  const Trajectory traj = Simulate({kExample, 1.0, kDt, 2, true});
  const Events ev = DetectEvents(traj, kExample);
  const double secs = Seconds(t0);
  const auto line = [&](const char* id, const char* name, const std::optional<double>& t,
                        double printed) {
    const bool ok = t && std::abs(*t - printed) <= kPrintedEventTol;
    Report(id, ok,
           std::string(name) + (t ? Fmt(" at %.4f s, expected %.2f +- 0.01", *t, printed)
                                  : std::string(" not found")),
           secs, 1);
  };
  line("2a", "first R2 decode", ev.first_r2_decode, 0.36);
  line("2b", "first R1 decode", ev.first_r1_decode, 0.55);
  line("2c", "steady-state SIC loss", ev.sic_loss, 1.44);
}

void TheoremVsSim3() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const SymmetricChannel sym = RandomSymmetric(rng, 0.1, 20.0, true);
    const double avg = TimeAverage(Simulate({sym, 1.0, kDt, 1, false}), 1);
    const double gap = std::abs(ComputeExpectedRates(sym).e_sum - avg);
    const double tol = 5.0 * kDt * ComputeLandmarks(sym).mv;
    worst = std::max(worst, gap / tol);
    bad += gap > tol;
  }
  Report("3", bad == 0, Fmt("%.0f/100 violations, worst gap %.3f of tolerance", bad, worst),
         Seconds(t0), 30);
}

void SolverVsGrid4() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed + 1);
  const GridSpec spec{201};
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const ChannelGains g = RandomGains(rng, i % 2 == 0, 10.0);
    const Allocation closed = SolveGlobal(g);
    const Allocation grid = GridOptimizeGlobal(g, spec);
    const bool ok = closed.sum_rate >= grid.sum_rate - GridLipschitzTolerance(g, spec) &&
                    IsFeasible(g, closed, kFeasTol);
    bad += !ok;
  }
  Report("4", bad == 0, Fmt("%.0f/200 violations", bad), Seconds(t0), 120);
}

void Proposition1_5() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed + 2);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) bad += !CheckProposition1(RandomGains(rng, true, 10.0));
  Report("5", bad == 0, Fmt("%.0f/1000 violations", bad), Seconds(t0), 10);
}

void SwitchingCurve6() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int pairs = 0;
  while (pairs < 100) {
    const double gamma = std::exp(std::log(0.1) + unit(rng) * (std::log(100.0) - std::log(0.1)));
    const double eps = 0.01 + unit(rng) * 0.98;
    const double mu = SwitchingCurveMu(eps, gamma);
    if (!(mu > 0.0 && mu < 1.0)) continue;  // curve leaves the unit square
    const SymmetricChannel sym{eps, mu, gamma};
    worst = std::max(worst, std::abs(SumRateNoSic(sym) - SumRatePartialII(sym)));
    ++pairs;
  }
  const double q = DiagonalIntersectionQ(4.0);
  const double fixed = std::abs(SwitchingCurveMu(q, 4.0) - q);
  const bool ok = worst < kCurveTol && std::abs(q - 0.60961) <= kQTol && fixed <= kCurveTol;
  Report("6", ok, Fmt("max |r_NS - r_PII| = %.2e, q(4) = %.6f, |mu(q) - q| = %.2e", worst, q, fixed),
         Seconds(t0), 1);
}

void EfficiencyRidge7() {
  const auto t0 = Clock::now();
  const double step = 0.01;
  const std::vector<ComparisonRow> rows = Sweep(4.0, step);
  bool bounded = rows.size() == 99 * 99;
  for (const ComparisonRow& r : rows) bounded = bounded && r.rho_osc > 0.0 && r.rho_osc <= 1.0 + kRhoSlack;
  int off = 0;
  double worst = 0.0;
  for (int i = 0; i < 99; ++i) {
    const double eps = rows[i * 99].epsilon;
    if (eps < 0.05 - 1e-12 || eps > 0.6 + 1e-12) continue;
    const auto first = rows.begin() + i * 99;
    const auto best = std::max_element(first, first + 99, [](const auto& a, const auto& b) {
      return a.rho_osc < b.rho_osc;
    });
    const double steps = std::abs(best->mu - SwitchingCurveMu(eps, 4.0)) / step;
    worst = std::max(worst, steps);
    off += steps > 2.0 + 1e-9;
  }
  Report("7", bounded && off == 0,
         std::string(bounded ? "rho in (0, 1] everywhere" : "rho out of bounds") +
             Fmt(", ridge rows off-curve: %.0f, worst %.2f grid steps", off, worst),
         Seconds(t0), 10);
}

void Benchmarks8() {
  const auto t0 = Clock::now();
  const std::vector<ComparisonRow> rows = Sweep(4.0, 0.01, 0.2);
  int transitions = 0;
  bool greedy_ok = true;
  bool edge_ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ComparisonRow& r = rows[i];
    const bool no_sic = r.region == Strategy::kNoSic;
    greedy_ok = greedy_ok && (no_sic ? r.rho_greedy == 1.0 : r.rho_greedy < 1.0);
    if (i > 0 && no_sic != (rows[i - 1].region == Strategy::kNoSic)) ++transitions;
    const SymmetricChannel sym{r.epsilon, r.mu, r.gamma};
    const double op2 = ComputeLandmarks(sym).op2;
    edge_ok = edge_ok && op2 > 0.0 &&
              std::abs(SumRatePartialII(sym) - Phi(sym.gamma) - op2) <= kStructTol;
  }
  Report("8", transitions == 1 && greedy_ok && edge_ok,
         Fmt("transitions=%.0f", transitions) +
             (greedy_ok ? ", greedy structure ok" : ", greedy structure broken") +
             (edge_ok ? ", r_PII - phi(gamma) = op2 > 0" : ", orthogonal edge broken"),
         Seconds(t0), 1);
}

}  // namespace

int main() {
  Landmarks1();
  Events2();
  TheoremVsSim3();
  SolverVsGrid4();
  Proposition1_5();
  SwitchingCurve6();
  EfficiencyRidge7();
  Benchmarks8();
  std::printf("%s: %d failing line(s)\n", failures == 0 ? "ALL PASS" : "NOT ALL PASS", failures);
  return failures == 0 ? 0 : 1;
}
