#include "sicopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sicopt {
namespace {

double Log2p(double x) { return std::log2(1.0 + x); }

// Sub-problem objective written out term by term.
double Objective(const ChannelGains& g, Strategy s, double a, double b, double* r1, double* r2) {
  const double t1_at_r1 = Log2p(g.g11 * a / (g.g21 * b + 1.0));
  const double t1_at_r2 = Log2p(g.g12 * a / (g.g22 * b + 1.0));
  const double t2_at_r2 = Log2p(g.g22 * b / (g.g12 * a + 1.0));
  const double t2_at_r1 = Log2p(g.g21 * b / (g.g11 * a + 1.0));
  const double t1_alone = Log2p(g.g11 * a);
  const double t2_alone = Log2p(g.g22 * b);
  switch (s) {
    case Strategy::kNoSic:
      *r1 = t1_at_r1;
      *r2 = t2_at_r2;
      break;
    case Strategy::kPartialSicR2:
      *r1 = std::min(t1_at_r2, t1_at_r1);
      *r2 = t2_alone;
      break;
    case Strategy::kPartialSicR1:
      *r1 = t1_alone;
      *r2 = std::min(t2_at_r1, t2_at_r2);
      break;
    case Strategy::kFullSic:
      *r1 = std::min(t1_at_r2, t1_alone);
      *r2 = std::min(t2_at_r1, t2_alone);
      break;
  }
  return *r1 + *r2;
}

std::vector<double> Axis(double hi, int n) {
  if (hi == 0.0) return {0.0};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = hi * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

}  // namespace

void GridSpec::Validate() const {
  if (n_points < 11) throw std::domain_error("grid needs at least 11 points per axis");
}

Allocation GridOptimize(const ChannelGains& gains, Strategy strategy, const GridSpec& spec) {
  gains.Validate();
  spec.Validate();
  const std::vector<double> ax1 = Axis(gains.gamma1_max, spec.n_points);
  const std::vector<double> ax2 = Axis(gains.gamma2_max, spec.n_points);
  Allocation best{strategy, 0.0, 0.0, 0.0, 0.0, -1.0};
  for (double a : ax1) {
    for (double b : ax2) {
      double r1 = 0.0;
      double r2 = 0.0;
      const double sum = Objective(gains, strategy, a, b, &r1, &r2);
      if (sum > best.sum_rate) best = {strategy, a, b, r1, r2, r1 + r2};
    }
  }
  return best;
}

Allocation GridOptimizeGlobal(const ChannelGains& gains, const GridSpec& spec) {
  Allocation best = GridOptimize(gains, Strategy::kNoSic, spec);
  for (Strategy s : {Strategy::kPartialSicR2, Strategy::kPartialSicR1, Strategy::kFullSic}) {
    Allocation a = GridOptimize(gains, s, spec);
    if (a.sum_rate > best.sum_rate) best = a;
  }
  return best;
}

double GridLipschitzTolerance(const ChannelGains& gains, const GridSpec& spec) {
  spec.Validate();
  const double gmax = std::max({gains.g11, gains.g12, gains.g21, gains.g22});
  const double lipschitz = 2.0 * gmax / std::numbers::ln2;
  const double h1 = gains.gamma1_max / (spec.n_points - 1);
  const double h2 = gains.gamma2_max / (spec.n_points - 1);
  return lipschitz * (h1 + h2) / 2.0;
}

double TimeAverage(const Trajectory& traj, int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1 period");
  const std::size_t begin = traj.SteadyBegin();
  const std::size_t span = static_cast<std::size_t>(window) * traj.steps_per_period;
  if (traj.steps_per_period <= 0 || begin + span >= traj.samples.size()) {
    throw std::invalid_argument("trajectory holds fewer steady periods than the window");
  }
  double area = 0.0;
  for (std::size_t k = begin; k < begin + span; ++k) {
    area += 0.5 * (traj.samples[k].Throughput() + traj.samples[k + 1].Throughput()) * traj.dt;
  }
  return area / (static_cast<double>(span) * traj.dt);
}

ChannelGains RandomGains(std::mt19937_64& rng, bool dominant, double gamma_max_hi) {
  std::uniform_real_distribution<double> direct(0.2, 2.0);
  std::uniform_real_distribution<double> any(0.05, 2.0);
  std::uniform_real_distribution<double> frac(0.01, 0.99);
  std::uniform_real_distribution<double> snr(0.0, gamma_max_hi);
  ChannelGains g;
  if (dominant) {
    g.g11 = direct(rng);
    g.g22 = direct(rng);
    g.g12 = frac(rng) * g.g11;
    g.g21 = frac(rng) * g.g22;
  } else {
    g.g11 = any(rng);
    g.g12 = any(rng);
    g.g21 = any(rng);
    g.g22 = any(rng);
  }
  g.gamma1_max = snr(rng);
  g.gamma2_max = snr(rng);
  return g;
}

SymmetricChannel RandomSymmetric(std::mt19937_64& rng, double gamma_lo, double gamma_hi,
                                 bool mu_ge_eps) {
  std::uniform_real_distribution<double> margin(0.01, 0.99);
  std::uniform_real_distribution<double> log_gamma(std::log(gamma_lo), std::log(gamma_hi));
  SymmetricChannel s{margin(rng), margin(rng), std::exp(log_gamma(rng))};
  if (mu_ge_eps && s.mu < s.epsilon) std::swap(s.epsilon, s.mu);
  return s;
}

}  // namespace sicopt
