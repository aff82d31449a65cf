#include "sicopt/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sicopt/symmetric.hpp"

namespace sicopt {
namespace {

SymmetricChannel Oriented(const SymmetricChannel& sym) {
  return sym.mu >= sym.epsilon ? sym : sym.Swapped();
}

void RequirePeriod(double period) {
  if (!(period > 0.0) || !std::isfinite(period)) throw std::domain_error("period must be > 0");
}

}  // namespace

double TPrime(const SymmetricChannel& sym, double period) {
  RequirePeriod(period);
  const Landmarks l = ComputeLandmarks(Oriented(sym));
  return period * l.op2 / l.ws2;
}

double TDoublePrime(const SymmetricChannel& sym, double period) {
  RequirePeriod(period);
  const Landmarks l = ComputeLandmarks(Oriented(sym));
  return period * l.th / l.ws2;
}

ExpectedRates ComputeExpectedRates(const SymmetricChannel& sym) {
  const Landmarks l = ComputeLandmarks(Oriented(sym));
  ExpectedRates out;
  out.t_prime = l.op2 / l.ws2;
  out.t_double_prime = l.th / l.ws2;
  const double greedy = out.t_prime * (l.mv - l.ws1) + l.ws1;
  const double sawtooth = l.th * l.th / (2.0 * l.ws2) + l.ws2 - l.th;
  if (sym.mu >= sym.epsilon) {
    out.e_r1 = greedy;
    out.e_r2 = sawtooth;
  } else {
    out.e_r1 = sawtooth;
    out.e_r2 = greedy;
  }
  out.e_sum = out.e_r1 + out.e_r2;
  return out;
}

double EfficiencyOsc(const SymmetricChannel& sym) {
  return ComputeExpectedRates(sym).e_sum / OptimalSumRate(sym);
}

double BenchmarkGreedy(const SymmetricChannel& sym) { return SumRateNoSic(sym); }

double BenchmarkOrthogonal(const SymmetricChannel& sym) {
  sym.Validate();
  return Phi(sym.gamma);
}

ComparisonRow Compare(const SymmetricChannel& sym) {
  ComparisonRow row;
  row.epsilon = sym.epsilon;
  row.mu = sym.mu;
  row.gamma = sym.gamma;
  row.r_opt = OptimalSumRate(sym);
  row.e_osc = ComputeExpectedRates(sym).e_sum;
  row.e_greedy = BenchmarkGreedy(sym);
  row.e_orth = BenchmarkOrthogonal(sym);
  row.rho_osc = row.e_osc / row.r_opt;
  row.rho_greedy = row.e_greedy / row.r_opt;
  row.rho_orth = row.e_orth / row.r_opt;
  row.region = ClassifyRegion(sym);
  return row;
}

std::vector<double> OpenUnitGrid(double step) {
  if (!(step > 0.0 && step < 0.5)) throw std::domain_error("grid step must lie in (0, 0.5)");
  std::vector<double> out;
  const double inv = 1.0 / step;
  const long m = std::lround(inv);
  if (std::abs(inv - static_cast<double>(m)) < 1e-9 * inv) {
    for (long i = 1; i < m; ++i) out.push_back(static_cast<double>(i) / static_cast<double>(m));
    return out;
  }
  for (long i = 1;; ++i) {
    const double x = static_cast<double>(i) * step;
    if (x >= 1.0) break;
    out.push_back(x);
  }
  return out;
}

std::vector<ComparisonRow> Sweep(double gamma, double grid_step, std::optional<double> mu_fixed) {
  const std::vector<double> axis = OpenUnitGrid(grid_step);
  std::vector<ComparisonRow> rows;
  if (mu_fixed) {
    rows.reserve(axis.size());
    for (double eps : axis) rows.push_back(Compare({eps, *mu_fixed, gamma}));
    return rows;
  }
  rows.reserve(axis.size() * axis.size());
  for (double eps : axis) {
    for (double mu : axis) rows.push_back(Compare({eps, mu, gamma}));
  }
  return rows;
}

}  // namespace sicopt
