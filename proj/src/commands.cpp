#include "sicopt/commands.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sicopt/analysis.hpp"
#include "sicopt/centralized.hpp"
#include "sicopt/oracle.hpp"
#include "sicopt/symmetric.hpp"

namespace sicopt::cli {
namespace {

std::string Fixed3(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << x;
  return os.str();
}

void RequireGamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::domain_error("--gamma must be > 0");
}

void PrintAllocation(const Allocation& a, std::ostream& log) {
  log << "strategy: " << StrategyLabel(a.strategy) << "\n"
      << "gamma1: " << FormatDouble(a.gamma1) << "\n"
      << "gamma2: " << FormatDouble(a.gamma2) << "\n"
      << "r1: " << FormatDouble(a.r1) << "\n"
      << "r2: " << FormatDouble(a.r2) << "\n"
      << "sum_rate: " << FormatDouble(a.sum_rate) << "\n";
}

struct SuiteTally {
  const char* name;
  int passed = 0;
  int total = 0;

  void Record(bool ok) {
    ++total;
    if (ok) ++passed;
  }
  bool Ok() const { return passed == total; }
};

}  // namespace

std::string FormatDouble(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return {buf, res.ptr};
}

std::string_view ArchitectureLabel(Strategy s) {
  switch (s) {
    case Strategy::kNoSic: return "NoSic";
    case Strategy::kPartialSicR1:
    case Strategy::kPartialSicR2: return "PartialSic";
    case Strategy::kFullSic: return "FullSic";
  }
  return "?";
}

std::string StrategyLabel(Strategy s) {
  switch (s) {
    case Strategy::kNoSic: return "No-SIC";
    case Strategy::kPartialSicR1: return "Partial-SIC (R1 cancels)";
    case Strategy::kPartialSicR2: return "Partial-SIC (R2 cancels)";
    case Strategy::kFullSic: return "Full-SIC";
  }
  return "?";
}

int Solve(const SolveInput& in, std::ostream& log) {
  if (in.gains.has_value() == in.sym.has_value()) {
    throw std::domain_error("give either the six gain flags or --epsilon/--mu/--gamma");
  }
  if (in.sym) {
    in.sym->Validate();
    const Allocation a = SolveGlobal(in.sym->ToGains());
    PrintAllocation(a, log);
    log << "region: " << StrategyLabel(ClassifyRegion(*in.sym)) << "\n"
        << "r_ns: " << FormatDouble(SumRateNoSic(*in.sym)) << "\n"
        << "r_pi: " << FormatDouble(SumRatePartialI(*in.sym)) << "\n"
        << "r_pii: " << FormatDouble(SumRatePartialII(*in.sym)) << "\n";
    return 0;
  }
  in.gains->Validate();
  PrintAllocation(SolveGlobal(*in.gains), log);
  return 0;
}

int Regions(double gamma, double step, std::ostream& csv, std::ostream& log) {
  RequireGamma(gamma);
  const std::vector<double> axis = OpenUnitGrid(step);
  csv << "epsilon,mu,strategy,r_ns,r_pi,r_pii\n";
  for (double eps : axis) {
    for (double mu : axis) {
      const SymmetricChannel sym{eps, mu, gamma};
      csv << FormatDouble(eps) << ',' << FormatDouble(mu) << ',' << ToString(ClassifyRegion(sym))
          << ',' << FormatDouble(SumRateNoSic(sym)) << ',' << FormatDouble(SumRatePartialI(sym))
          << ',' << FormatDouble(SumRatePartialII(sym)) << '\n';
    }
  }
  log << "q(gamma) = " << std::fixed << std::setprecision(5) << DiagonalIntersectionQ(gamma)
      << std::defaultfloat << "\n";
  return 0;
}

int Trace(const SimConfig& cfg, std::ostream& csv, std::ostream& log) {
  cfg.Validate();
  const Trajectory traj = Simulate(cfg);
  csv << "t,r1,r2,r1_decoded,r2_decoded,sic_at_R1,phase\n";
  for (const Sample& s : traj.samples) {
    csv << FormatDouble(s.t) << ',' << FormatDouble(s.r1) << ',' << FormatDouble(s.r2) << ','
        << s.r1_decoded << ',' << s.r2_decoded << ',' << s.sic_at_r1 << ','
        << (s.phase == Phase::kInit ? "init" : "steady") << '\n';
  }
  const Events ev = DetectEvents(traj, cfg.sym);
  const auto line = [&log](const char* name, const std::optional<double>& t) {
    log << name << ": " << (t ? Fixed3(*t) : std::string("none")) << "\n";
  };
  log << "greedy transmitter: T" << static_cast<int>(traj.greedy) << "\n";
  line("first R2 decode", ev.first_r2_decode);
  line("first R1 decode", ev.first_r1_decode);
  line("greedy switch to mv", ev.greedy_switch);
  line("SIC loss", ev.sic_loss);
  line("ramp jump to ws", ev.ramp_jump);
  return 0;
}

int Surface(double gamma, double step, std::ostream& csv, std::ostream& log) {
  RequireGamma(gamma);
  const std::vector<ComparisonRow> rows = Sweep(gamma, step);
  csv << "epsilon,mu,e_sum,r_opt,rho_osc\n";
  double best = 0.0;
  for (const ComparisonRow& r : rows) {
    csv << FormatDouble(r.epsilon) << ',' << FormatDouble(r.mu) << ',' << FormatDouble(r.e_osc)
        << ',' << FormatDouble(r.r_opt) << ',' << FormatDouble(r.rho_osc) << '\n';
    best = std::max(best, r.rho_osc);
  }
  log << "rows: " << rows.size() << "\nmax rho_osc: " << FormatDouble(best) << "\n";
  return 0;
}

int Compare(double gamma, double mu, double step, std::ostream& csv, std::ostream& log) {
  RequireGamma(gamma);
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("--mu must lie in (0, 1)");
  const std::vector<ComparisonRow> rows = Sweep(gamma, step, mu);
  csv << "epsilon,rho_osc,rho_greedy,rho_orth,region\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ComparisonRow& r = rows[i];
    csv << FormatDouble(r.epsilon) << ',' << FormatDouble(r.rho_osc) << ','
        << FormatDouble(r.rho_greedy) << ',' << FormatDouble(r.rho_orth) << ','
        << ArchitectureLabel(r.region) << '\n';
    const std::string_view prev = i > 0 ? ArchitectureLabel(rows[i - 1].region) : "";
    if (i > 0 && prev != ArchitectureLabel(r.region)) {
      log << "region transition between epsilon " << FormatDouble(rows[i - 1].epsilon) << " ("
          << prev << ") and " << FormatDouble(r.epsilon) << " (" << ArchitectureLabel(r.region)
          << ")\n";
    }
  }
  return 0;
}

int Verify(const VerifyOptions& opt, std::ostream& log) {
  if (opt.instances < 0) throw std::domain_error("--instances must be >= 0");
  const GridSpec grid{opt.grid_points};
  grid.Validate();
  if (opt.instances == 0) {
    log << "warning: 0 instances requested, nothing to verify\n";
    return 0;
  }
  const double scale = opt.tolerance_scale;
  std::mt19937_64 rng(opt.seed);

  SuiteTally oracle{"closed form vs grid oracle"};
  for (int i = 0; i < opt.instances; ++i) {
    const ChannelGains g = RandomGains(rng, i % 2 == 0, 10.0);
    const Allocation solved = SolveGlobal(g);
    const Allocation brute = GridOptimizeGlobal(g, grid);
    const double tol = scale * GridLipschitzTolerance(g, grid);
    oracle.Record(IsFeasible(g, solved) && solved.sum_rate >= brute.sum_rate - tol &&
                  solved.sum_rate - brute.sum_rate <= std::abs(tol));
  }

  SuiteTally theorem{"expected rate vs simulation"};
  for (int i = 0; i < opt.instances; ++i) {
    const SymmetricChannel sym = RandomSymmetric(rng, 0.1, 20.0, true);
    SimConfig cfg{sym, 1.0, 1e-3, 1, false};
    const double avg = TimeAverage(Simulate(cfg), 1);
    const double tol = scale * 5.0 * cfg.dt * Phi(sym.gamma);
    theorem.Record(std::abs(ComputeExpectedRates(sym).e_sum - avg) <= tol);
  }

  SuiteTally prop1{"dominant links use both peak powers"};
  for (int i = 0; i < opt.instances; ++i) {
    prop1.Record(CheckProposition1(RandomGains(rng, true, 10.0)));
  }

  SuiteTally prop2{"low SNR favors no SIC"};
  for (int i = 0; i < opt.instances; ++i) {
    ChannelGains g = RandomGains(rng, true, 1.0);
    const double t2 = (g.g11 - g.g12) / (g.g21 * g.g12);
    const double t1 = (g.g22 - g.g21) / (g.g12 * g.g21);
    g.gamma1_max = g.gamma2_max = 0.01 * std::min(t1, t2);
    const auto [c1, c2] = Proposition2Conditions(g, g.gamma1_max, g.gamma2_max);
    prop2.Record(c1 && c2 && SolveGlobal(g).strategy == Strategy::kNoSic);
  }

  SuiteTally prop3{"high SNR single-transmitter bound"};
  for (int i = 0; i < opt.instances; ++i) {
    SymmetricChannel sym = RandomSymmetric(rng, 1e6, 1e6, false);
    // Omega is taken on the orientation whose partial-SIC form is optimal.
    const SymmetricChannel winner = sym.mu <= sym.epsilon ? sym : sym.Swapped();
    const double omega = SingleTxGapOmega(winner);
    const double r_pi = SumRatePartialI(winner);
    const bool bound = SolveGlobal(sym.ToGains()).sum_rate <= Phi(sym.gamma) * (1.0 + 5.0 * omega);
    prop3.Record(bound && Phi(sym.gamma) >= r_pi * (1.0 - omega) - 1e-12);
  }

  bool ok = true;
  for (const SuiteTally* s : {&oracle, &theorem, &prop1, &prop2, &prop3}) {
    log << (s->Ok() ? "PASS " : "FAIL ") << s->name << ": " << s->passed << "/" << s->total
        << "\n";
    ok = ok && s->Ok();
  }
  return ok ? 0 : 1;
}

}  // namespace sicopt::cli
