// Command-line front end: solve, regions, trace, surface, compare, verify.
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "sicopt/commands.hpp"

namespace {

constexpr int kUsageError = 2;

// CSV goes to --out when given (summary on stdout), otherwise to stdout with
// the summary on stderr.
struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* csv = &std::cout;
  std::ostream* log = &std::cerr;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::domain_error("cannot open output file " + path);
    csv = file.get();
    log = &std::cout;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate and power allocation for the two-user interference channel with SIC"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Globally optimal allocation for one channel");
  double g11 = 0, g12 = 0, g21 = 0, g22 = 0, gm1 = 0, gm2 = 0;
  double eps = 0, mu = 0, gamma = 0;
  auto* o_g11 = solve->add_option("--g11", g11, "Gain T1 -> R1");
  auto* o_g12 = solve->add_option("--g12", g12, "Gain T1 -> R2");
  auto* o_g21 = solve->add_option("--g21", g21, "Gain T2 -> R1");
  auto* o_g22 = solve->add_option("--g22", g22, "Gain T2 -> R2");
  auto* o_gm1 = solve->add_option("--gamma1-max", gm1, "Peak SNR of T1");
  auto* o_gm2 = solve->add_option("--gamma2-max", gm2, "Peak SNR of T2");
  auto* o_eps = solve->add_option("--epsilon", eps, "Symmetric margin of g21 = 1 - epsilon");
  auto* o_mu = solve->add_option("--mu", mu, "Symmetric margin of g12 = 1 - mu");
  auto* o_gamma = solve->add_option("--gamma", gamma, "Symmetric peak SNR");

  // regions / surface
  double step = 0.01;
  std::string out_path;
  auto* regions = app.add_subcommand("regions", "Optimal-strategy map over (epsilon, mu)");
  regions->add_option("--gamma", gamma, "Peak SNR")->required();
  regions->add_option("--step", step, "Grid step in (0, 0.5)");
  regions->add_option("--out", out_path, "CSV output path");

  auto* surface = app.add_subcommand("surface", "Efficiency of the oscillation scheme");
  surface->add_option("--gamma", gamma, "Peak SNR")->required();
  surface->add_option("--step", step, "Grid step in (0, 0.5)");
  surface->add_option("--out", out_path, "CSV output path");

  auto* compare = app.add_subcommand("compare", "Oscillation vs greedy vs orthogonal at fixed mu");
  compare->add_option("--gamma", gamma, "Peak SNR")->required();
  compare->add_option("--mu", mu, "Fixed mu")->required();
  compare->add_option("--step", step, "Epsilon step in (0, 0.5)");
  compare->add_option("--out", out_path, "CSV output path");

  // trace
  sicopt::SimConfig cfg;
  bool include_init = true;
  auto* trace = app.add_subcommand("trace", "Simulate the decentralized algorithm");
  trace->add_option("--epsilon", cfg.sym.epsilon, "Margin epsilon")->required();
  trace->add_option("--mu", cfg.sym.mu, "Margin mu")->required();
  trace->add_option("--gamma", cfg.sym.gamma, "Peak SNR")->required();
  trace->add_option("--period", cfg.period, "Sawtooth period T in seconds");
  trace->add_option("--dt", cfg.dt, "Time step in seconds");
  trace->add_option("--periods", cfg.n_periods, "Steady-state periods");
  trace->add_option("--include-init", include_init, "Simulate the init phase (true/false)");
  trace->add_option("--out", out_path, "CSV output path");

  // verify
  sicopt::cli::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run oracle and proposition checks");
  verify->add_option("--seed", vopt.seed, "RNG seed");
  verify->add_option("--instances", vopt.instances, "Random instances per suite");
  verify->add_option("--grid-points", vopt.grid_points, "Oracle grid points per axis");
  verify->add_option("--tolerance-scale", vopt.tolerance_scale, "Scale all tolerances (test hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*solve) {
      sicopt::cli::SolveInput in;
      const bool any_gain = *o_g11 || *o_g12 || *o_g21 || *o_g22 || *o_gm1 || *o_gm2;
      const bool any_sym = *o_eps || *o_mu || *o_gamma;
      if (any_gain) {
        if (!(*o_g11 && *o_g12 && *o_g21 && *o_g22 && *o_gm1 && *o_gm2)) {
          throw std::domain_error("all of --g11 --g12 --g21 --g22 --gamma1-max --gamma2-max needed");
        }
        in.gains = sicopt::ChannelGains{g11, g12, g21, g22, gm1, gm2};
      }
      if (any_sym) {
        if (!(*o_eps && *o_mu && *o_gamma)) {
          throw std::domain_error("all of --epsilon --mu --gamma needed");
        }
        in.sym = sicopt::SymmetricChannel{eps, mu, gamma};
      }
      return sicopt::cli::Solve(in, std::cout);
    }
    if (*verify) return sicopt::cli::Verify(vopt, std::cout);

    Output out(out_path);
    if (*regions) return sicopt::cli::Regions(gamma, step, *out.csv, *out.log);
    if (*surface) return sicopt::cli::Surface(gamma, step, *out.csv, *out.log);
    if (*compare) return sicopt::cli::Compare(gamma, mu, step, *out.csv, *out.log);
    if (*trace) {
      cfg.include_init = include_init;
      cfg.Validate();
      return sicopt::cli::Trace(cfg, *out.csv, *out.log);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
