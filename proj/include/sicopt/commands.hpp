#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "sicopt/centralized.hpp"
#include "sicopt/channel.hpp"
#include "sicopt/sim.hpp"

namespace sicopt::cli {

// Subcommand bodies. Each validates its inputs before computing (throwing
// std::domain_error, which the executable maps to exit code 2), writes CSV to
// `csv` and a human-readable summary to `log`, and returns the exit code.

/// Shortest decimal that round-trips to the same double.
std::string FormatDouble(double x);

std::string StrategyLabel(Strategy s);

/// Decoding architecture without the receiver index: NoSic, PartialSic, FullSic.
/// The `compare` region column uses it.
std::string_view ArchitectureLabel(Strategy s);

struct SolveInput {
  std::optional<ChannelGains> gains;
  std::optional<SymmetricChannel> sym;
};
int Solve(const SolveInput& in, std::ostream& log);

int Regions(double gamma, double step, std::ostream& csv, std::ostream& log);

int Trace(const SimConfig& cfg, std::ostream& csv, std::ostream& log);

int Surface(double gamma, double step, std::ostream& csv, std::ostream& log);

int Compare(double gamma, double mu, double step, std::ostream& csv, std::ostream& log);

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  int instances = 200;
  int grid_points = 201;
  /// Multiplies every verification tolerance. Negative values make the
  /// tolerance-based suites fail; used to check that failures propagate.
  double tolerance_scale = 1.0;
};
int Verify(const VerifyOptions& opt, std::ostream& log);

}  // namespace sicopt::cli
