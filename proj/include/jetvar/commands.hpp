#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "jetvar/numcheck.hpp"
#include "jetvar/problem.hpp"
#include "jetvar/render.hpp"
#include "jetvar/varcalc.hpp"

namespace jetvar {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct CommandOptions {
  Format format = Format::Text;
  IotaMode iota = IotaMode::Weighted;
  ReductionStrategy strategy = ReductionStrategy::MinAxis;
  bool timing = false;  // write measured runtimes instead of null
};

/// stdout text and exit code of one command; diagnostics go to `notes`
/// (stderr in the CLI).
struct CommandResult {
  std::string output;
  std::string notes;
  int exit_code = kExitOk;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Text prints one "epsilon[u] = ..." line per field. A form with covectors
/// beyond order 0 (possible with --iota literal) prints "epsilon = <form>".
/// With the weighted convention the result is cross-checked against the
/// direct Euler-Lagrange formula; a disagreement is a check failure.
CommandResult cmd_el(const ProblemFile& problem, const CommandOptions& options);

/// epsilon as in cmd_el followed by "kappa = <form>".
CommandResult cmd_decompose(const ProblemFile& problem, const CommandOptions& options);

/// Runs the first-variation and Green checks on the grid and the symbolic
/// Green residual with opaque section and variation. Missing sections and
/// variations are seeded trig polynomials. LaTeX is unsupported.
CommandResult cmd_verify(const ProblemFile& problem, const CommandOptions& options);

/// Section and variation used by cmd_verify: sections first, then
/// variations, one trig polynomial per field drawn in field order; entries
/// given in the file replace the drawn ones.
std::pair<SectionSym, VerticalFieldSym> verification_data(const ProblemFile& problem);

/// Full command line: jetvar el|decompose|verify <file> [--format ...]
/// [--iota ...] [--strategy ...] [--timing].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetvar
