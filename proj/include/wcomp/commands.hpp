#pragma once

// Subcommands of the `wcomp` tool. Each returns the process exit code and
// writes its machine-readable report to `out` (or to the --out path) and
// human-readable notes to `log`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wcomp/symbol_spec.hpp"

namespace wcomp {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInconclusive = 2,
  kExitUsage = 3,
  kExitInput = 4,
  kExitNoConvergence = 5,
};

int exit_code_for(Verdict v);

struct CheckOptions {
  std::string spec_path;
  std::optional<std::string> out_path;
  std::optional<std::string> dump_margins_path;
  std::optional<double> tol;
  std::optional<GridSpec> grid;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  std::vector<std::string> only;
  std::optional<std::string> out_path;
};

struct IterateOptions {
  std::string spec_path;
  std::optional<std::string> out_path;
  int deg = kDefaultDegree;
  double tol = 1e-10;
  int max_iter = 10000;
  // "h_alpha", "one", or "extreme:<theta>" (the extreme point with lambda = e^{i theta}).
  std::string start = "h_alpha";
  std::optional<std::string> second_start;
};

struct ClassifyOptions {
  std::string spec_path;
  std::optional<std::string> out_path;
  // Fraction of boundary angles allowed to disagree with the majority.
  double fraction_tol = 1e-2;
  std::optional<GridSpec> grid;
};

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& log);
int cmd_verify_examples(const VerifyOptions& opts, std::ostream& out, std::ostream& log);
int cmd_iterate(const IterateOptions& opts, std::ostream& out, std::ostream& log);
int cmd_classify(const ClassifyOptions& opts, std::ostream& out, std::ostream& log);

// Start function for `iterate` given its textual choice; throws SpecError.
TaylorPoly start_function(const AlphaParam& alpha, const std::string& choice, int deg);

}  // namespace wcomp
