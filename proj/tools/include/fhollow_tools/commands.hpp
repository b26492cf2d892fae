#pragma once

// Subcommands of the fhollow tool, callable without a process boundary.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fhollow/polytope.hpp"

namespace fhollow::tools {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kDimensionError = 3,
  kCheckFailure = 4,
};

/// Reads and parses a polytope file, then takes the hull. Throws ParseError
/// or DimensionError.
Polytope load_polytope(const std::string& path);

struct FineArgs {
  std::string path;
  std::optional<std::string> dilation;  // "p/q"
  std::optional<int> brute;
};
int cmd_fine(const FineArgs& args, std::ostream& out, std::ostream& err);

int cmd_multipliers(const std::string& path, std::ostream& out, std::ostream& err);

struct ClassifyArgs {
  std::string target;  // polygons, weakly-sporadic, sporadic
  std::string out_path;
  unsigned jobs = 1;
  bool resume = false;
  bool check = false;
};
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::optional<std::string> path;  // otherwise the named corpus
  std::optional<int> bound;
  /// Test fixture: shifts the first canonical offset before the Fine
  /// interior is computed, which the oracle must detect.
  bool corrupt_offset = false;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// One line of a verification report.
struct Check {
  std::string name;
  enum class Status { kPass, kFail, kSuperset } status;
  std::string detail;
};

/// The property checks run by cmd_verify on one polytope.
std::vector<Check> verify_polytope(const Polytope& p, const VerifyArgs& args);

/// FHOLLOW_JOBS when set to a positive integer, otherwise 1.
unsigned default_jobs();

}  // namespace fhollow::tools
