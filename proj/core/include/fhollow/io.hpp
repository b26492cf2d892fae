#pragma once

// Text formats: polytope files (JSON) and classification result lines
// (JSON Lines with a schema header).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhollow/types.hpp"

namespace fhollow {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"dim": d, "vertices": [[...], ...]}; each coordinate an integer or a
/// string "a/b".
struct PolytopeFile {
  size_t dim = 0;
  std::vector<RatVector> vertices;
  friend bool operator==(const PolytopeFile&, const PolytopeFile&) = default;
};

/// Throws ParseError on malformed text or rows of the wrong length, and
/// DimensionError when dim is outside [1, 5].
PolytopeFile parse_polytope_file(const std::string& text);
/// Integers are written as JSON numbers when they fit in 64 bits, every
/// other coordinate as a "p/q" string.
std::string serialize_polytope_file(const PolytopeFile& file);

inline constexpr int kResultSchemaVersion = 1;

struct ResultLine {
  std::string digest;
  std::vector<IntVector> vertices;  // one row per vertex
  Integer width;
  Rational mu;
  int dim_fine_at_mu = -1;
  bool f_hollow = false;
  bool weakly_sporadic = false;
  bool sporadic = false;
  bool canonically_closed_at_mu = false;
  std::optional<Integer> gorenstein_index;
  std::string provenance;
  friend bool operator==(const ResultLine&, const ResultLine&) = default;
};

/// The header line that starts every result file.
std::string result_header(const std::string& target);
std::string serialize_result_line(const ResultLine& r);
/// Throws ParseError.
ResultLine parse_result_line(const std::string& line);

}  // namespace fhollow
