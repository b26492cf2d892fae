#pragma once

// Enumeration of lattice subpolytopes up to affine unimodular equivalence and
// the classification pipelines built on it.

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fhollow/fine_interior.hpp"
#include "fhollow/io.hpp"
#include "fhollow/lattice_width.hpp"
#include "fhollow/normal_form.hpp"
#include "fhollow/polytope.hpp"

namespace fhollow {

/// Set of equivalence classes keyed by digest, with full matrix comparison
/// on every digest hit. Optionally backed by an append-only log so an
/// interrupted enumeration can be resumed:
///
///   D <digest> <provenance> <rows> <cols> <entries...> <npoints> <coords...>
///   X <digest>
///
/// "D" records a new class together with the lattice points of its
/// representative, "X" marks it as expanded. A truncated final line is
/// ignored on replay.
class DedupStore {
 public:
  struct Entry {
    NormalForm form;
    std::vector<IntVector> points;
    std::string provenance;
    bool expanded = false;
  };

  DedupStore() = default;
  /// Replays an existing log when resume is set, otherwise truncates it.
  DedupStore(const std::filesystem::path& log, bool resume);
  ~DedupStore();
  DedupStore(const DedupStore&) = delete;
  DedupStore& operator=(const DedupStore&) = delete;

  /// Inserts the class if absent; returns true when it was new.
  bool insert(const NormalForm& form, const std::vector<IntVector>& points, const std::string& provenance);
  bool contains(const NormalForm& form) const;
  void mark_expanded(const NormalForm& form);
  size_t size() const;
  /// Snapshot of all entries in insertion order.
  std::vector<Entry> entries() const;

 private:
  std::optional<size_t> find_locked(const NormalForm& form) const;
  void append(const std::string& line);

  mutable std::mutex mutex_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::vector<size_t>> index_;
  std::FILE* log_ = nullptr;
};

struct EnumerationOptions {
  unsigned jobs = 1;
  /// Nodes failing the filter are kept but their children are not generated.
  std::function<bool(const Polytope&)> expand;
  std::string provenance = "root";
  /// Shared or persisted store; a private one is used when null.
  DedupStore* store = nullptr;
  std::function<void(const std::string&)> log;
};

struct SubpolytopeClass {
  Polytope polytope;
  std::vector<IntVector> points;
  NormalForm form;
  std::string provenance;
};

/// Breadth-first closure of root under "hull of the lattice points minus one
/// vertex", keeping full-dimensional children, one representative per
/// class. Returns every class in the store, sorted by digest. The result is
/// independent of the number of jobs. Throws std::domain_error for a
/// non-lattice or lower-dimensional root.
std::vector<SubpolytopeClass> subpolytope_classes(const Polytope& root, const EnumerationOptions& options = {});

/// Width exactly two and three width directions of the plane type that cut
/// out a triangle. Throws std::domain_error("use width-1 projection
/// predicate") for width one and for non-3-dimensional input.
bool projects_to_2delta2(const Polytope& p);
bool projects_to_2delta2(const Polytope& p, const WidthCertificate& cert);

/// F-hollow, width above one and no projection onto 2Δ2.
bool is_sporadic(const Polytope& p);

/// Ordered pairs (A, B) of lattice polytopes with A + B = R, A containing the
/// lexicographically least point of R (so that B contains the origin as its
/// least point). Throws std::domain_error for a non-lattice R.
std::vector<std::pair<Polytope, Polytope>> minkowski_summand_pairs(const Polytope& r);

struct ClassificationRecord {
  NormalForm form;
  std::vector<IntVector> vertices;
  Integer width;
  Rational mu;
  Rational mu_cc;
  int dim_fine_at_mu = -1;
  bool f_hollow = false;
  bool weakly_sporadic = false;
  bool sporadic = false;
  bool canonically_closed_at_mu = false;
  std::optional<GorensteinData> gorenstein;
  std::string provenance;
};

/// All fields recomputed from the polytope. The sporadic flag is only
/// evaluated in dimension three and is false otherwise.
ClassificationRecord make_record(const Polytope& p, const std::string& provenance);
ResultLine to_result_line(const ClassificationRecord& r);

struct PipelineOptions {
  unsigned jobs = 1;
  /// Directory for resumable enumeration logs; none when empty.
  std::filesystem::path state_dir;
  bool resume = false;
  std::function<void(const std::string&)> log;
};

/// Polygons in 2Δ2 that are weakly sporadic (four classes).
std::vector<ClassificationRecord> classify_polygons(const PipelineOptions& options = {});
/// Lattice polygons with exactly one interior lattice point that are
/// reflexive, found inside 4Δ2.
std::vector<Polytope> reflexive_polygons(const PipelineOptions& options = {});
std::vector<ClassificationRecord> classify_weakly_sporadic_width2(const PipelineOptions& options = {});
std::vector<ClassificationRecord> classify_weakly_sporadic_width1(const PipelineOptions& options = {});
std::vector<ClassificationRecord> classify_weakly_sporadic_all(const PipelineOptions& options = {});
std::vector<ClassificationRecord> classify_sporadic(const PipelineOptions& options = {});

/// Five vertices, two of them on opposite sides of the plane of the other
/// three, with the connecting segment through the relative interior of the
/// triangle.
bool is_bipyramid(const std::vector<IntVector>& vertices);
size_t bipyramid_census(const std::vector<ClassificationRecord>& records);

/// Count of records per value of mu, keyed by mu.
std::map<Rational, size_t> mu_histogram(const std::vector<ClassificationRecord>& records);

}  // namespace fhollow
