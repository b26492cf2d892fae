#include "fhollow/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fhollow/linalg.hpp"
#include "fhollow/named.hpp"

namespace fhollow {

// ---------------------------------------------------------------- DedupStore

namespace {

std::string encode_entry(const DedupStore::Entry& e) {
  std::ostringstream os;
  const IntMatrix& m = e.form.canonical_vertices;
  os << "D " << e.form.digest << ' ' << e.provenance << ' ' << m.rows() << ' ' << m.cols();
  for (const auto& x : m.data()) os << ' ' << x;
  os << ' ' << e.points.size();
  for (const auto& p : e.points)
    for (const auto& x : p) os << ' ' << x;
  os << '\n';
  return os.str();
}

std::optional<DedupStore::Entry> decode_entry(const std::string& line) {
  std::istringstream is(line);
  std::string tag, tok;
  DedupStore::Entry e;
  size_t rows = 0, cols = 0, npoints = 0;
  if (!(is >> tag >> e.form.digest >> e.provenance >> rows >> cols) || tag != "D") return std::nullopt;
  e.form.canonical_vertices = IntMatrix(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (!(is >> tok)) return std::nullopt;
      e.form.canonical_vertices(i, j) = Integer::parse(tok);
    }
  if (!(is >> npoints)) return std::nullopt;
  for (size_t k = 0; k < npoints; ++k) {
    IntVector p(rows);
    for (size_t i = 0; i < rows; ++i) {
      if (!(is >> tok)) return std::nullopt;
      p[i] = Integer::parse(tok);
    }
    e.points.push_back(std::move(p));
  }
  if (digest(e.form.canonical_vertices) != e.form.digest) return std::nullopt;
  return e;
}

}  // namespace

DedupStore::DedupStore(const std::filesystem::path& log, bool resume) {
  if (resume && std::filesystem::exists(log)) {
    std::ifstream in(log);
    std::string line;
    while (std::getline(in, line)) {
      if (in.eof()) break;  // no trailing newline: interrupted write
      if (line.rfind("D ", 0) == 0) {
        auto e = decode_entry(line);
        if (!e) continue;
        if (find_locked(e->form)) continue;
        index_[e->form.digest].push_back(entries_.size());
        entries_.push_back(std::move(*e));
      } else if (line.rfind("X ", 0) == 0) {
        const std::string d = line.substr(2);
        auto it = index_.find(d);
        if (it != index_.end())
          for (size_t i : it->second) entries_[i].expanded = true;
      }
    }
  }
  log_ = std::fopen(log.c_str(), resume ? "a" : "w");
  if (!log_) throw std::runtime_error("cannot open enumeration log " + log.string());
}

DedupStore::~DedupStore() {
  if (log_) std::fclose(log_);
}

std::optional<size_t> DedupStore::find_locked(const NormalForm& form) const {
  auto it = index_.find(form.digest);
  if (it == index_.end()) return std::nullopt;
  for (size_t i : it->second)
    if (entries_[i].form.canonical_vertices == form.canonical_vertices) return i;
  return std::nullopt;
}

void DedupStore::append(const std::string& line) {
  if (!log_) return;
  std::fputs(line.c_str(), log_);
  std::fflush(log_);
}

bool DedupStore::insert(const NormalForm& form, const std::vector<IntVector>& points, const std::string& provenance) {
  std::lock_guard lock(mutex_);
  if (find_locked(form)) return false;
  index_[form.digest].push_back(entries_.size());
  entries_.push_back({form, points, provenance, false});
  append(encode_entry(entries_.back()));
  return true;
}

bool DedupStore::contains(const NormalForm& form) const {
  std::lock_guard lock(mutex_);
  return find_locked(form).has_value();
}

void DedupStore::mark_expanded(const NormalForm& form) {
  std::lock_guard lock(mutex_);
  auto i = find_locked(form);
  if (!i || entries_[*i].expanded) return;
  entries_[*i].expanded = true;
  append("X " + form.digest + "\n");
}

size_t DedupStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::vector<DedupStore::Entry> DedupStore::entries() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

// --------------------------------------------------------------- enumeration

namespace {

template <class Fn>
void parallel_for(size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned count = static_cast<unsigned>(std::min<size_t>(jobs, n));
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

struct Node {
  Polytope polytope;
  std::vector<IntVector> points;
  NormalForm form;
};

struct Child {
  std::vector<IntVector> points;
  std::optional<Node> node;  // set when full-dimensional
};

}  // namespace

std::vector<SubpolytopeClass> subpolytope_classes(const Polytope& root, const EnumerationOptions& options) {
  if (!root.is_full_dimensional() || !root.is_lattice())
    throw std::domain_error("subpolytope enumeration requires a full-dimensional lattice polytope");

  DedupStore local;
  DedupStore& store = options.store ? *options.store : local;

  std::vector<Node> frontier;
  for (const auto& e : store.entries()) {
    if (e.expanded) continue;
    frontier.push_back({Polytope::convex_hull(e.points), e.points, e.form});
  }
  {
    Node r{root, lattice_points(root), affine_normal_form(root)};
    if (store.insert(r.form, r.points, options.provenance)) frontier.push_back(std::move(r));
  }

  size_t level = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), [](const Node& a, const Node& b) {
      if (a.points.size() != b.points.size()) return a.points.size() > b.points.size();
      return a.form.digest < b.form.digest;
    });
    if (options.log)
      options.log("level " + std::to_string(level) + ": " + std::to_string(frontier.size()) + " nodes, " +
                  std::to_string(store.size()) + " classes");

    std::vector<std::vector<Node>> children(frontier.size());
    parallel_for(frontier.size(), options.jobs, [&](size_t i) {
      const Node& node = frontier[i];
      if (options.expand && !options.expand(node.polytope)) return;
      const auto verts = node.polytope.lattice_vertices();
      for (const auto& v : verts) {
        std::vector<IntVector> pts;
        pts.reserve(node.points.size() - 1);
        for (const auto& q : node.points)
          if (q != v) pts.push_back(q);
        Polytope child = Polytope::convex_hull(pts);
        if (!child.is_full_dimensional()) continue;
        NormalForm nf = affine_normal_form(child);
        if (store.contains(nf)) continue;
        children[i].push_back({std::move(child), std::move(pts), std::move(nf)});
      }
    });

    // Insertion in frontier order keeps the chosen representatives
    // independent of scheduling.
    std::vector<Node> next;
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (auto& c : children[i])
        if (store.insert(c.form, c.points, options.provenance)) next.push_back(std::move(c));
      store.mark_expanded(frontier[i].form);
    }
    frontier = std::move(next);
    ++level;
  }

  std::vector<SubpolytopeClass> out;
  for (auto& e : store.entries())
    out.push_back({Polytope::convex_hull(e.points), std::move(e.points), std::move(e.form), std::move(e.provenance)});
  std::sort(out.begin(), out.end(),
            [](const SubpolytopeClass& a, const SubpolytopeClass& b) { return a.form.digest < b.form.digest; });
  return out;
}

// ------------------------------------------------------------ predicates

namespace {

IntVector cross(const IntVector& a, const IntVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// 0 = a w1 + b w2 + c w3 with a, b, c > 0 for three coplanar vectors
// spanning a plane.
bool origin_strictly_inside(const IntVector& w1, const IntVector& w2, const IntVector& w3) {
  // Barycentric weights are proportional to the signed areas of the
  // opposite sub-triangles, measured along the plane normal.
  IntVector n = cross(sub(w2, w1), sub(w3, w1));
  Integer a = dot(cross(w2, w3), n), b = dot(cross(w3, w1), n), c = dot(cross(w1, w2), n);
  return a.sign() > 0 && b.sign() > 0 && c.sign() > 0;
}

}  // namespace

bool projects_to_2delta2(const Polytope& p, const WidthCertificate& cert) {
  if (p.ambient_dim() != 3 || !p.is_full_dimensional()) throw std::domain_error("use width-1 projection predicate");
  if (cert.width == Rational(1)) throw std::domain_error("use width-1 projection predicate");
  if (cert.width != Rational(2)) return false;
  const auto& w = cert.directions;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      for (size_t k = j + 1; k < w.size(); ++k) {
        const IntVector& w1 = w[i];
        const IntVector& w2 = w[j];
        const IntVector& w3 = w[k];
        IntVector area = cross(sub(w2, w1), sub(w3, w1));
        if (content(area) != Integer(3)) continue;
        // linear dependence
        if (!dot(cross(w1, w2), w3).is_zero()) continue;
        if (!origin_strictly_inside(w1, w2, w3)) continue;

        // Coordinates in a basis of the plane lattice: U has the primitive
        // plane normal as first row, so U w = (0, a, b).
        IntMatrix u = complete_to_basis(primitive_vector(area));
        std::vector<HalfSpace> hs;
        for (const IntVector* wi : {&w1, &w2, &w3}) {
          IntVector c = apply(u, *wi);
          IntVector plane{c[1], c[2]};
          IntVector neg{-c[1], -c[2]};
          IntVector wneg(3);
          for (size_t t = 0; t < 3; ++t) wneg[t] = -(*wi)[t];
          hs.push_back(HalfSpace::make(plane, p.min_support(*wi)));
          hs.push_back(HalfSpace::make(neg, p.min_support(wneg)));
        }
        HPolyhedron region(hs, 2);
        if (!region.is_empty() && region.facet_count() == 3) return true;
      }
  return false;
}

bool projects_to_2delta2(const Polytope& p) {
  if (p.ambient_dim() != 3 || !p.is_full_dimensional()) throw std::domain_error("use width-1 projection predicate");
  return projects_to_2delta2(p, lattice_width(p));
}

bool is_sporadic(const Polytope& p) {
  WidthCertificate cert = lattice_width(p);
  if (cert.width <= Rational(1)) return false;
  if (projects_to_2delta2(p, cert)) return false;
  return is_F_hollow(p);
}

std::vector<std::pair<Polytope, Polytope>> minkowski_summand_pairs(const Polytope& r) {
  if (!r.is_lattice() || r.is_empty()) throw std::domain_error("summands require a lattice polytope");
  if (!r.is_full_dimensional()) throw std::domain_error("summands require a full-dimensional polytope");
  const auto pts = lattice_points(r);
  const IntVector& anchor = pts.front();  // lexicographic minimum
  const size_t rest = pts.size() - 1;
  if (rest > 20) throw std::domain_error("too many lattice points for summand search");

  std::vector<std::pair<Polytope, Polytope>> out;
  std::vector<std::vector<RatVector>> seen;
  for (uint64_t mask = 0; mask < (uint64_t{1} << rest); ++mask) {
    std::vector<IntVector> sub{anchor};
    for (size_t i = 0; i < rest; ++i)
      if (mask >> i & 1) sub.push_back(pts[i + 1]);
    Polytope a = Polytope::convex_hull(sub);
    if (std::find(seen.begin(), seen.end(), a.vertices()) != seen.end()) continue;
    seen.push_back(a.vertices());

    // B = R ⊖ A = {x : x + A ⊆ R}
    std::vector<HalfSpace> hs;
    for (const auto& f : r.facets()) hs.push_back({f.normal, f.offset - a.min_support(f.normal)});
    auto res = resolve_hpolyhedron(hs, r.ambient_dim());
    if (!res) continue;
    Polytope b = Polytope::convex_hull(res->vertices);
    if (!b.is_lattice()) continue;
    if (minkowski_sum(a, b) == r) out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// --------------------------------------------------------------- records

ClassificationRecord make_record(const Polytope& p, const std::string& provenance) {
  ClassificationRecord r;
  r.form = affine_normal_form(p);
  r.vertices = p.lattice_vertices();
  WidthCertificate cert = lattice_width(p);
  r.width = floor(cert.width);
  MultiplierProfile prof = multiplier_profile(p);
  r.mu = prof.mu;
  r.mu_cc = prof.mu_cc;
  r.dim_fine_at_mu = fine_of_dilation(prof, prof.mu).dim();
  r.f_hollow = is_F_hollow(prof);
  r.weakly_sporadic = r.f_hollow && r.dim_fine_at_mu == 0;
  if (p.ambient_dim() == 3 && r.f_hollow && cert.width > Rational(1)) r.sporadic = !projects_to_2delta2(p, cert);
  r.canonically_closed_at_mu = prof.mu >= prof.mu_cc;
  r.gorenstein = gorenstein_data(prof, p);
  r.provenance = provenance;
  return r;
}

ResultLine to_result_line(const ClassificationRecord& r) {
  ResultLine l;
  l.digest = r.form.digest;
  l.vertices = r.vertices;
  l.width = r.width;
  l.mu = r.mu;
  l.dim_fine_at_mu = r.dim_fine_at_mu;
  l.f_hollow = r.f_hollow;
  l.weakly_sporadic = r.weakly_sporadic;
  l.sporadic = r.sporadic;
  l.canonically_closed_at_mu = r.canonically_closed_at_mu;
  if (r.gorenstein) l.gorenstein_index = r.gorenstein->index;
  l.provenance = r.provenance;
  return l;
}

// --------------------------------------------------------------- pipelines

namespace {

std::unique_ptr<DedupStore> open_store(const PipelineOptions& o, const std::string& tag) {
  if (o.state_dir.empty()) return std::make_unique<DedupStore>();
  std::filesystem::create_directories(o.state_dir);
  return std::make_unique<DedupStore>(o.state_dir / (tag + ".log"), o.resume);
}

EnumerationOptions enumeration(const PipelineOptions& o, DedupStore* store, const std::string& provenance) {
  EnumerationOptions e;
  e.jobs = o.jobs;
  e.store = store;
  e.provenance = provenance;
  e.log = o.log;
  return e;
}

bool width_above_one(const Polytope& p) { return lattice_width(p).width > Rational(1); }

void sort_by_digest(std::vector<ClassificationRecord>& v) {
  std::sort(v.begin(), v.end(),
            [](const ClassificationRecord& a, const ClassificationRecord& b) { return a.form.digest < b.form.digest; });
}

// Records for the classes accepted by the filter, computed in parallel and
// returned in class order.
template <class Filter>
std::vector<ClassificationRecord> records_for(const std::vector<SubpolytopeClass>& classes, unsigned jobs,
                                              Filter&& filter) {
  std::vector<std::optional<ClassificationRecord>> slots(classes.size());
  parallel_for(classes.size(), jobs, [&](size_t i) {
    if (auto r = filter(classes[i])) slots[i] = std::move(*r);
  });
  std::vector<ClassificationRecord> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<ClassificationRecord> classify_polygons(const PipelineOptions& options) {
  auto store = open_store(options, "polygons");
  auto classes = subpolytope_classes(named::dilated_simplex(2, 2), enumeration(options, store.get(), "2Delta2"));
  auto out = records_for(classes, options.jobs, [](const SubpolytopeClass& c) -> std::optional<ClassificationRecord> {
    ClassificationRecord r = make_record(c.polytope, c.provenance);
    if (!r.weakly_sporadic) return std::nullopt;
    return r;
  });
  sort_by_digest(out);
  return out;
}

std::vector<Polytope> reflexive_polygons(const PipelineOptions& options) {
  auto store = open_store(options, "reflexive-polygons");
  EnumerationOptions e = enumeration(options, store.get(), "4Delta2");
  // Interior lattice points only disappear under inclusion.
  e.expand = [](const Polytope& p) { return !lattice_points(p, true).empty(); };
  auto classes = subpolytope_classes(named::dilated_simplex(2, 4), e);
  std::vector<Polytope> out;
  for (auto& c : classes)
    if (reflexive_check(c.polytope)) out.push_back(std::move(c.polytope));
  return out;
}

std::vector<ClassificationRecord> classify_weakly_sporadic_width2(const PipelineOptions& options) {
  auto store = open_store(options, "width2");
  EnumerationOptions e = enumeration(options, store.get(), "2Delta2x[0,4]");
  // Width never grows under inclusion, so width-one nodes have no width-two
  // descendants.
  e.expand = width_above_one;
  auto classes = subpolytope_classes(named::prism_2delta2_0_4(), e);
  auto out = records_for(classes, options.jobs, [](const SubpolytopeClass& c) -> std::optional<ClassificationRecord> {
    WidthCertificate cert = lattice_width(c.polytope);
    if (cert.width != Rational(2) || !projects_to_2delta2(c.polytope, cert)) return std::nullopt;
    ClassificationRecord r = make_record(c.polytope, c.provenance);
    if (!r.weakly_sporadic) return std::nullopt;
    return r;
  });
  sort_by_digest(out);
  return out;
}

namespace {

Polytope stacked(const Polytope& a, const Polytope& b) {
  std::vector<IntVector> pts;
  for (const auto& v : a.lattice_vertices()) pts.push_back({0, v[0], v[1]});
  for (const auto& v : b.lattice_vertices()) pts.push_back({1, v[0], v[1]});
  return Polytope::convex_hull(pts);
}

}  // namespace

std::vector<ClassificationRecord> classify_weakly_sporadic_width1(const PipelineOptions& options) {
  std::vector<Polytope> candidates;
  std::vector<std::string> provenance;
  for (const auto& r : reflexive_polygons(options)) {
    const std::string tag = "summands:" + affine_normal_form(r).digest;
    for (const auto& [a, b] : minkowski_summand_pairs(r)) {
      Polytope p = stacked(a, b);
      if (!p.is_full_dimensional()) continue;
      candidates.push_back(std::move(p));
      provenance.push_back(tag);
    }
  }
  const std::vector<Polytope> low_degree{named::simplex(3), named::lawrence_prism({1, 1, 0}),
                                         named::lawrence_prism({2, 0, 0}), pyramid(named::dilated_simplex(2, 2))};
  const std::vector<std::string> low_names{"Delta3", "P110", "P200", "Pyr(2Delta2)"};

  std::vector<std::optional<ClassificationRecord>> slots(candidates.size());
  parallel_for(candidates.size(), options.jobs, [&](size_t i) {
    ClassificationRecord r = make_record(candidates[i], provenance[i]);
    if (r.weakly_sporadic) slots[i] = std::move(r);
  });

  DedupStore seen;
  std::vector<ClassificationRecord> out;
  for (auto& s : slots) {
    if (!s) continue;
    if (seen.insert(s->form, {}, s->provenance)) out.push_back(std::move(*s));
  }
  for (size_t i = 0; i < low_degree.size(); ++i) {
    ClassificationRecord r = make_record(low_degree[i], low_names[i]);
    if (!r.weakly_sporadic) throw std::logic_error(low_names[i] + " is expected to be weakly sporadic");
    if (seen.insert(r.form, {}, r.provenance)) out.push_back(std::move(r));
  }
  sort_by_digest(out);
  return out;
}

std::vector<ClassificationRecord> classify_weakly_sporadic_all(const PipelineOptions& options) {
  auto w1 = classify_weakly_sporadic_width1(options);
  auto w2 = classify_weakly_sporadic_width2(options);
  DedupStore seen;
  std::vector<ClassificationRecord> out;
  for (auto* part : {&w1, &w2})
    for (auto& r : *part)
      if (seen.insert(r.form, {}, r.provenance)) out.push_back(std::move(r));
  sort_by_digest(out);
  return out;
}

std::vector<ClassificationRecord> classify_sporadic(const PipelineOptions& options) {
  auto store = open_store(options, "sporadic");
  const std::vector<std::pair<std::vector<int>, std::string>> roots{
      {{3, 3, 3}, "Delta(3,3,3)"}, {{2, 4, 4}, "Delta(2,4,4)"}, {{2, 3, 6}, "Delta(2,3,6)"}};
  std::vector<SubpolytopeClass> classes;
  for (const auto& [k, name] : roots) {
    EnumerationOptions e = enumeration(options, store.get(), name);
    e.expand = width_above_one;
    classes = subpolytope_classes(named::axis_simplex(k), e);
  }
  auto out = records_for(classes, options.jobs, [](const SubpolytopeClass& c) -> std::optional<ClassificationRecord> {
    WidthCertificate cert = lattice_width(c.polytope);
    if (cert.width <= Rational(1) || projects_to_2delta2(c.polytope, cert)) return std::nullopt;
    ClassificationRecord r = make_record(c.polytope, c.provenance);
    if (!r.sporadic) return std::nullopt;
    return r;
  });
  sort_by_digest(out);
  return out;
}

// --------------------------------------------------------------- census

bool is_bipyramid(const std::vector<IntVector>& v) {
  if (v.size() != 5 || v[0].size() != 3) return false;
  for (size_t p = 0; p < 5; ++p)
    for (size_t q = p + 1; q < 5; ++q) {
      std::vector<size_t> tri;
      for (size_t i = 0; i < 5; ++i)
        if (i != p && i != q) tri.push_back(i);
      const IntVector &a = v[tri[0]], &b = v[tri[1]], &c = v[tri[2]];
      IntVector n = cross(sub(b, a), sub(c, a));
      Integer sp = dot(sub(v[p], a), n), sq = dot(sub(v[q], a), n);
      if (sp.sign() * sq.sign() >= 0) continue;
      // Intersection x = p + t (q - p) with t = sp / (sp - sq); scale by
      // (sp - sq) to stay integral: X = (sp - sq) x.
      Integer s = sp - sq;
      IntVector x(3);
      for (size_t i = 0; i < 3; ++i) x[i] = s * v[p][i] + sp * (v[q][i] - v[p][i]);
      auto scaled = [&](const IntVector& y) {
        IntVector r(3);
        for (size_t i = 0; i < 3; ++i) r[i] = s * y[i];
        return r;
      };
      IntVector A = scaled(a), B = scaled(b), C = scaled(c);
      Integer la = dot(cross(sub(B, x), sub(C, x)), n);
      Integer lb = dot(cross(sub(C, x), sub(A, x)), n);
      Integer lc = dot(cross(sub(A, x), sub(B, x)), n);
      // Scaling multiplies each term by s^2, so inside means all positive.
      if (la.sign() > 0 && lb.sign() > 0 && lc.sign() > 0) return true;
    }
  return false;
}

size_t bipyramid_census(const std::vector<ClassificationRecord>& records) {
  size_t n = 0;
  for (const auto& r : records)
    if (is_bipyramid(r.vertices)) ++n;
  return n;
}

std::map<Rational, size_t> mu_histogram(const std::vector<ClassificationRecord>& records) {
  std::map<Rational, size_t> h;
  for (const auto& r : records) ++h[r.mu];
  return h;
}

}  // namespace fhollow
