#include "fhollow_tools/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "fhollow/classify.hpp"
#include "fhollow/fine_interior.hpp"
#include "fhollow/io.hpp"
#include "fhollow/linalg.hpp"
#include "fhollow/named.hpp"

namespace fhollow::tools {

unsigned default_jobs() {
  if (const char* env = std::getenv("FHOLLOW_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

Polytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  PolytopeFile file = parse_polytope_file(buf.str());
  return Polytope::convex_hull(file.vertices);
}

namespace {

// Maps the library's exception types onto exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const std::domain_error& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

void print_vertices(const Polytope& p, std::ostream& out) {
  if (p.is_empty()) {
    out << "empty\n";
    return;
  }
  for (const auto& v : p.vertices()) out << to_string(v) << '\n';
}

Rational parse_rational_arg(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw ParseError("bad rational '" + s + "': " + e.what());
  }
}

}  // namespace

int cmd_fine(const FineArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Polytope p = load_polytope(args.path);
    if (!p.is_full_dimensional()) throw DimensionError("polytope is not full-dimensional");
    Polytope target = p;
    if (args.dilation) {
      Rational lambda = parse_rational_arg(*args.dilation);
      if (lambda.sign() < 0) throw ParseError("dilation factor must be non-negative");
      if (!args.brute) {
        print_vertices(fine_of_dilation(p, lambda), out);
        return int(kOk);
      }
      target = dilate(p, lambda);
    }
    if (args.brute) {
      if (*args.brute < 1) throw ParseError("--brute needs a positive bound");
      print_vertices(fine_interior_bruteforce(target, *args.brute), out);
    } else {
      print_vertices(fine_interior(target).polytope, out);
    }
    return int(kOk);
  });
}

int cmd_multipliers(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Polytope p = load_polytope(path);
    if (!p.is_full_dimensional()) throw DimensionError("polytope is not full-dimensional");
    MultiplierProfile prof = multiplier_profile(p);
    out << "mu: " << prof.mu << '\n';
    out << "mu_max: " << prof.mu_max << '\n';
    out << "mu_cc: " << prof.mu_cc << '\n';
    out << "special:";
    for (const auto& s : prof.special_multipliers) out << ' ' << s;
    out << '\n';
    for (const auto& [x0, x] : prof.vertices) out << "vertex: " << x0 << ' ' << to_string(x) << '\n';
    return int(kOk);
  });
}

namespace {

struct Expected {
  size_t count;
  std::map<Rational, size_t> mu;
};

std::optional<Expected> expected_for(const std::string& target) {
  if (target == "polygons") return Expected{4, {}};
  if (target == "weakly-sporadic")
    return Expected{114, {{Rational(3, 2), 79}, {Rational(5, 2), 1}}};
  if (target == "sporadic")
    return Expected{1368, {{Rational(4, 3), 300}, {Rational(5, 4), 632}, {Rational(7, 6), 436}}};
  return std::nullopt;
}

std::string summary(const std::vector<ClassificationRecord>& records) {
  std::ostringstream os;
  os << records.size() << " classes; mu:";
  auto hist = mu_histogram(records);
  for (auto it = hist.rbegin(); it != hist.rend(); ++it) os << ' ' << it->first << "×" << it->second;
  return os.str();
}

}  // namespace

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto expected = expected_for(args.target);
    if (!expected) throw ParseError("unknown target '" + args.target + "'");
    PipelineOptions opt;
    opt.jobs = args.jobs == 0 ? 1 : args.jobs;
    opt.resume = args.resume;
    opt.log = [&err](const std::string& s) { err << s << '\n'; };
    if (!args.out_path.empty()) opt.state_dir = args.out_path + ".state";
    else if (args.resume) throw ParseError("--resume needs --out");

    std::vector<ClassificationRecord> records;
    if (args.target == "polygons") records = classify_polygons(opt);
    else if (args.target == "weakly-sporadic") records = classify_weakly_sporadic_all(opt);
    else records = classify_sporadic(opt);

    if (!args.out_path.empty()) {
      const std::string tmp = args.out_path + ".tmp";
      {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << result_header(args.target) << '\n';
        for (const auto& r : records) f << serialize_result_line(to_result_line(r)) << '\n';
      }
      std::filesystem::rename(tmp, args.out_path);
    }
    out << summary(records) << '\n';
    if (args.target == "sporadic") out << "bipyramids: " << bipyramid_census(records) << '\n';

    if (args.check) {
      bool ok = records.size() == expected->count;
      auto hist = mu_histogram(records);
      for (const auto& [mu, n] : expected->mu) {
        auto it = hist.find(mu);
        if (it == hist.end() || it->second != n) ok = false;
      }
      if (!ok) {
        err << "check failed: expected " << expected->count << " classes\n";
        return int(kCheckFailure);
      }
      err << "check passed\n";
    }
    return int(kOk);
  });
}

// ------------------------------------------------------------------ verify

namespace {

Check pass(std::string name) { return {std::move(name), Check::Status::kPass, {}}; }
Check fail(std::string name, std::string detail) { return {std::move(name), Check::Status::kFail, std::move(detail)}; }

Polytope fine_with(const Polytope& p, const CanonicalRaySet& rays, bool corrupt) {
  std::vector<HalfSpace> hs;
  for (size_t i = 0; i < rays.rays.size(); ++i) {
    Rational off = rays.offsets[i] + Rational(1);
    if (corrupt && i == 0) off += Rational(1, 2);
    hs.push_back({rays.rays[i], off});
  }
  auto res = resolve_hpolyhedron(hs, p.ambient_dim());
  if (!res) return Polytope::empty(p.ambient_dim());
  return Polytope::convex_hull(res->vertices);
}

int max_norm(const std::vector<IntVector>& rays) {
  Integer m;
  for (const auto& r : rays)
    for (const auto& x : r)
      if (abs(x) > m) m = abs(x);
  return static_cast<int>(m.to_int64());
}

bool contains_polytope(const Polytope& outer, const Polytope& inner) {
  if (inner.is_empty()) return true;
  for (const auto& v : inner.vertices())
    if (!outer.contains(v)) return false;
  return true;
}

}  // namespace

std::vector<Check> verify_polytope(const Polytope& p, const VerifyArgs& args) {
  std::vector<Check> checks;
  const size_t d = p.ambient_dim();
  CanonicalRaySet rays = canonical_rays(p);
  const Polytope fine = fine_with(p, rays, args.corrupt_offset);
  const int bstar = max_norm(rays.rays);

  // Fine interior against the brute-force oracle.
  if (args.bound && *args.bound < bstar) {
    Polytope brute = fine_interior_bruteforce(p, *args.bound);
    if (contains_polytope(brute, fine))
      checks.push_back({"fine-oracle", Check::Status::kSuperset, "oracle superset only"});
    else
      checks.push_back(fail("fine-oracle", "oracle misses part of the Fine interior"));
  } else {
    bool ok = true;
    std::vector<int> bounds = args.bound ? std::vector<int>{*args.bound} : std::vector<int>{bstar, bstar + 1};
    for (int b : bounds)
      if (fine_interior_bruteforce(p, b) != fine) ok = false;
    checks.push_back(ok ? pass("fine-oracle") : fail("fine-oracle", "differs from brute force"));
  }

  // Vertices of the dilation polyhedron recomputed from their tight rows.
  MultiplierProfile prof = multiplier_profile(p);
  {
    bool ok = true;
    const auto& hs = prof.fan_polyhedron.halfspaces();
    for (const auto& v : prof.fan_polyhedron.vertices()) {
      std::vector<IntVector> rows;
      std::vector<Rational> rhs;
      for (const auto& h : hs) {
        if (!h.slack(v).is_zero()) continue;
        std::vector<IntVector> trial = rows;
        trial.push_back(h.normal);
        if (rank(trial) == trial.size()) {
          rows = std::move(trial);
          rhs.push_back(h.offset);
        }
        if (rows.size() == d + 1) break;
      }
      if (rows.size() != d + 1) {
        ok = false;
        continue;
      }
      RatMatrix a(d + 1, d + 1);
      for (size_t i = 0; i <= d; ++i)
        for (size_t j = 0; j <= d; ++j) a(i, j) = Rational(rows[i][j]);
      RatVector b(rhs.begin(), rhs.end());
      auto x = solve_square(a, b);
      if (!x || *x != v) ok = false;
    }
    checks.push_back(ok ? pass("cramer") : fail("cramer", "vertex does not solve its tight system"));
  }

  // Dilation lemma at a few fixed samples.
  {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coord(-3, 3), num(1, 7), den(1, 5);
    bool ok = true;
    for (int s = 0; s < 5; ++s) {
      Rational lambda(num(rng), den(rng));
      Polytope q = dilate(p, lambda);
      IntVector y(d);
      do {
        for (auto& x : y) x = coord(rng);
      } while (content(y).is_zero());
      if (q.min_support(y) != lambda * p.min_support(y)) ok = false;
      std::vector<IntVector> n1, n2;
      for (const auto& f : p.facets()) n1.push_back(f.normal);
      for (const auto& f : q.facets()) n2.push_back(f.normal);
      if (n1 != n2) ok = false;
    }
    checks.push_back(ok ? pass("dilation-lemma") : fail("dilation-lemma", "support or normals changed"));
  }

  // Slices of the dilation polyhedron against direct computation.
  {
    bool ok = true;
    for (const Rational& lambda : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(7, 3)})
      if (fine_of_dilation(prof, lambda) != fine_interior(dilate(p, lambda)).polytope) ok = false;
    checks.push_back(ok ? pass("slice-identity") : fail("slice-identity", "F(lambda P) differs"));
  }

  // Minkowski decomposition above mu_max.
  {
    bool ok = true;
    Polytope base = fine_of_dilation(prof, prof.mu_max);
    for (int l : {2, 3}) {
      Polytope lhs = fine_of_dilation(prof, Rational(l) * prof.mu_max);
      Polytope rhs = minkowski_sum(base, dilate(p, Rational(l - 1) * prof.mu_max));
      if (lhs != rhs) ok = false;
    }
    checks.push_back(ok ? pass("minkowski") : fail("minkowski", "decomposition fails"));
  }

  // Pyramid identities for lattice polytopes below the dimension cap.
  if (p.is_lattice() && d < kMaxAmbientDim) {
    bool ok = true;
    Polytope pyr = pyramid(p);
    Polytope lhs = fine_interior(dilate(pyr, Rational(2))).polytope;
    Polytope fp = fine_interior(p).polytope;
    if (fp.is_empty()) {
      if (!lhs.is_empty()) ok = false;
    } else {
      std::vector<RatVector> lifted;
      for (const auto& v : fp.vertices()) {
        RatVector w{Rational(1)};
        w.insert(w.end(), v.begin(), v.end());
        lifted.push_back(std::move(w));
      }
      if (lhs != Polytope::convex_hull(lifted)) ok = false;
    }
    if (prof.mu >= Rational(1) && multiplier_profile(pyr).mu != prof.mu + Rational(1)) ok = false;
    checks.push_back(ok ? pass("pyramid") : fail("pyramid", "pyramid identity fails"));
  }
  return checks;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::pair<std::string, Polytope>> items;
    if (args.path) items.emplace_back(*args.path, load_polytope(*args.path));
    else items = named::corpus();
    bool all_ok = true;
    for (const auto& [name, p] : items) {
      if (!p.is_full_dimensional()) throw DimensionError(name + " is not full-dimensional");
      for (const auto& c : verify_polytope(p, args)) {
        const char* tag = c.status == Check::Status::kPass ? "PASS" : c.status == Check::Status::kFail ? "FAIL" : "SUPERSET";
        out << tag << ' ' << name << ' ' << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
        if (c.status == Check::Status::kFail) all_ok = false;
      }
    }
    return int(all_ok ? kOk : kFailure);
  });
}

}  // namespace fhollow::tools
