#include "fhollow/named.hpp"

#include <stdexcept>

namespace fhollow::named {

namespace {

Polytope hull(const std::vector<std::vector<int>>& rows) {
  std::vector<IntVector> pts;
  for (const auto& r : rows) pts.emplace_back(r.begin(), r.end());
  return Polytope::convex_hull(pts);
}

}  // namespace

Polytope dilated_simplex(size_t d, int k) {
  std::vector<IntVector> pts{IntVector(d)};
  for (size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = k;
    pts.push_back(std::move(e));
  }
  return Polytope::convex_hull(pts);
}

Polytope simplex(size_t d) { return dilated_simplex(d, 1); }

Polytope cube(size_t d) {
  std::vector<IntVector> pts;
  for (size_t mask = 0; mask < (size_t{1} << d); ++mask) {
    IntVector v(d);
    for (size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(std::move(v));
  }
  return Polytope::convex_hull(pts);
}

Polytope axis_simplex(const std::vector<int>& k) {
  const size_t d = k.size();
  std::vector<IntVector> pts{IntVector(d)};
  for (size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = k[i];
    pts.push_back(std::move(e));
  }
  return Polytope::convex_hull(pts);
}

Polytope empty_simplex(int p, int q) { return hull({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {p, q, 1}}); }

Polytope lawrence_prism(const std::vector<int>& heights) {
  const size_t d = heights.size();
  if (d < 2) throw std::invalid_argument("Lawrence prism needs at least two heights");
  std::vector<IntVector> pts;
  for (size_t i = 0; i < d; ++i) {
    IntVector v(d);
    if (i > 0) v[i - 1] = 1;
    pts.push_back(v);
    v[d - 1] = heights[i];
    pts.push_back(v);
  }
  return Polytope::convex_hull(pts);
}

Polytope prism_2delta2_0_4() {
  return hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 4}, {2, 0, 4}, {0, 2, 4}});
}

Polytope four_simplex_example() {
  return hull({{-4, -7, -9, -5}, {0, 1, 0, 0}, {1, 0, 0, 0}, {2, 5, 9, 5}, {0, 1, 0, 3}});
}

Polytope slice_counterexample() { return hull({{-1, -1, -1}, {1, 0, -1}, {0, 1, -1}, {0, 0, 1}}); }

std::vector<std::pair<std::string, Polytope>> corpus() {
  std::vector<std::pair<std::string, Polytope>> c{
      {"Delta2", simplex(2)},
      {"2Delta2", dilated_simplex(2, 2)},
      {"3Delta2", dilated_simplex(2, 3)},
      {"square", cube(2)},
      {"P20", lawrence_prism({2, 0})},
      {"Delta3", simplex(3)},
      {"2Delta3", dilated_simplex(3, 2)},
      {"cube3", cube(3)},
      {"P110", lawrence_prism({1, 1, 0})},
      {"P200", lawrence_prism({2, 0, 0})},
      {"Pyr(2Delta2)", pyramid(dilated_simplex(2, 2))},
      {"Delta(3,3,3)", axis_simplex({3, 3, 3})},
      {"Delta(2,4,4)", axis_simplex({2, 4, 4})},
      {"Delta(2,3,6)", axis_simplex({2, 3, 6})},
      {"Delta(1,3)", empty_simplex(1, 3)},
      {"Delta(2,5)", empty_simplex(2, 5)},
      {"2Delta2x[0,4]", prism_2delta2_0_4()},
      {"slice-counterexample", slice_counterexample()},
      {"four-simplex", four_simplex_example()},
  };
  return c;
}

}  // namespace fhollow::named
