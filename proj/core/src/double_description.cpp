#include "fhollow/double_description.hpp"

#include <algorithm>
#include <stdexcept>

#include "fhollow/linalg.hpp"

namespace fhollow {

namespace {

// Greedy selection of linearly independent rows via an echelon basis kept in
// fraction-free form.
class IndependentRows {
 public:
  explicit IndependentRows(size_t n) : n_(n) {}

  bool try_add(const IntVector& v) {
    IntVector r = v;
    for (size_t b = 0; b < basis_.size(); ++b) {
      size_t c = pivots_[b];
      if (r[c].is_zero()) continue;
      Integer a = basis_[b][c], f = r[c];
      for (size_t j = 0; j < n_; ++j) r[j] = r[j] * a - basis_[b][j] * f;
    }
    size_t c = 0;
    while (c < n_ && r[c].is_zero()) ++c;
    if (c == n_) return false;
    basis_.push_back(primitive_vector(r));
    pivots_.push_back(c);
    return true;
  }

  size_t size() const { return basis_.size(); }

 private:
  size_t n_;
  std::vector<IntVector> basis_;
  std::vector<size_t> pivots_;
};

IntVector combine(const Integer& wp, const IntVector& q, const Integer& wq, const IntVector& p) {
  // wp > 0, wq > 0: wp*q + wq*p lies on the hyperplane when called with the
  // absolute values of the two evaluations.
  IntVector r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = wp * q[i] + wq * p[i];
  return primitive_vector(r);
}

}  // namespace

std::vector<ExtremeRay> extreme_rays(std::span<const IntVector> constraints, size_t n) {
  const size_t m = constraints.size();
  for (const auto& a : constraints)
    if (a.size() != n) throw std::invalid_argument("constraint dimension mismatch");

  IndependentRows independent(n);
  std::vector<size_t> basis;
  for (size_t i = 0; i < m && basis.size() < n; ++i) {
    if (independent.try_add(constraints[i])) basis.push_back(i);
  }
  if (basis.size() < n) throw std::domain_error("cone is not pointed");

  std::vector<ExtremeRay> rays;
  rays.reserve(n);
  std::vector<IntVector> others;
  for (size_t j = 0; j < n; ++j) {
    others.clear();
    for (size_t k = 0; k < n; ++k)
      if (k != j) others.push_back(constraints[basis[k]]);
    IntVector r = kernel_vector(others, n);
    if (dot(constraints[basis[j]], r).sign() < 0)
      for (auto& x : r) x = -x;
    boost::dynamic_bitset<> tight(m);
    for (size_t k = 0; k < n; ++k)
      if (k != j) tight.set(basis[k]);
    rays.push_back({std::move(r), std::move(tight)});
  }

  std::vector<bool> is_basis(m, false);
  for (size_t b : basis) is_basis[b] = true;

  std::vector<Integer> values;
  std::vector<size_t> pos, neg, zero;
  const size_t min_common = n >= 2 ? n - 2 : 0;

  for (size_t k = 0; k < m; ++k) {
    if (is_basis[k]) continue;
    const IntVector& a = constraints[k];
    values.clear();
    pos.clear();
    neg.clear();
    zero.clear();
    for (size_t r = 0; r < rays.size(); ++r) {
      values.push_back(dot(a, rays[r].ray));
      int s = values.back().sign();
      if (s > 0) {
        pos.push_back(r);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        zero.push_back(r);
        rays[r].tight.set(k);
      }
    }
    if (neg.empty()) continue;

    std::vector<ExtremeRay> next;
    next.reserve(pos.size() + zero.size() + pos.size() * neg.size());
    for (size_t p : pos) {
      for (size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[q].tight;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector nr = combine(values[p], rays[q].ray, -values[q], rays[p].ray);
        common.set(k);
        next.push_back({std::move(nr), std::move(common)});
      }
    }
    for (size_t p : pos) next.push_back(std::move(rays[p]));
    for (size_t z : zero) next.push_back(std::move(rays[z]));
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end(),
            [](const ExtremeRay& x, const ExtremeRay& y) { return x.ray < y.ray; });
  return rays;
}

}  // namespace fhollow
