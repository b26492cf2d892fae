#include "fhollow/normal_form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fhollow/linalg.hpp"

namespace fhollow {

IntMatrix pairing_matrix(const Polytope& p) {
  if (!p.is_full_dimensional() || !p.is_lattice())
    throw std::domain_error("normal form requires a full-dimensional lattice polytope");
  const auto& facets = p.facets();
  const auto verts = p.lattice_vertices();
  IntMatrix m(facets.size(), verts.size());
  for (size_t f = 0; f < facets.size(); ++f) {
    const Integer off = facets[f].offset.num();
    for (size_t v = 0; v < verts.size(); ++v) m(f, v) = dot(verts[v], facets[f].normal) - off;
  }
  return m;
}

namespace {

using Small = int64_t;

// Search state: rows fixed so far, and the column order as a sequence of
// blocks whose columns are still interchangeable.
struct State {
  std::vector<bool> used;
  std::vector<std::vector<size_t>> blocks;

  friend bool operator<(const State& a, const State& b) {
    if (a.used != b.used) return a.used < b.used;
    return a.blocks < b.blocks;
  }
};

// Arranges row r of m inside the blocks of s (each block sorted by
// decreasing entry) and returns the resulting row.
std::vector<Small> best_row(const std::vector<std::vector<Small>>& m, size_t r, const State& s) {
  std::vector<Small> out;
  for (const auto& b : s.blocks) {
    size_t start = out.size();
    for (size_t c : b) out.push_back(m[r][c]);
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(), std::greater<>());
  }
  return out;
}

State refine(const std::vector<std::vector<Small>>& m, size_t r, const State& s) {
  State t;
  t.used = s.used;
  t.used[r] = true;
  for (const auto& b : s.blocks) {
    std::vector<size_t> cols = b;
    std::stable_sort(cols.begin(), cols.end(), [&](size_t x, size_t y) { return m[r][x] > m[r][y]; });
    size_t i = 0;
    while (i < cols.size()) {
      size_t j = i;
      std::vector<size_t> part;
      while (j < cols.size() && m[r][cols[j]] == m[r][cols[i]]) part.push_back(cols[j++]);
      std::sort(part.begin(), part.end());
      t.blocks.push_back(std::move(part));
      i = j;
    }
  }
  return t;
}

// All column orders that realize the lexicographically largest matrix over
// row and column permutations.
std::vector<std::vector<size_t>> maximizing_column_orders(const IntMatrix& pm) {
  const size_t rows = pm.rows(), cols = pm.cols();
  std::vector<std::vector<Small>> m(rows, std::vector<Small>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m[i][j] = pm(i, j).to_int64();

  State init;
  init.used.assign(rows, false);
  std::vector<size_t> all(cols);
  for (size_t j = 0; j < cols; ++j) all[j] = j;
  init.blocks.push_back(all);
  std::set<State> states{init};

  for (size_t step = 0; step < rows; ++step) {
    std::vector<Small> best;
    std::set<State> next;
    for (const auto& s : states) {
      for (size_t r = 0; r < rows; ++r) {
        if (s.used[r]) continue;
        std::vector<Small> row = best_row(m, r, s);
        if (!next.empty() && row < best) continue;
        if (next.empty() || row > best) {
          best = std::move(row);
          next.clear();
        }
        next.insert(refine(m, r, s));
      }
    }
    states = std::move(next);
  }

  std::vector<std::vector<size_t>> orders;
  for (const auto& s : states) {
    std::vector<size_t> order;
    for (const auto& b : s.blocks) {
      if (b.size() != 1) throw std::logic_error("pairing matrix has repeated columns");
      order.push_back(b.front());
    }
    orders.push_back(std::move(order));
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

}  // namespace

std::string digest(const IntMatrix& m) {
  using u128 = unsigned __int128;
  const u128 prime = (u128(1) << 88) | 0x13b;
  u128 h = (u128(0x6c62272e07bb0142ULL) << 64) | 0x62b821756295c58dULL;
  auto feed = [&](uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<uint8_t>(word >> (8 * i));
      h *= prime;
    }
  };
  feed(m.rows());
  feed(m.cols());
  for (const auto& x : m.data()) feed(static_cast<uint64_t>(x.to_int64()));
  static const char* hex = "0123456789abcdef";
  std::string out(32, '0');
  for (int i = 31; i >= 0; --i) {
    out[static_cast<size_t>(i)] = hex[static_cast<unsigned>(h & 0xf)];
    h >>= 4;
  }
  return out;
}

NormalForm affine_normal_form(const Polytope& p) {
  IntMatrix pm = pairing_matrix(p);
  const auto verts = p.lattice_vertices();
  const size_t d = p.ambient_dim(), n = verts.size();

  std::optional<IntMatrix> best;
  for (const auto& order : maximizing_column_orders(pm)) {
    IntMatrix m(d, n);
    const IntVector& origin = verts[order[0]];
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < d; ++i) m(i, j) = verts[order[j]][i] - origin[i];
    IntMatrix h = hermite_normal_form(m).h;
    if (!best || h > *best) best = std::move(h);
  }
  NormalForm nf{std::move(*best), {}};
  nf.digest = digest(nf.canonical_vertices);
  return nf;
}

bool are_equivalent(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) return false;
  return affine_normal_form(p) == affine_normal_form(q);
}

}  // namespace fhollow
