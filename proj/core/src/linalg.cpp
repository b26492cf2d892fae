#include "fhollow/linalg.hpp"

#include <stdexcept>

namespace fhollow {

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Integer s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) s += a[i] * Rational(b[i]);
  }
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

IntVector primitive_vector(const IntVector& v) {
  Integer g = content(v);
  if (g.is_zero()) throw std::invalid_argument("zero vector has no primitive form");
  if (g.is_one()) return v;
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x / g);
  return r;
}

IntVector primitive_direction(const RatVector& v) {
  Integer l(1);
  for (const auto& x : v) l = lcm(l, x.den());
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.num() * (l / x.den()));
  return primitive_vector(r);
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Integer(0);
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = m.rows();
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Rational f = m(i, k) / m(k, k);
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

size_t rank(IntMatrix m) {
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Integer a = m(r, c), b = m(i, c);
      Integer g(0);
      for (size_t j = c; j < m.cols(); ++j) {
        m(i, j) = m(i, j) * a - m(r, j) * b;
        g = gcd(g, m(i, j));
      }
      if (!g.is_zero() && !g.is_one())
        for (size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) / g;
    }
    ++r;
  }
  return r;
}

size_t rank(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, vectors.front().size()));
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const size_t m = a.rows(), n = a.cols();
  HermiteForm out{a, IntMatrix::identity(m), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;

  // Row combination (ri, rj) <- (s*ri + t*rj, p*ri + q*rj) with s*q - t*p = 1.
  auto combine = [](IntMatrix& x, size_t ri, size_t rj, const Integer& s, const Integer& t,
                    const Integer& p, const Integer& q) {
    for (size_t j = 0; j < x.cols(); ++j) {
      Integer vi = x(ri, j), vj = x(rj, j);
      x(ri, j) = s * vi + t * vj;
      x(rj, j) = p * vi + q * vj;
    }
  };

  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    for (size_t i = row + 1; i < m; ++i) {
      if (h(i, col).is_zero()) continue;
      Integer a0 = h(row, col), b0 = h(i, col);
      Integer s, t;
      Integer g = extended_gcd(a0, b0, s, t);
      Integer p = -(b0 / g), q = a0 / g;
      combine(h, row, i, s, t, p, q);
      combine(u, row, i, s, t, p, q);
    }
    if (h(row, col).is_zero()) continue;
    if (h(row, col).sign() < 0) {
      for (size_t j = 0; j < n; ++j) h(row, j) = -h(row, j);
      for (size_t j = 0; j < m; ++j) u(row, j) = -u(row, j);
    }
    for (size_t i = 0; i < row; ++i) {
      Integer f = floor_div(h(i, col), h(row, col));
      if (f.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) h(i, j) -= f * h(row, j);
      for (size_t j = 0; j < m; ++j) u(i, j) -= f * u(row, j);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_square requires a square matrix");
  if (b.size() != a.rows()) throw std::invalid_argument("solve_square dimension mismatch");
  const size_t n = a.rows();
  RatMatrix m(n, n + 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(p, k);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      Rational f = m(i, k) / m(k, k);
      for (size_t j = k; j <= n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  RatVector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m(i, n) / m(i, i);
  return x;
}

IntVector kernel_vector(std::span<const IntVector> rows, size_t n) {
  if (rows.size() + 1 != n) throw std::invalid_argument("kernel_vector expects n-1 rows");
  IntVector x(n);
  IntMatrix minor(n - 1, n - 1);
  bool nonzero = false;
  for (size_t skip = 0; skip < n; ++skip) {
    for (size_t i = 0; i + 1 < n; ++i) {
      size_t cj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        minor(i, cj++) = rows[i][j];
      }
    }
    Integer d = determinant(minor);
    x[skip] = (skip % 2 == 0) ? d : -d;
    if (!d.is_zero()) nonzero = true;
  }
  if (!nonzero) return IntVector(n);
  return primitive_vector(x);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const size_t n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  // HNF of a unimodular matrix is the identity, so the transform is the inverse.
  HermiteForm hf = hermite_normal_form(u);
  if (hf.h != IntMatrix::identity(n)) throw std::domain_error("matrix is not unimodular");
  return hf.u;
}

IntVector apply(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  IntVector r(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

RatVector apply(const IntMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector r(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[i] += Rational(m(i, j)) * v[j];
  return r;
}

}  // namespace fhollow
