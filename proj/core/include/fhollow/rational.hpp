#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fhollow/integer.hpp"

namespace fhollow {

/// Exact rational number, always in lowest terms with positive denominator.
/// Zero is represented as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T v) : num_(v), den_(1) {}  // NOLINT(implicit)
  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT(implicit)
  Rational(Integer num, Integer den);

  /// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed
  /// text and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_integer() const { return den_.is_one(); }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_, Canonical{}); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

  size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static Rational from_int128(__int128 num, __int128 den);

  Integer num_;
  Integer den_;
};

Integer floor(const Rational& v);
Integer ceil(const Rational& v);
Rational abs(const Rational& v);

}  // namespace fhollow

template <>
struct std::hash<fhollow::Rational> {
  size_t operator()(const fhollow::Rational& v) const noexcept { return v.hash(); }
};
