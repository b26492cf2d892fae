#pragma once

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in int64_t are stored inline; anything larger spills to a
// heap-allocated GMP integer. The representation is normalized after every
// operation, so a value is "small" exactly when it fits in int64_t.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fhollow {

class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T v) : small_(static_cast<int64_t>(v)) {}  // NOLINT(implicit)
  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT(implicit)
    if (v <= static_cast<uint64_t>(INT64_MAX)) {
      small_ = static_cast<int64_t>(v);
    } else {
      big_ = std::make_unique<mpz_class>(std::to_string(v));
    }
  }
  explicit Integer(const mpz_class& v);
  explicit Integer(__int128 v);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_small() const { return !big_; }
  /// Only meaningful when is_small().
  int64_t small() const { return small_; }
  mpz_class to_mpz() const;
  int64_t to_int64() const;  // throws std::overflow_error
  std::string str() const;

  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  /// Truncating division, like the built-in integer types.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

  size_t hash() const;

 private:
  void normalize();

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& v);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
/// Remainder with the sign of the divisor (floor semantics).
Integer floor_mod(const Integer& a, const Integer& b);

/// Extended gcd: returns g >= 0 and sets s, t with s*a + t*b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

}  // namespace fhollow

template <>
struct std::hash<fhollow::Integer> {
  size_t operator()(const fhollow::Integer& v) const noexcept { return v.hash(); }
};
