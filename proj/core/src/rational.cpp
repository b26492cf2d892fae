#include "fhollow/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fhollow {

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Magnitudes below 2^62 keep every product and sum below in __int128 range.
bool narrow(const Integer& v) {
  constexpr int64_t kLimit = int64_t{1} << 62;
  return v.is_small() && v.small() < kLimit && v.small() > -kLimit;
}

bool both_small(const Rational& a, const Rational& b) {
  return narrow(a.num()) && narrow(a.den()) && narrow(b.num()) && narrow(b.den());
}

}  // namespace

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Integer g = gcd(num, den);
  if (!g.is_one() && !g.is_zero()) {
    num = num / g;
    den = den / g;
  }
  if (num.is_zero()) den = Integer(1);
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::from_int128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  unsigned __int128 un = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
  auto g = static_cast<__int128>(gcd128(un, static_cast<unsigned __int128>(den)));
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Rational(Integer(num), Integer(den), Canonical{});
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (both_small(a, b)) {
    if (a.den_.small() == 1 && b.den_.small() == 1) return Rational(a.num_ + b.num_);
    __int128 n = static_cast<__int128>(a.num_.small()) * b.den_.small() +
                 static_cast<__int128>(b.num_.small()) * a.den_.small();
    __int128 d = static_cast<__int128>(a.den_.small()) * b.den_.small();
    return Rational::from_int128(n, d);
  }
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (both_small(a, b)) {
    if (a.den_.small() == 1 && b.den_.small() == 1) return Rational(a.num_ * b.num_);
    __int128 n = static_cast<__int128>(a.num_.small()) * b.num_.small();
    __int128 d = static_cast<__int128>(a.den_.small()) * b.den_.small();
    return Rational::from_int128(n, d);
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (both_small(a, b)) {
    __int128 n = static_cast<__int128>(a.num_.small()) * b.den_.small();
    __int128 d = static_cast<__int128>(a.den_.small()) * b.num_.small();
    return Rational::from_int128(n, d);
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (both_small(a, b)) {
    __int128 l = static_cast<__int128>(a.num_.small()) * b.den_.small();
    __int128 r = static_cast<__int128>(b.num_.small()) * a.den_.small();
    return l <=> r;
  }
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

Integer floor(const Rational& v) { return floor_div(v.num(), v.den()); }
Integer ceil(const Rational& v) { return ceil_div(v.num(), v.den()); }
Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

}  // namespace fhollow
