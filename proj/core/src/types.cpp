#include "fhollow/types.hpp"

namespace fhollow {

namespace {

template <class V>
std::string join(const V& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  s += ')';
  return s;
}

}  // namespace

std::string to_string(const IntVector& v) { return join(v); }
std::string to_string(const RatVector& v) { return join(v); }

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVector to_integer(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_integer()) throw std::domain_error("non-integral coordinate " + x.str());
    r.push_back(x.num());
  }
  return r;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

size_t VectorHash::operator()(const IntVector& v) const noexcept {
  size_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : v) h = (h ^ x.hash()) * 0x100000001b3ULL;
  return h;
}

size_t VectorHash::operator()(const RatVector& v) const noexcept {
  size_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : v) h = (h ^ x.hash()) * 0x100000001b3ULL;
  return h;
}

}  // namespace fhollow
