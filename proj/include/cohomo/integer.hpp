#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "cohomo/error.hpp"

namespace cohomo {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Quotient rounded towards negative infinity. b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Remainder in [0, |b|).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

inline IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n, Integer(0));
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline void check_same_length(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  check_same_length(a, b);
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
  check_same_length(a, b);
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline IntVector operator-(const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline IntVector operator*(const Integer& s, const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x *= s;
  return r;
}

inline IntVector& operator+=(IntVector& a, const IntVector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline IntVector& operator-=(IntVector& a, const IntVector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

template <typename Int>
IntVector make_vector(std::initializer_list<Int> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace cohomo
