#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cohomo/error.hpp"

namespace cohomo::quadric {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficients of a x^2 + b y^2 + c z^2 + d = 0.
struct Coefficients {
  Rational a, b, c, d;
};

/// The same surface written as x^2 - lambda y^2 - mu z^2 + lambda mu nu = 0.
struct NormalizedParams {
  Rational lambda, mu, nu;

  friend bool operator==(const NormalizedParams&, const NormalizedParams&) = default;
};

inline NormalizedParams normalize_coefficients(const Coefficients& c) {
  const char* names[] = {"a", "b", "c", "d"};
  const Rational* vals[] = {&c.a, &c.b, &c.c, &c.d};
  for (int i = 0; i < 4; ++i)
    if (*vals[i] == 0) throw ValidationError(std::string("coefficient ") + names[i] + " must be nonzero");
  return {-c.b / c.a, -c.c / c.a, (c.a * c.d) / (c.b * c.c)};
}

/// Value of x^2 - lambda y^2 - mu z^2 + lambda mu nu.
inline Rational normalized_equation(const NormalizedParams& p, const Rational& x, const Rational& y,
                                    const Rational& z) {
  return x * x - p.lambda * y * y - p.mu * z * z + p.lambda * p.mu * p.nu;
}

}  // namespace cohomo::quadric
