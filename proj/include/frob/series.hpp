#pragma once

#include <string>

#include "frob/linalg.hpp"

namespace frob {

/// Exact rational generating function P(x)/Q(x) with Q(0) = 1 and
/// gcd(P, Q) = 1. Coefficients are lowest degree first; P may be empty (zero).
struct RationalSeries {
  FieldSpec field;
  Vector numerator;
  Vector denominator;

  /// Builds P/Q, reducing by the gcd and scaling so that Q(0) = 1.
  static RationalSeries make(FieldSpec field, Vector numerator, Vector denominator);
  /// lambda' / (1 - lambda x).
  static RationalSeries geometric(const Scalar& lambda_prime, const Scalar& lambda);

  /// First `terms` Taylor coefficients.
  Vector expand(std::size_t terms) const;
  std::string format() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);

std::string format_polynomial(const Vector& coeffs, const std::string& var);

}  // namespace frob
