#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "frob/error.hpp"

namespace frob {

using Rational = mpq_class;

/// Ground field: Q, or Q(zeta_n) for a primitive n-th root of unity zeta_n.
struct FieldSpec {
  enum class Kind { Rational, Cyclotomic };

  Kind kind = Kind::Rational;
  int order = 1;

  static FieldSpec rational() { return {Kind::Rational, 1}; }
  static FieldSpec cyclotomic(int n);

  bool is_cyclotomic() const { return kind == Kind::Cyclotomic; }
  /// Dimension over Q: 1, or the degree of Phi_n.
  int degree() const;
  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Rational>& cyclotomic_polynomial(int n);

inline constexpr int kMaxCyclotomicOrder = 12;

/// Exact element of a FieldSpec. Cyclotomic values are stored as the unique
/// representative polynomial in zeta of degree < deg(Phi_n), so equality is
/// coefficient-wise.
class Scalar {
public:
  Scalar() : Scalar(FieldSpec::rational()) {}
  explicit Scalar(FieldSpec field);
  Scalar(FieldSpec field, Rational value);
  Scalar(FieldSpec field, std::vector<Rational> coeffs);

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return Scalar(field, Rational(1)); }
  static Scalar from_int(FieldSpec field, long value) { return Scalar(field, Rational(value)); }
  /// zeta^power, reduced. Requires a cyclotomic field.
  static Scalar root_of_unity(FieldSpec field, long power);

  const FieldSpec& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (all zeta-coefficients beyond the first vanish).
  bool is_rational() const;
  /// The Q-part; only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  Scalar inv() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
  void check_same_field(const Scalar& other) const;
  void reduce();

  FieldSpec field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Grammar: a rational is [sign] digits ["/" digits]; a cyclotomic value is
/// "[" rational ("," rational)* "]" listing zeta^0, zeta^1, ... (zero padded).
/// A bare rational is accepted for cyclotomic fields too.
Scalar parse_scalar(std::string_view text, FieldSpec field);
Rational parse_rational(std::string_view text);
std::string format_scalar(const Scalar& s);
std::string format_rational(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace frob
