#include "frob/series.hpp"

#include "frob/poly.hpp"

namespace frob {

RationalSeries RationalSeries::make(FieldSpec field, Vector numerator, Vector denominator) {
  poly::trim(numerator);
  poly::trim(denominator);
  if (denominator.empty()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (denominator.front().is_zero()) {
    throw Error(ErrorKind::InvariantViolated, "denominator vanishes at x = 0; not a power series");
  }
  if (numerator.empty()) return {field, {}, {Scalar::one(field)}};
  auto g = poly::gcd(numerator, denominator);
  if (g.size() > 1) {
    numerator = poly::divmod(numerator, g).first;
    denominator = poly::divmod(denominator, g).first;
  }
  const Scalar lead = denominator.front().inv();
  numerator = poly::scale(std::move(numerator), lead);
  denominator = poly::scale(std::move(denominator), lead);
  return {field, std::move(numerator), std::move(denominator)};
}

RationalSeries RationalSeries::geometric(const Scalar& lambda_prime, const Scalar& lambda) {
  const FieldSpec f = lambda.field();
  return make(f, {lambda_prime}, {Scalar::one(f), -lambda});
}

Vector RationalSeries::expand(std::size_t terms) const {
  Vector s;
  s.reserve(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    Scalar v = j < numerator.size() ? numerator[j] : Scalar::zero(field);
    for (std::size_t i = 1; i < denominator.size() && i <= j; ++i) {
      if (!denominator[i].is_zero()) v -= denominator[i] * s[j - i];
    }
    s.push_back(std::move(v));
  }
  return s;
}

std::string format_polynomial(const Vector& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = format_scalar(coeffs[i]);
    if (i == 0) {
      out += c;
    } else {
      if (!coeffs[i].is_one()) out += (coeffs[i].field().is_cyclotomic() ? c : "(" + c + ")") + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string RationalSeries::format() const {
  return "(" + format_polynomial(numerator, "x") + ") / (" + format_polynomial(denominator, "x") + ")";
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  auto num = poly::add(poly::mul(a.numerator, b.denominator), poly::mul(b.numerator, a.denominator));
  auto den = poly::mul(a.denominator, b.denominator);
  return RationalSeries::make(a.field, std::move(num), std::move(den));
}

}  // namespace frob
