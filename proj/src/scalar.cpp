#include "frob/scalar.hpp"

#include <array>
#include <cctype>
#include <ostream>

#include "frob/poly.hpp"

namespace frob {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BadGroupTable: return "BadGroupTable";
    case ErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::WidthExceeded: return "WidthExceeded";
    case ErrorKind::GiveUp: return "GiveUp";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

namespace {

using RPoly = poly::Poly<Rational>;

std::array<RPoly, kMaxCyclotomicOrder + 1> build_cyclotomic_table() {
  std::array<RPoly, kMaxCyclotomicOrder + 1> table;
  for (int n = 1; n <= kMaxCyclotomicOrder; ++n) {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    RPoly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto [q, r] = poly::divmod(p, table[d]);
      if (!r.empty()) throw Error(ErrorKind::InvariantViolated, "cyclotomic division left a remainder");
      p = std::move(q);
    }
    table[n] = std::move(p);
  }
  return table;
}

const std::array<RPoly, kMaxCyclotomicOrder + 1>& cyclotomic_table() {
  static const auto table = build_cyclotomic_table();
  return table;
}

// Reduce a polynomial in zeta modulo the monic Phi_n in place.
void reduce_mod(RPoly& p, const RPoly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (sgn(p[k]) == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j < deg; ++j) p[k - deg + j] -= c * phi[j];
    p[k] = 0;
  }
  p.resize(deg, Rational(0));
}

}  // namespace

FieldSpec FieldSpec::cyclotomic(int n) {
  if (n < 2 || n > kMaxCyclotomicOrder) {
    throw Error(ErrorKind::Usage, "cyclotomic order must lie in [2, " +
                                      std::to_string(kMaxCyclotomicOrder) + "], got " +
                                      std::to_string(n));
  }
  return {Kind::Cyclotomic, n};
}

int FieldSpec::degree() const {
  if (kind == Kind::Rational) return 1;
  return static_cast<int>(cyclotomic_polynomial(order).size()) - 1;
}

std::string FieldSpec::describe() const {
  if (kind == Kind::Rational) return "Q";
  return "Q(zeta_" + std::to_string(order) + ")";
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder) {
    throw Error(ErrorKind::Usage, "cyclotomic order out of range: " + std::to_string(n));
  }
  return cyclotomic_table()[n];
}

Scalar::Scalar(FieldSpec field) : field_(field), coeffs_(field.degree(), Rational(0)) {}

Scalar::Scalar(FieldSpec field, Rational value) : Scalar(field) {
  coeffs_[0] = std::move(value);
  coeffs_[0].canonicalize();
}

Scalar::Scalar(FieldSpec field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

Scalar Scalar::root_of_unity(FieldSpec field, long power) {
  if (!field.is_cyclotomic()) {
    throw Error(ErrorKind::FieldMismatch, "root_of_unity requires a cyclotomic field");
  }
  const long n = field.order;
  long e = power % n;
  if (e < 0) e += n;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  return Scalar(field, std::move(c));
}

void Scalar::reduce() {
  if (field_.is_cyclotomic()) {
    reduce_mod(coeffs_, cyclotomic_polynomial(field_.order));
  } else {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
    if (coeffs_.size() != 1) {
      throw Error(ErrorKind::FieldMismatch, "rational scalar given several coefficients");
    }
  }
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::FieldMismatch, field_.describe() + " vs " + other.field_.describe());
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  if (other.is_rational()) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  RPoly prod(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(prod);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inv();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return Scalar(field_, Rational(1) / coeffs_[0]);
  // Extended Euclid on (Phi_n, a): track s with s * a == r (mod Phi_n).
  const auto& phi = cyclotomic_polynomial(field_.order);
  RPoly r0 = phi;
  RPoly r1 = coeffs_;
  poly::trim(r1);
  RPoly s0;
  RPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly::divmod(r0, r1);
    RPoly s2 = poly::add(s0, poly::scale(poly::mul(q, s1), Rational(-1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  if (r0.size() != 1) throw Error(ErrorKind::InvariantViolated, "cyclotomic gcd is not a unit");
  auto s = poly::scale(s0, Rational(Rational(1) / r0[0]));
  return Scalar(field_, std::move(s));
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  Scalar result = Scalar::one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  bool consume(char c) {
    skip_space();
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  // Accepts '-' and U+2212 MINUS SIGN.
  bool consume_minus() {
    skip_space();
    if (consume('-')) return true;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }
  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  Rational rational() {
    skip_space();
    bool negative = false;
    if (consume_minus()) {
      negative = true;
    } else {
      consume('+');
    }
    skip_space();
    const std::size_t start = pos_;
    std::string num = digits();
    if (num.empty()) throw ParseError(start, "expected digits");
    Rational value(mpz_class(num), 1);
    if (!done() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      std::string den = digits();
      if (den.empty()) throw ParseError(den_pos, "expected denominator digits");
      mpz_class d(den);
      if (d == 0) throw ParseError(den_pos, "zero denominator");
      value = Rational(mpz_class(num), d);
      value.canonicalize();
    }
    return negative ? Rational(-value) : value;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  Rational value = cur.rational();
  cur.skip_space();
  if (!cur.done()) throw ParseError(cur.pos(), "trailing characters");
  return value;
}

Scalar parse_scalar(std::string_view text, FieldSpec field) {
  Cursor cur(text);
  cur.skip_space();
  if (!cur.consume('[')) {
    Rational value = cur.rational();
    cur.skip_space();
    if (!cur.done()) throw ParseError(cur.pos(), "trailing characters");
    return Scalar(field, value);
  }
  std::vector<Rational> coeffs;
  coeffs.push_back(cur.rational());
  while (cur.consume(',')) coeffs.push_back(cur.rational());
  if (!cur.consume(']')) throw ParseError(cur.pos(), "expected ']'");
  cur.skip_space();
  if (!cur.done()) throw ParseError(cur.pos(), "trailing characters");
  const auto deg = static_cast<std::size_t>(field.degree());
  if (coeffs.size() > deg) {
    throw ParseError(0, "coefficient list longer than field degree " + std::to_string(deg));
  }
  coeffs.resize(deg, Rational(0));
  return Scalar(field, std::move(coeffs));
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_scalar(const Scalar& s) {
  if (!s.field().is_cyclotomic()) return format_rational(s.coeffs()[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += format_rational(s.coeffs()[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }

}  // namespace frob
