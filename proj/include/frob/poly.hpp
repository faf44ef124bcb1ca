#pragma once

// Dense univariate polynomials over an exact field, lowest degree first.
// The zero polynomial is the empty vector; every helper returns trimmed
// results. T is Rational or Scalar.

#include <cstddef>
#include <utility>
#include <vector>

#include "frob/scalar.hpp"

namespace frob::poly {

template <class T>
using Poly = std::vector<T>;

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Scalar zero_like(const Scalar& s) { return Scalar::zero(s.field()); }
inline Scalar one_like(const Scalar& s) { return Scalar::one(s.field()); }

template <class T>
void trim(Poly<T>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class T>
int degree(const Poly<T>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class T>
Poly<T> add(Poly<T> a, const Poly<T>& b) {
  if (a.size() < b.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    for (std::size_t i = a.size(); i < b.size(); ++i) a.push_back(b[i]);
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  }
  trim(a);
  return a;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> out(a.size() + b.size() - 1, zero_like(a.front()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

template <class T>
Poly<T> scale(Poly<T> a, const T& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

/// Quotient and remainder; divisor must be nonzero.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(Poly<T> num, const Poly<T>& den) {
  if (den.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) return {{}, num};
  const T lead_inv = one_like(den.back()) / den.back();
  Poly<T> quot(num.size() - den.size() + 1, zero_like(den.back()));
  for (std::size_t k = num.size(); k-- >= den.size();) {
    if (is_zero(num[k])) continue;
    T c = num[k] * lead_inv;
    const std::size_t shift = k - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

template <class T>
Poly<T> make_monic(Poly<T> p) {
  if (p.empty()) return p;
  const T lead_inv = one_like(p.back()) / p.back();
  return scale(std::move(p), lead_inv);
}

/// Monic greatest common divisor (empty if both inputs are zero).
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

}  // namespace frob::poly
