#include "frob/kernels.hpp"

#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frob::kernels {

namespace {

// Accumulates sum_l coeff_l * (e_l e_k) into dense `out`.
void right_multiply_into(const Algebra& a, const SparseVec& x, std::size_t k, Vector& out) {
  for (const auto& [l, c] : x)
    for (const auto& [m, d] : a.product(l, k)) out[m] += c * d;
}

void left_multiply_into(const Algebra& a, std::size_t i, const SparseVec& x, Vector& out) {
  for (const auto& [l, c] : x)
    for (const auto& [m, d] : a.product(i, l)) out[m] += c * d;
}

bool associative_at(const Algebra& a, std::size_t i, std::size_t j, std::size_t k, Vector& lhs,
                    Vector& rhs) {
  const Scalar zero = Scalar::zero(a.field());
  std::fill(lhs.begin(), lhs.end(), zero);
  std::fill(rhs.begin(), rhs.end(), zero);
  right_multiply_into(a, a.product(i, j), k, lhs);
  left_multiply_into(a, i, a.product(j, k), rhs);
  return lhs == rhs;
}

std::optional<Triple> first_violation_for_i(const Algebra& a, std::size_t i) {
  const std::size_t n = a.dim();
  Vector lhs(n, Scalar::zero(a.field()));
  Vector rhs(n, Scalar::zero(a.field()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!associative_at(a, i, j, k, lhs, rhs)) return Triple{i, j, k};
  return std::nullopt;
}

Scalar gram_entry(const Algebra& a, std::span<const Scalar> eps, std::size_t i, std::size_t j) {
  Scalar s = Scalar::zero(a.field());
  for (const auto& [k, c] : a.product(i, j))
    if (!eps[k].is_zero()) s += c * eps[k];
  return s;
}

void check_form_length(const Algebra& a, std::span<const Scalar> eps) {
  if (eps.size() != a.dim()) throw Error(ErrorKind::ShapeMismatch, "linear form length != dimension");
}

}  // namespace

std::optional<Triple> associativity_violation_serial(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (auto t = first_violation_for_i(a, i)) return t;
  return std::nullopt;
}

std::optional<Triple> associativity_violation(const Algebra& a) {
  const auto n = static_cast<long>(a.dim());
  // Smallest violating i wins so the witness matches the serial kernel.
  long first_bad = std::numeric_limits<long>::max();
  std::vector<std::optional<Triple>> found(a.dim());
#pragma omp parallel for schedule(dynamic) reduction(min : first_bad)
  for (long i = 0; i < n; ++i) {
    found[i] = first_violation_for_i(a, static_cast<std::size_t>(i));
    if (found[i] && i < first_bad) first_bad = i;
  }
  if (first_bad == std::numeric_limits<long>::max()) return std::nullopt;
  return found[first_bad];
}

std::optional<std::size_t> unit_violation(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = zero_vector(a.field(), n);
    e[i] = Scalar::one(a.field());
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) return i;
  }
  return std::nullopt;
}

Matrix gram_matrix_serial(const Algebra& a, std::span<const Scalar> eps) {
  check_form_length(a, eps);
  const std::size_t n = a.dim();
  Matrix g(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram_entry(a, eps, i, j);
  return g;
}

Matrix gram_matrix(const Algebra& a, std::span<const Scalar> eps) {
  check_form_length(a, eps);
  const auto n = static_cast<long>(a.dim());
  Matrix g(a.field(), a.dim(), a.dim());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) g(i, j) = gram_entry(a, eps, i, j);
  return g;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace frob::kernels
