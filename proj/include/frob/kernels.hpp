#pragma once

// Data-parallel kernels over structure-constant tables. Each kernel has an
// OpenMP version and a serial reference that tests compare it against.

#include <optional>
#include <span>

#include "frob/algebra.hpp"

namespace frob::kernels {

struct Triple {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Lexicographically first (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
std::optional<Triple> associativity_violation_serial(const Algebra& a);
std::optional<Triple> associativity_violation(const Algebra& a);

/// First basis index i where 1 e_i != e_i or e_i 1 != e_i.
std::optional<std::size_t> unit_violation(const Algebra& a);

/// G_ij = eps(e_i e_j).
Matrix gram_matrix_serial(const Algebra& a, std::span<const Scalar> eps);
Matrix gram_matrix(const Algebra& a, std::span<const Scalar> eps);

/// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace frob::kernels
