#pragma once

#include <optional>

#include "frob/algebra.hpp"
#include "frob/series.hpp"
#include "frob/tensor.hpp"

namespace frob {

/// An algebra together with a Frobenius linear form eps. The bilinear form is
/// always (a, b) = eps(ab). Gram matrix, metric g (components G^{-1}) and the
/// lollipop B = mu(g) are computed once at construction.
class FrobeniusStructure {
public:
  FrobeniusStructure(AlgebraPtr algebra, Vector eps);

  const AlgebraPtr& algebra() const { return algebra_; }
  FieldSpec field() const { return algebra_->field(); }
  std::size_t dim() const { return algebra_->dim(); }
  const Vector& eps() const { return eps_; }
  /// G_ij = eps(e_i e_j).
  const Matrix& gram() const { return gram_; }
  /// g = sum_kl M_kl e_k (x) e_l with M = G^{-1}.
  const Matrix& metric() const { return metric_; }
  Tensor metric_tensor() const;
  const Element& lollipop() const { return lollipop_; }

  Scalar form(const Element& a) const;
  Scalar pairing(const Element& a, const Element& b) const { return form(a * b); }

private:
  AlgebraPtr algebra_;
  Vector eps_;
  Matrix gram_;
  Matrix metric_;
  Element lollipop_;
};

/// Throws Error{Degenerate} when the Gram matrix is singular.
FrobeniusStructure make_frobenius(AlgebraPtr algebra, Vector eps);

/// Delta(b) = (b (x) 1) g, checked against g (1 (x) b).
Tensor coproduct(const FrobeniusStructure& f, const Element& b);

/// B = mu(g).
Element lollipop(const FrobeniusStructure& f);

/// The functional a -> eps(B a), as values on the basis.
Vector uloll(const FrobeniusStructure& f);

/// dim_j = eps(B^j).
Scalar fdim(const FrobeniusStructure& f, unsigned j);

/// dim_0 .. dim_{terms-1}.
Vector hilbert_series(const FrobeniusStructure& f, std::size_t terms);

/// Closed form from the minimal polynomial of B; its expansion is checked
/// against directly computed dimensions before returning.
RationalSeries rational_closed_form(const FrobeniusStructure& f);

/// Matrix Z of the Nakayama automorphism, (Z a, b) = (b, a).
Matrix nakayama_matrix(const FrobeniusStructure& f);
/// As nakayama_matrix, additionally asserting Z is an algebra automorphism
/// and Tr Z = dim_1.
Matrix nakayama(const FrobeniusStructure& f);

/// eps_u(a) = eps(u a). Throws Error{NotInvertible}.
FrobeniusStructure twist(const FrobeniusStructure& f, const Element& u);

/// (B (x) 1)(g - g_21) == 0.
bool cocommutativity_check(const FrobeniusStructure& f);

struct Classification {
  bool symmetric = false;
  bool weakly_symmetric = false;
  bool special = false;
  std::optional<Scalar> quasispecial;  ///< lambda when B = lambda 1 with lambda != 0
  Scalar counit_scale;                 ///< lambda' = eps(1)
  Scalar fdim;                         ///< dim_1
};

/// Computes weak symmetry two ways (uloll on [A, A], cocommutativity) and
/// throws Error{InvariantViolated} if they disagree.
Classification classify(const FrobeniusStructure& f);

}  // namespace frob
