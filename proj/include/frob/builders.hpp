#pragma once

#include <map>
#include <optional>
#include <variant>

#include "frob/frobenius.hpp"

namespace frob {

// ---- matrix and semisimple algebras -------------------------------------
// Basis of M_d: matrix units E_ij, row-major, labels "E11", "E12", ...
// Blocks of a direct sum are concatenated; block b (1-based) uses labels
// "E11_b" etc.

AlgebraPtr matrix_algebra(std::size_t d, FieldSpec field = FieldSpec::rational());
/// The element of M_d with matrix m (m must be d x d).
Element matrix_element(const AlgebraPtr& algebra, const Matrix& m);

struct MatrixPrediction {
  std::optional<Scalar> quasispecial;  ///< Tr(u^-1) when nonzero
  Scalar counit_scale;                 ///< Tr(u)
  Scalar fdim;                         ///< Tr(u) Tr(u^-1)
  RationalSeries series;               ///< Tr(u) / (1 - Tr(u^-1) x)
};

struct MatrixFrobenius {
  FrobeniusStructure frobenius;
  MatrixPrediction predicted;
};

/// eps(a) = Tr(u a) on M_d. Throws Error{NotInvertible}.
MatrixFrobenius matrix_frobenius(const Matrix& u);

AlgebraPtr block_algebra(std::span<const std::size_t> dims, FieldSpec field = FieldSpec::rational());
Element block_element(const AlgebraPtr& algebra, std::span<const std::size_t> dims,
                      std::span<const Matrix> blocks);

/// eps = sum_i d_i Tr on the blocks.
FrobeniusStructure semisimple_special_form(std::span<const std::size_t> dims,
                                           FieldSpec field = FieldSpec::rational());

struct BlockPrediction {
  Scalar counit_scale;  ///< sum d_i Tr(u_i)
  Scalar fdim;          ///< sum Tr(u_i) Tr(u_i^-1)
  RationalSeries series;
};

/// Twist of the special form by u = (+) u_i, with the predicted values.
std::pair<FrobeniusStructure, BlockPrediction> block_twist(std::span<const std::size_t> dims,
                                                           std::span<const Matrix> blocks);

/// Per block: either mu_i (block i in I, u_i = mu_i^-1 I) or a matrix u_i with
/// Tr(u_i^-1) = 0 (block not in I).
using BlockChoice = std::variant<Scalar, Matrix>;

struct WeakBlockForm {
  FrobeniusStructure frobenius;
  Scalar fdim;            ///< sum_{i in I} d_i^2
  RationalSeries series;  ///< sum_{i in I} d_i^2 mu_i^-1 / (1 - mu_i x)
};

/// Throws Error{NotInvertible}, or Error{Usage} when a matrix choice has
/// Tr(u_i^-1) != 0.
WeakBlockForm weakly_symmetric_block_form(std::span<const std::size_t> dims,
                                          std::span<const BlockChoice> choices);

// ---- groups -------------------------------------------------------------

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::size_t> table;  ///< row-major, table[a * order + b] = ab
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> aliases;  ///< extra names, e.g. cycle notation

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
};

/// Validates the group axioms; throws Error{BadGroupTable} naming a witness.
GroupTable make_group(std::vector<std::string> labels, std::vector<std::size_t> table);

/// Elements e, r=(12), s=(23), t=(13), rs=(123), sr=(132), composing as maps
/// (ab)(x) = a(b(x)). Cycle notation is accepted through `aliases`.
GroupTable s3();
/// Labels e, g, g^2, ...
GroupTable cyclic(std::size_t n);

AlgebraPtr group_algebra(const GroupTable& g, FieldSpec field = FieldSpec::rational());
/// eps = delta_e.
FrobeniusStructure group_standard_form(const GroupTable& g, FieldSpec field = FieldSpec::rational());
/// sum_g g u^-1 g^-1: the lollipop of the standard form twisted by u.
Element group_twisted_lollipop(const GroupTable& g, const Element& u);

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g);
Element class_sum(const AlgebraPtr& algebra, std::span<const std::size_t> cls);

// ---- u_q(sl2) and the Taft algebra ----------------------------------------
// q = zeta_n in Q(zeta_n). u_q(sl2) basis K^i F^j E^k at index i n^2 + j n + k;
// Taft basis K^i F^j at index i n + j. Labels like "1", "K^2", "KFE^2".

struct PBWMonomial {
  unsigned i = 0;
  unsigned j = 0;
  unsigned k = 0;
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

std::size_t pbw_index(unsigned n, PBWMonomial m);
PBWMonomial pbw_monomial(unsigned n, std::size_t index);
std::string pbw_label(PBWMonomial m);

AlgebraPtr uqsl2(unsigned n);
/// Normal-orders a word over {K, k (= K^-1), E, F} times a scalar.
Element normal_order(const AlgebraPtr& uq, unsigned n, std::string_view word, const Scalar& coeff);

/// eps = integral, supported on K F^{n-1} E^{n-1}.
FrobeniusStructure uqsl2_integral_form(unsigned n);
/// The integral form twisted by K.
FrobeniusStructure uqsl2_symmetric_form(unsigned n);
/// Twist of the integral form by u = sum_i u_i K^i. Throws Error{NotInvertible}.
FrobeniusStructure uqsl2_cartan_twist(unsigned n, std::span<const Scalar> coeffs);
/// Projection onto monomials with equal numbers of F and E.
Element degree_zero_part(const Element& x, unsigned n);
/// det of the circulant matrix with first column (u_0, ..., u_{n-1}).
Scalar circulant_determinant(std::span<const Scalar> coeffs);

AlgebraPtr taft(unsigned n);
/// eps supported on F^{n-1}.
FrobeniusStructure taft_form(unsigned n);

}  // namespace frob
