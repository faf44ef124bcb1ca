#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frob/linalg.hpp"

namespace frob {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// One structure constant: e_i * e_j contains coeff * e_k.
struct StructureEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar coeff;
};

enum class Validation {
  Full,     ///< exhaustive associativity and unit checks
  Trusted,  ///< skip checks; for generated tables whose builder suite already passed
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional unital associative algebra in a fixed, ordered basis.
/// Immutable once built; share it through AlgebraPtr.
class Algebra {
public:
  Algebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVec> table,
          Vector unit);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }

  /// e_i * e_j as a sparse coefficient list.
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  std::optional<std::size_t> index_of(const std::string& label) const;

private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vector unit_;
};

/// Validates (unless trusted) and freezes an algebra. Errors: NotAssociative
/// with the witness triple, BadUnit, FieldMismatch, ShapeMismatch.
AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> labels,
                        const std::vector<StructureEntry>& structure, Vector unit,
                        Validation validation = Validation::Full);
AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> labels,
                        std::vector<SparseVec> table, Vector unit,
                        Validation validation = Validation::Full);

/// Value type: coefficients against the algebra's basis.
class Element {
public:
  Element(AlgebraPtr algebra, Vector coeffs);

  static Element zero(const AlgebraPtr& algebra);
  static Element one(const AlgebraPtr& algebra);
  static Element basis(const AlgebraPtr& algebra, std::size_t i);
  static Element scalar(const AlgebraPtr& algebra, const Scalar& s);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  FieldSpec field() const { return algebra_->field(); }
  bool is_zero() const { return is_zero_vector(coeffs_); }

  Element pow(unsigned exponent) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
  void check_same(const Element& other) const;

  AlgebraPtr algebra_;
  Vector coeffs_;
};

std::string format_element(const Element& e);

Element multiply(const Element& a, const Element& b);
/// Matrix of x -> a x; column j is a e_j.
Matrix left_mult_matrix(const Element& a);
/// Matrix of x -> x a.
Matrix right_mult_matrix(const Element& a);

/// Two-sided inverse, or nullopt.
std::optional<Element> try_inverse(const Element& u);
/// Throws Error{NotInvertible}.
Element element_inverse(const Element& u);

std::vector<Element> center(const AlgebraPtr& algebra);
/// Basis (echelon form) of the span of all e_i e_j - e_j e_i.
std::vector<Element> commutator_subspace(const AlgebraPtr& algebra);
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);

/// Whether x lies in the span of `basis`.
bool in_span(std::span<const Element> basis, const Element& x);

}  // namespace frob
