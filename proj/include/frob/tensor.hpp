#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "frob/linalg.hpp"

namespace frob {

/// Sparse tensor with `legs` indices each ranging over [0, dim). A multi-index
/// is packed base-`dim` with leg 0 most significant. Zero entries are never
/// stored, so equality is map equality.
class Tensor {
public:
  using Key = std::uint64_t;

  Tensor(FieldSpec field, std::size_t dim, std::size_t legs);

  static Tensor scalar(const Scalar& value, std::size_t dim);
  static Tensor vector(std::span<const Scalar> coeffs);
  /// The identity map on `legs` strands viewed as a 2*legs tensor (inputs first).
  static Tensor identity(FieldSpec field, std::size_t dim, std::size_t legs);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t legs() const { return legs_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::map<Key, Scalar>& entries() const { return entries_; }

  Scalar at(std::span<const std::size_t> index) const;
  /// Adds `value` at the index; drops the entry if the result is zero.
  void add(Key key, const Scalar& value);
  void add(std::span<const std::size_t> index, const Scalar& value);

  Key encode(std::span<const std::size_t> index) const;
  std::vector<std::size_t> decode(Key key) const;

  /// Value of a 0-leg tensor.
  Scalar scalar_value() const;
  /// Coefficients of a 1-leg tensor.
  Vector as_vector() const;
  /// Exchanges legs 0 and 1 of a 2-leg tensor.
  Tensor swapped() const;

  friend bool operator==(const Tensor& a, const Tensor& b);
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
  FieldSpec field_;
  std::size_t dim_;
  std::size_t legs_;
  std::map<Key, Scalar> entries_;
};

/// A linear map A^{in} -> A^{out} in sparse row form: for every packed input
/// multi-index, the packed outputs and their coefficients.
struct GeneratorMap {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t dim = 0;
  FieldSpec field;
  std::vector<std::vector<std::pair<Tensor::Key, Scalar>>> rows;

  static GeneratorMap identity(FieldSpec field, std::size_t dim);
};

/// Contracts `gen` into legs [position, position + gen.in) of `t`, replacing
/// them by gen.out fresh legs. Cost is O(nnz(t) * row length), the slice is
/// never materialised densely.
Tensor apply_generator(const Tensor& t, std::size_t position, const GeneratorMap& gen);

/// Largest leg count whose packed index fits a 64-bit key for this dimension.
std::size_t max_legs_for_dim(std::size_t dim);

}  // namespace frob
