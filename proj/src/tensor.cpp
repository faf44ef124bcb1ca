#include "frob/tensor.hpp"

#include <limits>

namespace frob {

namespace {

Tensor::Key ipow(std::size_t base, std::size_t exp) {
  Tensor::Key out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::size_t max_legs_for_dim(std::size_t dim) {
  if (dim <= 1) return 64;
  std::size_t legs = 0;
  unsigned __int128 v = 1;
  while (v * dim <= std::numeric_limits<Tensor::Key>::max()) {
    v *= dim;
    ++legs;
  }
  return legs;
}

Tensor::Tensor(FieldSpec field, std::size_t dim, std::size_t legs)
    : field_(field), dim_(dim), legs_(legs) {
  if (legs > max_legs_for_dim(dim)) {
    throw Error(ErrorKind::ShapeMismatch, "tensor with " + std::to_string(legs) +
                                              " legs of dimension " + std::to_string(dim) +
                                              " exceeds the packed index range");
  }
}

Tensor Tensor::scalar(const Scalar& value, std::size_t dim) {
  Tensor t(value.field(), dim, 0);
  t.add(Key{0}, value);
  return t;
}

Tensor Tensor::vector(std::span<const Scalar> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::ShapeMismatch, "empty vector");
  Tensor t(coeffs.front().field(), coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.add(Key{i}, coeffs[i]);
  return t;
}

Tensor Tensor::identity(FieldSpec field, std::size_t dim, std::size_t legs) {
  Tensor t(field, dim, 2 * legs);
  const Key count = ipow(dim, legs);
  const Scalar one = Scalar::one(field);
  for (Key k = 0; k < count; ++k) t.add(k * count + k, one);
  return t;
}

Tensor::Key Tensor::encode(std::span<const std::size_t> index) const {
  if (index.size() != legs_) throw Error(ErrorKind::ShapeMismatch, "index length != leg count");
  Key key = 0;
  for (auto i : index) {
    if (i >= dim_) throw Error(ErrorKind::ShapeMismatch, "index out of range");
    key = key * dim_ + i;
  }
  return key;
}

std::vector<std::size_t> Tensor::decode(Key key) const {
  std::vector<std::size_t> index(legs_);
  for (std::size_t l = legs_; l-- > 0;) {
    index[l] = static_cast<std::size_t>(key % dim_);
    key /= dim_;
  }
  return index;
}

Scalar Tensor::at(std::span<const std::size_t> index) const {
  auto it = entries_.find(encode(index));
  return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

void Tensor::add(Key key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void Tensor::add(std::span<const std::size_t> index, const Scalar& value) { add(encode(index), value); }

Scalar Tensor::scalar_value() const {
  if (legs_ != 0) throw Error(ErrorKind::ShapeMismatch, "scalar_value on a tensor with legs");
  return entries_.empty() ? Scalar::zero(field_) : entries_.begin()->second;
}

Vector Tensor::as_vector() const {
  if (legs_ != 1) throw Error(ErrorKind::ShapeMismatch, "as_vector needs exactly one leg");
  Vector v(dim_, Scalar::zero(field_));
  for (const auto& [k, s] : entries_) v[k] = s;
  return v;
}

Tensor Tensor::swapped() const {
  if (legs_ != 2) throw Error(ErrorKind::ShapeMismatch, "swapped needs exactly two legs");
  Tensor t(field_, dim_, 2);
  for (const auto& [k, s] : entries_) t.add((k % dim_) * dim_ + k / dim_, s);
  return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.legs_ == b.legs_ && a.entries_ == b.entries_;
}

GeneratorMap GeneratorMap::identity(FieldSpec field, std::size_t dim) {
  GeneratorMap g{1, 1, dim, field, {}};
  g.rows.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) g.rows[i].emplace_back(i, Scalar::one(field));
  return g;
}

Tensor apply_generator(const Tensor& t, std::size_t position, const GeneratorMap& gen) {
  if (gen.dim != t.dim() || !(gen.field == t.field())) {
    throw Error(ErrorKind::ShapeMismatch, "generator and tensor disagree on dimension or field");
  }
  if (position + gen.in > t.legs()) {
    throw Error(ErrorKind::ShapeMismatch, "generator position " + std::to_string(position) +
                                              " with arity " + std::to_string(gen.in) +
                                              " exceeds " + std::to_string(t.legs()) + " legs");
  }
  const std::size_t n = t.dim();
  const std::size_t suffix_legs = t.legs() - position - gen.in;
  const Tensor::Key suffix_span = ipow(n, suffix_legs);
  const Tensor::Key in_span = ipow(n, gen.in);
  const Tensor::Key out_span = ipow(n, gen.out);

  Tensor out(t.field(), n, t.legs() - gen.in + gen.out);
  for (const auto& [key, value] : t.entries()) {
    const Tensor::Key suffix = key % suffix_span;
    const Tensor::Key rest = key / suffix_span;
    const Tensor::Key middle = rest % in_span;
    const Tensor::Key prefix = rest / in_span;
    for (const auto& [o, c] : gen.rows[middle]) {
      out.add(((prefix * out_span) + o) * suffix_span + suffix, value * c);
    }
  }
  return out;
}

}  // namespace frob
