#include "frob/algebra.hpp"

#include <map>

#include "frob/kernels.hpp"

namespace frob {

Algebra::Algebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVec> table,
                 Vector unit)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (table_.size() != n * n) throw Error(ErrorKind::ShapeMismatch, "structure table must have dim^2 rows");
  if (unit_.size() != n) throw Error(ErrorKind::ShapeMismatch, "unit length != dimension");
  for (const auto& u : unit_)
    if (!(u.field() == field_)) throw Error(ErrorKind::FieldMismatch, "unit coefficient field");
  for (auto& row : table_) {
    // Canonical rows: sorted by index, no zeros, no duplicates.
    std::map<std::size_t, Scalar> merged;
    for (auto& [k, c] : row) {
      if (k >= n) throw Error(ErrorKind::ShapeMismatch, "structure index out of range");
      if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "structure constant field");
      auto [it, inserted] = merged.try_emplace(k, c);
      if (!inserted) it->second += c;
    }
    row.clear();
    for (auto& [k, c] : merged)
      if (!c.is_zero()) row.emplace_back(k, std::move(c));
  }
}

Vector Algebra::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorKind::ShapeMismatch, "element length != dimension");
  Vector out(n, Scalar::zero(field_));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const SparseVec& row = product(i, j);
      if (row.empty()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : row) out[k] += ab * c;
    }
  }
  return out;
}

std::optional<std::size_t> Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVec> table,
                        Vector unit, Validation validation) {
  auto algebra = std::make_shared<const Algebra>(field, std::move(labels), std::move(table), std::move(unit));
  if (validation == Validation::Full) {
    if (auto t = kernels::associativity_violation(*algebra)) {
      throw Error(ErrorKind::NotAssociative, "(e_" + std::to_string(t->i) + " e_" + std::to_string(t->j) +
                                                 ") e_" + std::to_string(t->k) + " != e_" +
                                                 std::to_string(t->i) + " (e_" + std::to_string(t->j) +
                                                 " e_" + std::to_string(t->k) + ")");
    }
    if (auto i = kernels::unit_violation(*algebra)) {
      throw Error(ErrorKind::BadUnit, "unit law fails on basis element " + std::to_string(*i));
    }
  }
  return algebra;
}

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> labels,
                        const std::vector<StructureEntry>& structure, Vector unit, Validation validation) {
  const std::size_t n = labels.size();
  std::vector<SparseVec> table(n * n);
  for (const auto& e : structure) {
    if (e.i >= n || e.j >= n || e.k >= n) throw Error(ErrorKind::ShapeMismatch, "structure index out of range");
    table[e.i * n + e.j].emplace_back(e.k, e.coeff);
  }
  return make_algebra(field, std::move(labels), std::move(table), std::move(unit), validation);
}

Element::Element(AlgebraPtr algebra, Vector coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim()) throw Error(ErrorKind::ShapeMismatch, "element length != dimension");
  for (const auto& c : coeffs_)
    if (!(c.field() == algebra_->field())) throw Error(ErrorKind::FieldMismatch, "element coefficient field");
}

Element Element::zero(const AlgebraPtr& algebra) {
  return Element(algebra, zero_vector(algebra->field(), algebra->dim()));
}

Element Element::one(const AlgebraPtr& algebra) { return Element(algebra, algebra->unit()); }

Element Element::basis(const AlgebraPtr& algebra, std::size_t i) {
  Vector v = zero_vector(algebra->field(), algebra->dim());
  v.at(i) = Scalar::one(algebra->field());
  return Element(algebra, std::move(v));
}

Element Element::scalar(const AlgebraPtr& algebra, const Scalar& s) { return s * one(algebra); }

void Element::check_same(const Element& other) const {
  if (algebra_ != other.algebra_) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
}

Element Element::pow(unsigned exponent) const {
  Element result = one(algebra_);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Element& Element::operator+=(const Element& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  return Element(a.algebra_, a.algebra_->multiply(a.coeffs_, b.coeffs_));
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

std::string format_element(const Element& e) {
  std::string out;
  const auto& labels = e.algebra()->labels();
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
    if (e[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_scalar(e[i]) + ")" + labels[i];
  }
  return out.empty() ? "0" : out;
}

Element multiply(const Element& a, const Element& b) { return a * b; }

Matrix left_mult_matrix(const Element& a) {
  const auto& alg = *a.algebra();
  const std::size_t n = alg.dim();
  Matrix m(alg.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = (a * Element::basis(a.algebra(), j)).coeffs();
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

Matrix right_mult_matrix(const Element& a) {
  const auto& alg = *a.algebra();
  const std::size_t n = alg.dim();
  Matrix m(alg.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = (Element::basis(a.algebra(), j) * a).coeffs();
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

std::optional<Element> try_inverse(const Element& u) {
  auto x = solve(left_mult_matrix(u), u.algebra()->unit());
  if (!x) return std::nullopt;
  Element inv(u.algebra(), std::move(*x));
  const Element one = Element::one(u.algebra());
  if (u * inv != one || inv * u != one) return std::nullopt;
  return inv;
}

Element element_inverse(const Element& u) {
  auto inv = try_inverse(u);
  if (!inv) throw Error(ErrorKind::NotInvertible, "element " + format_element(u) + " is not invertible");
  return *inv;
}

std::vector<Element> center(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->dim();
  // Row (i, k): coefficient of e_k in x e_i - e_i x, linear in x.
  Matrix system(algebra->field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& [k, c] : algebra->product(l, i)) system(i * n + k, l) += c;
      for (const auto& [k, c] : algebra->product(i, l)) system(i * n + k, l) -= c;
    }
  std::vector<Element> basis;
  for (auto& v : nullspace(system)) basis.emplace_back(algebra, std::move(v));
  return basis;
}

std::vector<Element> commutator_subspace(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->dim();
  std::vector<Vector> commutators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = zero_vector(algebra->field(), n);
      for (const auto& [k, c] : algebra->product(i, j)) v[k] += c;
      for (const auto& [k, c] : algebra->product(j, i)) v[k] -= c;
      if (!is_zero_vector(v)) commutators.push_back(std::move(v));
    }
  std::vector<Element> basis;
  for (auto& v : span_basis(algebra->field(), n, commutators)) basis.emplace_back(algebra, std::move(v));
  return basis;
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw Error(ErrorKind::FieldMismatch, "direct_sum of different fields");
  const std::size_t na = a->dim();
  const std::size_t nb = b->dim();
  const std::size_t n = na + nb;
  std::vector<std::string> labels = a->labels();
  for (const auto& l : b->labels()) labels.push_back(l);
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) table[i * n + j] = a->product(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      SparseVec row = b->product(i, j);
      for (auto& [k, c] : row) k += na;
      table[(na + i) * n + (na + j)] = std::move(row);
    }
  Vector unit = a->unit();
  for (const auto& u : b->unit()) unit.push_back(u);
  // Block sums of valid algebras are valid.
  return make_algebra(a->field(), std::move(labels), std::move(table), std::move(unit), Validation::Trusted);
}

bool in_span(std::span<const Element> basis, const Element& x) {
  std::vector<Vector> vs;
  for (const auto& b : basis) vs.push_back(b.coeffs());
  return in_span(x.field(), vs, x.coeffs());
}

}  // namespace frob
