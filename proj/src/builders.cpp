#include "frob/builders.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace frob {

namespace {

Matrix checked_inverse(const Matrix& u) {
  try {
    return invert(u);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::NotInvertible, "matrix is singular");
    throw;
  }
}

std::string unit_label(std::size_t i, std::size_t j) {
  return "E" + std::to_string(i + 1) + std::to_string(j + 1);
}

std::vector<std::size_t> block_offsets(std::span<const std::size_t> dims) {
  std::vector<std::size_t> offsets{0};
  for (auto d : dims) offsets.push_back(offsets.back() + d * d);
  return offsets;
}

}  // namespace

AlgebraPtr matrix_algebra(std::size_t d, FieldSpec field) {
  const std::size_t dims[] = {d};
  auto alg = block_algebra(dims, field);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) labels.push_back(unit_label(i, j));
  std::vector<SparseVec> table;
  for (std::size_t a = 0; a < d * d; ++a)
    for (std::size_t b = 0; b < d * d; ++b) table.push_back(alg->product(a, b));
  return make_algebra(field, std::move(labels), std::move(table), alg->unit(), Validation::Trusted);
}

Element matrix_element(const AlgebraPtr& algebra, const Matrix& m) {
  if (m.rows() * m.cols() != algebra->dim() || m.rows() != m.cols())
    throw Error(ErrorKind::ShapeMismatch, "matrix size does not match the algebra");
  return Element(algebra, m.entries());
}

MatrixFrobenius matrix_frobenius(const Matrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::ShapeMismatch, "twist matrix must be square");
  const std::size_t d = u.rows();
  const FieldSpec field = u.field();
  const Matrix u_inv = checked_inverse(u);
  auto alg = matrix_algebra(d, field);
  // Tr(u E_ij) = u_ji.
  Vector eps;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) eps.push_back(u(j, i));

  MatrixPrediction p;
  const Scalar tr = u.trace();
  const Scalar tr_inv = u_inv.trace();
  if (!tr_inv.is_zero()) p.quasispecial = tr_inv;
  p.counit_scale = tr;
  p.fdim = tr * tr_inv;
  p.series = RationalSeries::geometric(tr, tr_inv);
  return {make_frobenius(alg, std::move(eps)), std::move(p)};
}

AlgebraPtr block_algebra(std::span<const std::size_t> dims, FieldSpec field) {
  const auto offsets = block_offsets(dims);
  const std::size_t n = offsets.back();
  std::vector<std::string> labels;
  std::vector<SparseVec> table(n * n);
  Vector unit = zero_vector(field, n);
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const std::size_t d = dims[b];
    const std::size_t o = offsets[b];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) labels.push_back(unit_label(i, j) + "_" + std::to_string(b + 1));
    for (std::size_t i = 0; i < d; ++i) unit[o + i * d + i] = Scalar::one(field);
    // E_ij E_jl = E_il.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l)
          table[(o + i * d + j) * n + (o + j * d + l)].emplace_back(o + i * d + l, Scalar::one(field));
  }
  return make_algebra(field, std::move(labels), std::move(table), std::move(unit), Validation::Trusted);
}

Element block_element(const AlgebraPtr& algebra, std::span<const std::size_t> dims,
                      std::span<const Matrix> blocks) {
  if (blocks.size() != dims.size()) throw Error(ErrorKind::ShapeMismatch, "one matrix per block expected");
  Vector coeffs;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    if (blocks[b].rows() != dims[b] || blocks[b].cols() != dims[b])
      throw Error(ErrorKind::ShapeMismatch, "block " + std::to_string(b + 1) + " has the wrong size");
    coeffs.insert(coeffs.end(), blocks[b].entries().begin(), blocks[b].entries().end());
  }
  if (coeffs.size() != algebra->dim()) throw Error(ErrorKind::ShapeMismatch, "blocks do not match the algebra");
  return Element(algebra, std::move(coeffs));
}

FrobeniusStructure semisimple_special_form(std::span<const std::size_t> dims, FieldSpec field) {
  auto alg = block_algebra(dims, field);
  Vector eps = zero_vector(field, alg->dim());
  const auto offsets = block_offsets(dims);
  for (std::size_t b = 0; b < dims.size(); ++b)
    for (std::size_t i = 0; i < dims[b]; ++i)
      eps[offsets[b] + i * dims[b] + i] = Scalar::from_int(field, static_cast<long>(dims[b]));
  return make_frobenius(alg, std::move(eps));
}

std::pair<FrobeniusStructure, BlockPrediction> block_twist(std::span<const std::size_t> dims,
                                                           std::span<const Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::Usage, "at least one block required");
  const FieldSpec field = blocks.front().field();
  FrobeniusStructure special = semisimple_special_form(dims, field);
  BlockPrediction p{Scalar::zero(field), Scalar::zero(field), RationalSeries::make(field, {}, {Scalar::one(field)})};
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const Scalar d = Scalar::from_int(field, static_cast<long>(dims[b]));
    const Scalar tr = blocks[b].trace();
    const Scalar tr_inv = checked_inverse(blocks[b]).trace();
    p.counit_scale += d * tr;
    p.fdim += tr * tr_inv;
    p.series = p.series + RationalSeries::geometric(d * tr, tr_inv / d);
  }
  const Element u = block_element(special.algebra(), dims, blocks);
  return {twist(special, u), std::move(p)};
}

WeakBlockForm weakly_symmetric_block_form(std::span<const std::size_t> dims,
                                          std::span<const BlockChoice> choices) {
  if (choices.size() != dims.size()) throw Error(ErrorKind::ShapeMismatch, "one choice per block expected");
  if (dims.empty()) throw Error(ErrorKind::Usage, "at least one block required");
  FieldSpec field = std::visit([](const auto& c) { return c.field(); }, choices.front());
  std::vector<Matrix> blocks;
  Scalar fdim = Scalar::zero(field);
  RationalSeries series = RationalSeries::make(field, {}, {Scalar::one(field)});
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const Scalar d = Scalar::from_int(field, static_cast<long>(dims[b]));
    if (const auto* mu = std::get_if<Scalar>(&choices[b])) {
      if (mu->is_zero()) throw Error(ErrorKind::NotInvertible, "mu must be nonzero");
      Matrix m(field, dims[b], dims[b]);
      for (std::size_t i = 0; i < dims[b]; ++i) m(i, i) = mu->inv();
      blocks.push_back(std::move(m));
      fdim += d * d;
      series = series + RationalSeries::geometric(d * d * mu->inv(), *mu);
    } else {
      const Matrix& m = std::get<Matrix>(choices[b]);
      if (!checked_inverse(m).trace().is_zero())
        throw Error(ErrorKind::Usage, "block " + std::to_string(b + 1) + ": Tr(u^-1) must vanish outside I");
      blocks.push_back(m);
    }
  }
  auto [frobenius, predicted] = block_twist(dims, blocks);
  return {std::move(frobenius), std::move(fdim), std::move(series)};
}

// ---- groups ---------------------------------------------------------------

GroupTable make_group(std::vector<std::string> labels, std::vector<std::size_t> table) {
  GroupTable g;
  g.order = labels.size();
  const std::size_t n = g.order;
  auto bad = [](const std::string& what) { throw Error(ErrorKind::BadGroupTable, what); };
  if (n == 0) bad("empty group");
  if (table.size() != n * n) bad("table must be order x order");
  for (auto x : table)
    if (x >= n) bad("table entry out of range");
  g.table = std::move(table);
  g.labels = std::move(labels);

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) bad("no identity element");
  g.identity = *identity;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          bad("not associative at (" + g.labels[a] + ", " + g.labels[b] + ", " + g.labels[c] + ")");
  g.inverse.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inverse[a] = b;
    if (g.inverse[a] == n) bad("no inverse for " + g.labels[a]);
  }
  return g;
}

GroupTable s3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> base = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c{};
    for (int x = 0; x < 3; ++x) c[x] = a[b[x]];
    return c;
  };
  std::vector<Perm> perms = base;
  perms.push_back(compose(base[1], base[2]));  // rs
  perms.push_back(compose(base[2], base[1]));  // sr
  const std::size_t n = perms.size();
  std::vector<std::size_t> table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Perm c = compose(perms[a], perms[b]);
      table.push_back(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  GroupTable g = make_group({"e", "r", "s", "t", "rs", "sr"}, std::move(table));
  g.aliases = {{"()", 0},    {"(12)", 1},  {"(21)", 1},  {"(23)", 2},  {"(32)", 2},
               {"(13)", 3},  {"(31)", 3},  {"(123)", 4}, {"(231)", 4}, {"(312)", 4},
               {"(132)", 5}, {"(321)", 5}, {"(213)", 5}};
  return g;
}

GroupTable cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Usage, "cyclic group order must be positive");
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<std::size_t> table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table.push_back((a + b) % n);
  return make_group(std::move(labels), std::move(table));
}

AlgebraPtr group_algebra(const GroupTable& g, FieldSpec field) {
  const std::size_t n = g.order;
  std::vector<SparseVec> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b].emplace_back(g.mul(a, b), Scalar::one(field));
  Vector unit = zero_vector(field, n);
  unit[g.identity] = Scalar::one(field);
  return make_algebra(field, g.labels, std::move(table), std::move(unit), Validation::Trusted);
}

FrobeniusStructure group_standard_form(const GroupTable& g, FieldSpec field) {
  auto alg = group_algebra(g, field);
  Vector eps = zero_vector(field, g.order);
  eps[g.identity] = Scalar::one(field);
  return make_frobenius(alg, std::move(eps));
}

Element group_twisted_lollipop(const GroupTable& g, const Element& u) {
  const auto& alg = u.algebra();
  const Element u_inv = element_inverse(u);
  Element sum = Element::zero(alg);
  for (std::size_t x = 0; x < g.order; ++x)
    sum += Element::basis(alg, x) * u_inv * Element::basis(alg, g.inverse[x]);
  return sum;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(g.order, false);
  for (std::size_t a = 0; a < g.order; ++a) {
    if (seen[a]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t x = 0; x < g.order; ++x) {
      const std::size_t c = g.mul(g.mul(x, a), g.inverse[x]);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Element class_sum(const AlgebraPtr& algebra, std::span<const std::size_t> cls) {
  Element sum = Element::zero(algebra);
  for (auto i : cls) sum += Element::basis(algebra, i);
  return sum;
}

}  // namespace frob
