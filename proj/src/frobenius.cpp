#include "frob/frobenius.hpp"

#include "frob/kernels.hpp"
#include "frob/poly.hpp"

namespace frob {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvariantViolated, what);
}

Matrix invert_gram(const Matrix& gram) {
  try {
    return invert(gram);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::Degenerate, "Gram matrix of the form is singular");
    throw;
  }
}

Element compute_lollipop(const AlgebraPtr& alg, const Matrix& metric) {
  const std::size_t n = alg->dim();
  Vector b = zero_vector(alg->field(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Scalar& m = metric(k, l);
      if (m.is_zero()) continue;
      for (const auto& [i, c] : alg->product(k, l)) b[i] += m * c;
    }
  return Element(alg, std::move(b));
}

}  // namespace

FrobeniusStructure::FrobeniusStructure(AlgebraPtr algebra, Vector eps)
    : algebra_(std::move(algebra)),
      eps_(std::move(eps)),
      gram_(kernels::gram_matrix(*algebra_, eps_)),
      metric_(invert_gram(gram_)),
      lollipop_(compute_lollipop(algebra_, metric_)) {
  // Snake identities: sum (a, g1) g2 = a and sum g1 (g2, a) = a on the basis.
  const Matrix id = Matrix::identity(field(), dim());
  require(gram_ * metric_ == id, "left snake identity");
  require(metric_ * gram_ == id, "right snake identity");
  // B is central.
  for (std::size_t i = 0; i < dim(); ++i) {
    const Element e = Element::basis(algebra_, i);
    require(lollipop_ * e == e * lollipop_, "lollipop is not central");
  }
}

Tensor FrobeniusStructure::metric_tensor() const {
  Tensor t(field(), dim(), 2);
  for (std::size_t k = 0; k < dim(); ++k)
    for (std::size_t l = 0; l < dim(); ++l) t.add(k * dim() + l, metric_(k, l));
  return t;
}

Scalar FrobeniusStructure::form(const Element& a) const {
  if (a.algebra() != algebra_) throw Error(ErrorKind::AlgebraMismatch, "form applied to a foreign element");
  return dot(eps_, a.coeffs());
}

FrobeniusStructure make_frobenius(AlgebraPtr algebra, Vector eps) {
  if (eps.size() != algebra->dim()) throw Error(ErrorKind::ShapeMismatch, "form length != dimension");
  for (const auto& e : eps)
    if (!(e.field() == algebra->field())) throw Error(ErrorKind::FieldMismatch, "form coefficient field");
  return FrobeniusStructure(std::move(algebra), std::move(eps));
}

Tensor coproduct(const FrobeniusStructure& f, const Element& b) {
  const std::size_t n = f.dim();
  const auto& alg = f.algebra();
  Tensor left(f.field(), n, 2);
  Tensor right(f.field(), n, 2);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Scalar& m = f.metric()(k, l);
      if (m.is_zero()) continue;
      const Vector bk = (b * Element::basis(alg, k)).coeffs();
      for (std::size_t i = 0; i < n; ++i)
        if (!bk[i].is_zero()) left.add(i * n + l, m * bk[i]);
      const Vector lb = (Element::basis(alg, l) * b).coeffs();
      for (std::size_t i = 0; i < n; ++i)
        if (!lb[i].is_zero()) right.add(k * n + i, m * lb[i]);
    }
  require(left == right, "coproduct: (b (x) 1) g != g (1 (x) b)");
  return left;
}

Element lollipop(const FrobeniusStructure& f) { return f.lollipop(); }

Vector uloll(const FrobeniusStructure& f) {
  Vector out;
  const Element& b = f.lollipop();
  for (std::size_t i = 0; i < f.dim(); ++i) out.push_back(f.form(b * Element::basis(f.algebra(), i)));
  return out;
}

Scalar fdim(const FrobeniusStructure& f, unsigned j) { return f.form(f.lollipop().pow(j)); }

Vector hilbert_series(const FrobeniusStructure& f, std::size_t terms) {
  Vector dims;
  Element power = Element::one(f.algebra());
  for (std::size_t j = 0; j < terms; ++j) {
    dims.push_back(f.form(power));
    if (j + 1 < terms) power = power * f.lollipop();
  }
  return dims;
}

RationalSeries rational_closed_form(const FrobeniusStructure& f) {
  const FieldSpec field = f.field();
  std::vector<Vector> powers{Element::one(f.algebra()).coeffs()};
  Element current = Element::one(f.algebra());
  std::vector<Scalar> minpoly;
  // B satisfies a polynomial of degree <= dim, so this terminates.
  while (true) {
    current = current * f.lollipop();
    powers.push_back(current.coeffs());
    try {
      minpoly = minimal_polynomial(field, powers);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound || powers.size() > f.dim() + 1) throw;
    }
  }
  const std::size_t k = minpoly.size() - 1;
  Vector denominator(minpoly.rbegin(), minpoly.rend());
  Vector dims;
  for (const auto& p : std::span(powers).first(k)) dims.push_back(dot(f.eps(), p));
  auto product = poly::mul(denominator, dims);
  if (product.size() > k) product.resize(k);
  RationalSeries series = RationalSeries::make(field, std::move(product), std::move(denominator));

  const std::size_t check_terms = 2 * k + 2;
  require(series.expand(check_terms) == hilbert_series(f, check_terms),
          "closed form expansion disagrees with direct F-dimensions");
  return series;
}

Matrix nakayama_matrix(const FrobeniusStructure& f) {
  // Z^T G = G^T  =>  Z = G^{-T} G^T... solved as Z = (G^T G^{-1})^T.
  return (f.gram().transpose() * f.metric()).transpose();
}

Matrix nakayama(const FrobeniusStructure& f) {
  const Matrix z = nakayama_matrix(f);
  const auto& alg = f.algebra();
  const std::size_t n = f.dim();
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) images.emplace_back(alg, z.column(i));
  auto zeta = [&](const Element& a) { return Element(alg, z.apply(a.coeffs())); };
  require(zeta(Element::one(alg)) == Element::one(alg), "Nakayama map does not fix 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = Element::basis(alg, i) * Element::basis(alg, j);
      require(zeta(prod) == images[i] * images[j], "Nakayama map is not multiplicative");
    }
  require(z.trace() == fdim(f, 1), "Tr(Nakayama) != dim_1");
  return z;
}

FrobeniusStructure twist(const FrobeniusStructure& f, const Element& u) {
  const Element u_inv = element_inverse(u);
  const std::size_t n = f.dim();
  Vector eps_u;
  for (std::size_t i = 0; i < n; ++i) eps_u.push_back(f.form(u * Element::basis(f.algebra(), i)));
  FrobeniusStructure twisted = make_frobenius(f.algebra(), std::move(eps_u));

  // g_u = sum g1 (x) u^{-1} g2.
  const Matrix expected_metric = f.metric() * left_mult_matrix(u_inv).transpose();
  require(twisted.metric() == expected_metric, "twisted metric != sum g1 (x) u^-1 g2");
  // zeta_u = Ad_{u^-1} o zeta.
  const Matrix expected_nakayama = left_mult_matrix(u_inv) * right_mult_matrix(u) * nakayama_matrix(f);
  require(nakayama_matrix(twisted) == expected_nakayama, "twisted Nakayama != Ad_{u^-1} o zeta");
  return twisted;
}

bool cocommutativity_check(const FrobeniusStructure& f) {
  const Matrix antisym = f.metric() - f.metric().transpose();
  const Matrix lhs = left_mult_matrix(f.lollipop()) * antisym;
  return is_zero_vector(lhs.entries());
}

Classification classify(const FrobeniusStructure& f) {
  Classification c;
  const auto& alg = f.algebra();
  const Element one = Element::one(alg);
  const Element& b = f.lollipop();

  c.symmetric = f.gram().is_symmetric();
  c.special = b == one;
  if (!b.is_zero()) {
    // B = lambda 1: read lambda off the first nonzero coordinate of 1.
    std::size_t idx = 0;
    while (one[idx].is_zero()) ++idx;
    const Scalar lambda = b[idx] / one[idx];
    if (lambda * one == b) c.quasispecial = lambda;
  }

  const Vector functional = uloll(f);
  bool vanishes = true;
  for (const auto& comm : commutator_subspace(alg)) {
    if (!dot(functional, comm.coeffs()).is_zero()) {
      vanishes = false;
      break;
    }
  }
  const bool cocommutative = cocommutativity_check(f);
  require(vanishes == cocommutative,
          "weak symmetry tests disagree: uloll-on-commutators says " + std::string(vanishes ? "yes" : "no") +
              ", cocommutativity says " + (cocommutative ? "yes" : "no"));
  c.weakly_symmetric = vanishes;
  c.counit_scale = f.form(one);
  c.fdim = f.form(b);

  require(!c.special || (c.quasispecial && c.quasispecial->is_one()), "special but not quasispecial with 1");
  require(!c.symmetric || c.weakly_symmetric, "symmetric but not weakly symmetric");
  require(!(c.quasispecial && c.weakly_symmetric && !c.symmetric),
          "asymmetric weakly symmetric structure is quasispecial");
  return c;
}

}  // namespace frob
