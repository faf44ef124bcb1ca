#include <doctest.h>

#include <algorithm>
#include <map>

#include "frob/builders.hpp"
#include "frob/expr.hpp"
#include "support.hpp"

using namespace frob;
using frob::test::mat;
using frob::test::Q;
using frob::test::vec;

namespace {

// Permutations of {0,1,2} as image arrays, composed as maps; independent of
// GroupTable and the group algebra code.
using Perm = std::array<int, 3>;
using GroupElt = std::map<Perm, Rational>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c{};
  for (int x = 0; x < 3; ++x) c[x] = a[b[x]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c{};
  for (int x = 0; x < 3; ++x) c[a[x]] = x;
  return c;
}

GroupElt times(const GroupElt& a, const GroupElt& b) {
  GroupElt out;
  for (const auto& [g, x] : a)
    for (const auto& [h, y] : b) out[compose(g, h)] += x * y;
  return out;
}

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  Perm p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// dim_j for the delta_e form twisted by a group element u, straight from
// dim_j = delta_e(u (sum_g g u^-1 g^-1)^j).
std::vector<Rational> oracle_dims(const Perm& u, int terms) {
  GroupElt b;
  for (const auto& g : all_perms()) b[compose(compose(g, inverse(u)), inverse(g))] += 1;
  std::vector<Rational> dims;
  GroupElt power{{u, Rational(1)}};
  for (int j = 0; j < terms; ++j) {
    const Perm e{0, 1, 2};
    dims.push_back(power.count(e) ? power[e] : Rational(0));
    power = times(power, b);
  }
  return dims;
}

Vector as_vector(const std::vector<Rational>& v) {
  Vector out;
  for (const auto& x : v) out.emplace_back(FieldSpec::rational(), x);
  return out;
}

}  // namespace

TEST_SUITE("builders") {
  TEST_CASE("matrix algebra at u = I is symmetric quasispecial with series 2/(1-2x)") {
    auto mf = matrix_frobenius(Matrix::identity(FieldSpec::rational(), 2));
    const auto c = classify(mf.frobenius);
    CHECK(c.symmetric);
    REQUIRE(c.quasispecial);
    CHECK(*c.quasispecial == Q(2));
    CHECK(rational_closed_form(mf.frobenius) == RationalSeries::make(FieldSpec::rational(), vec({"2"}), vec({"1", "-2"})));
    CHECK(mf.predicted.series == rational_closed_form(mf.frobenius));
  }

  TEST_CASE("matrix algebra at u = diag(1,-1) is asymmetric weakly symmetric") {
    auto mf = matrix_frobenius(mat({{"1", "0"}, {"0", "-1"}}));
    const auto c = classify(mf.frobenius);
    CHECK_FALSE(c.symmetric);
    CHECK(c.weakly_symmetric);
    CHECK(c.fdim.is_zero());
    CHECK_FALSE(mf.predicted.quasispecial);
  }

  TEST_CASE("matrix algebra: non-scalar u gives an asymmetric form") {
    auto mf = matrix_frobenius(mat({{"1", "1"}, {"0", "1"}}));
    CHECK_FALSE(classify(mf.frobenius).symmetric);
    CHECK_THROWS_AS(matrix_frobenius(mat({{"1", "1"}, {"1", "1"}})), Error);
  }

  TEST_CASE("semisimple special form on K + K + M2") {
    const std::size_t dims[] = {1, 1, 2};
    auto f = semisimple_special_form(dims);
    const auto c = classify(f);
    CHECK(c.special);
    CHECK(c.symmetric);
    CHECK(c.fdim == Q(6));
    const std::size_t two[] = {2};
    auto m2 = semisimple_special_form(two);
    CHECK(lollipop(m2) == Element::one(m2.algebra()));
  }

  TEST_CASE("block twist reproduces sum Tr(u_i) Tr(u_i^-1)") {
    const std::size_t dims[] = {1, 2};
    const Matrix blocks[] = {mat({{"3"}}), mat({{"1", "2"}, {"0", "5"}})};
    auto [f, p] = block_twist(dims, blocks);
    CHECK(fdim(f, 1) == p.fdim);
    CHECK(fdim(f, 0) == p.counit_scale);
    CHECK(rational_closed_form(f) == p.series);
  }

  TEST_CASE("weakly symmetric block forms") {
    const std::size_t dims[] = {1, 1, 2};
    const BlockChoice choices[] = {Q(1), Q(1), mat({{"1", "0"}, {"0", "-1"}})};
    auto w = weakly_symmetric_block_form(dims, choices);
    CHECK(classify(w.frobenius).weakly_symmetric);
    CHECK(fdim(w.frobenius, 1) == Q(2));
    CHECK(w.fdim == Q(2));
    CHECK(rational_closed_form(w.frobenius) == w.series);

    const std::size_t two[] = {2};
    const BlockChoice traceless[] = {mat({{"1", "0"}, {"0", "-1"}})};
    auto z = weakly_symmetric_block_form(two, traceless);
    CHECK(fdim(z.frobenius, 1).is_zero());
    CHECK(rational_closed_form(z.frobenius).numerator.empty());

    const BlockChoice bad[] = {mat({{"1", "0"}, {"0", "2"}})};
    CHECK_THROWS_AS(weakly_symmetric_block_form(two, bad), Error);
  }

  TEST_CASE("S3 table, classes and the permutation oracle") {
    const GroupTable g = s3();
    const auto classes = conjugacy_classes(g);
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 2});
    CHECK(g.mul(1, 2) == 4);  // rs = (123)
    CHECK(g.aliases.at("(123)") == 4);

    auto f = group_standard_form(g);
    const auto& alg = f.algebra();
    const auto centre = center(alg);
    for (const auto& c : classes) CHECK(in_span(centre, class_sum(alg, c)));

    const std::vector<std::pair<std::size_t, Perm>> reps = {{0, {0, 1, 2}}, {1, {1, 0, 2}}, {4, {1, 2, 0}}};
    for (const auto& [idx, perm] : reps) {
      const Element u = Element::basis(alg, idx);
      auto t = twist(f, u);
      CHECK(hilbert_series(t, 6) == as_vector(oracle_dims(perm, 6)));
      CHECK(lollipop(t) == group_twisted_lollipop(g, u));
    }
  }

  TEST_CASE("S3 closed forms are class functions") {
    const GroupTable g = s3();
    auto f = group_standard_form(g);
    const auto& alg = f.algebra();
    for (const auto& cls : conjugacy_classes(g)) {
      const auto first = rational_closed_form(twist(f, Element::basis(alg, cls.front())));
      for (auto idx : cls) CHECK(rational_closed_form(twist(f, Element::basis(alg, idx))) == first);
    }
    // u = r: 2x / ((1 - 6x)(1 + 6x)).
    CHECK(rational_closed_form(twist(f, Element::basis(alg, 1))) ==
          RationalSeries::make(FieldSpec::rational(), vec({"0", "2"}), vec({"1", "0", "-36"})));
    // u = rs: 3x / ((1 - 6x)(1 + 3x)).
    CHECK(rational_closed_form(twist(f, Element::basis(alg, 4))) ==
          RationalSeries::make(FieldSpec::rational(), vec({"0", "3"}), vec({"1", "-3", "-18"})));
  }

  TEST_CASE("bad group tables are rejected") {
    CHECK_THROWS_AS(make_group({"a", "b"}, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(make_group({"a", "b"}, {0, 1, 1, 2}), Error);
    CHECK(conjugacy_classes(cyclic(5)).size() == 5);
  }

  TEST_CASE("u_q(sl2) relations by rewriting") {
    const unsigned n = 3;
    auto uq = uqsl2(n);
    const FieldSpec field = uq->field();
    const Scalar one = Scalar::one(field);
    const Scalar q = Scalar::root_of_unity(field, 1);
    CHECK(uq->dim() == 27);
    const Element K = normal_order(uq, n, "K", one);
    const Element E = normal_order(uq, n, "E", one);
    const Element F = normal_order(uq, n, "F", one);
    CHECK(E * K == q * (K * E));
    CHECK(F * K == q.inv() * (K * F));
    CHECK(E * F - F * E == (q - q.inv()).inv() * (K - K.pow(2)));
    CHECK(K.pow(3) == Element::one(uq));
    CHECK(E.pow(3).is_zero());
    CHECK(normal_order(uq, n, "kK", one) == Element::one(uq));

    auto u2 = uqsl2(2);
    const Scalar one2 = Scalar::one(u2->field());
    CHECK(normal_order(u2, 2, "EF", one2) == normal_order(u2, 2, "FE", one2));
  }

  TEST_CASE("u_q(sl2) integral and K-twist") {
    auto integral = uqsl2_integral_form(3);
    CHECK(lollipop(integral).is_zero());
    CHECK(fdim(integral, 1).is_zero());
    auto sym = uqsl2_symmetric_form(3);
    CHECK(sym.gram().is_symmetric());
    const Vector dims = hilbert_series(sym, 4);
    const FieldSpec f = sym.field();
    CHECK(dims == Vector{Q(0, f), Q(27, f), Q(81, f), Q(729, f)});
    for (unsigned n : {2u, 4u}) CHECK(uqsl2_symmetric_form(n).gram().is_symmetric());
  }

  TEST_CASE("n = 3 Casimir relation") {
    auto sym = uqsl2_symmetric_form(3);
    const ExprContext ctx{sym.algebra(), {}};
    const Element c = parse_element("K + q K^2 - 3 q^2 F E", ctx);
    CHECK(c.pow(3) == parse_element("2", ctx) + parse_element("3 q", ctx) * c);
    CHECK(lollipop(sym) == parse_element("3 q^-1", ctx) * (c * c - parse_element("q^-2", ctx)));
  }

  TEST_CASE("n = 3 example u = K(1 - 3/2 F^2 E^2)") {
    auto integral = uqsl2_integral_form(3);
    const ExprContext ctx{integral.algebra(), {}};
    auto t = twist(integral, parse_element("K (1 - 3/2 F^2 E^2)", ctx));
    const FieldSpec f = t.field();
    CHECK(fdim(t, 0) == Q("-3/2", f));
    CHECK(fdim(t, 1) == Q(18, f));
    CHECK(fdim(t, 2).is_zero());
    const auto c = classify(t);
    CHECK(c.weakly_symmetric);
    CHECK_FALSE(c.symmetric);
  }

  TEST_CASE("Taft algebra forms have vanishing lollipop") {
    auto f = taft_form(3);
    CHECK(f.dim() == 9);
    CHECK(lollipop(f).is_zero());
    const ExprContext ctx{f.algebra(), {}};
    auto t = twist(f, parse_element("2 + K + F", ctx));
    CHECK(lollipop(t).is_zero());
  }

  TEST_CASE("degree zero part and circulant criterion") {
    auto uq = uqsl2(3);
    const ExprContext ctx{uq, {}};
    CHECK(degree_zero_part(parse_element("K + F", ctx), 3) == parse_element("K", ctx));
    const FieldSpec f = uq->field();
    const Scalar zero_det[] = {Q(1, f), Q(1, f), Q(1, f)};
    CHECK(circulant_determinant(zero_det).is_zero());
    CHECK_THROWS_AS(uqsl2_cartan_twist(3, zero_det), Error);
    const Scalar cart[] = {Q(1, f), Q(1, f), Q(0, f)};
    CHECK(circulant_determinant(cart) == Q(2, f));
    auto t = uqsl2_cartan_twist(3, cart);
    CHECK(fdim(t, 1) == Q("27/2", f));
    CHECK_FALSE(classify(t).symmetric);
  }
}
