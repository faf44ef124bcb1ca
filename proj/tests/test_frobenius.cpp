#include <doctest.h>

#include "frob/builders.hpp"
#include "frob/expr.hpp"
#include "frob/io.hpp"
#include "support.hpp"

using namespace frob;
using frob::test::error_kind;
using frob::test::mat;
using frob::test::Q;
using frob::test::vec;

TEST_SUITE("series") {
  TEST_CASE("normalisation") {
    const auto q = FieldSpec::rational();
    CHECK(RationalSeries::make(q, vec({"2", "-2"}), vec({"1", "-1"})) == RationalSeries::make(q, vec({"2"}), vec({"1"})));
    CHECK(RationalSeries::make(q, vec({"3"}), vec({"2", "-1"})) == RationalSeries::make(q, vec({"3/2"}), vec({"1", "-1/2"})));
    CHECK(RationalSeries::make(q, {}, vec({"1", "5"})).expand(3) == vec({"0", "0", "0"}));
    CHECK_THROWS_AS(RationalSeries::make(q, vec({"1"}), vec({"0", "1"})), Error);
  }

  TEST_CASE("expansion and sums") {
    const RationalSeries g = RationalSeries::geometric(Q(3), Q("3/2"));
    CHECK(g.expand(4) == vec({"3", "9/2", "27/4", "81/8"}));
    const RationalSeries a = RationalSeries::geometric(Q(1), Q(1));
    const RationalSeries b = RationalSeries::geometric(Q(1), Q(-1));
    const RationalSeries sum = a + b;
    CHECK(sum == RationalSeries::make(FieldSpec::rational(), vec({"2"}), vec({"1", "0", "-1"})));
    CHECK(sum.expand(5) == vec({"2", "0", "2", "0", "2"}));
    // 1/(1-x) + 1/(1-x) stays degree one
    CHECK(a + a == RationalSeries::geometric(Q(2), Q(1)));
  }
}

TEST_SUITE("frobenius") {
  TEST_CASE("a singular form is degenerate") {
    CHECK(error_kind([] { (void)make_frobenius(matrix_algebra(2), vec({"0", "0", "0", "0"})); }) ==
          ErrorKind::Degenerate);
    // eps = E11 coefficient only: (E22, -) vanishes
    CHECK(error_kind([] { (void)make_frobenius(matrix_algebra(2), vec({"1", "0", "0", "0"})); }) ==
          ErrorKind::Degenerate);
  }

  TEST_CASE("M2 with u = diag(1, 2)") {
    const FrobeniusStructure f = matrix_frobenius(mat({{"1", "0"}, {"0", "2"}})).frobenius;
    const AlgebraPtr& a = f.algebra();
    // B = Tr(u^-1) 1 = 3/2
    CHECK(lollipop(f) == Q("3/2") * Element::one(a));
    CHECK(hilbert_series(f, 3) == vec({"3", "9/2", "27/4"}));
    CHECK(rational_closed_form(f) == RationalSeries::geometric(Q(3), Q("3/2")));
    const Classification c = classify(f);
    CHECK_FALSE(c.symmetric);
    CHECK_FALSE(c.weakly_symmetric);
    CHECK_FALSE(c.special);
    REQUIRE(c.quasispecial);
    CHECK(*c.quasispecial == Q("3/2"));

    // Z(a) = u^-1 a u, so Z(E12) = 2 E12 and Tr Z = 9/2 = dim_1
    const Matrix z = nakayama(f);
    CHECK(z.apply(Element::basis(a, 1).coeffs()) == vec({"0", "2", "0", "0"}));
    CHECK(z.apply(Element::basis(a, 2).coeffs()) == vec({"0", "0", "1/2", "0"}));
    CHECK(z.trace() == Q("9/2"));
    CHECK(fdim(f, 1) == Q("9/2"));
  }

  TEST_CASE("trace form on M3 is symmetric and quasispecial") {
    const FrobeniusStructure f = matrix_frobenius(Matrix::identity(FieldSpec::rational(), 3)).frobenius;
    const Classification c = classify(f);
    CHECK(c.symmetric);
    CHECK(c.weakly_symmetric);
    CHECK(c.counit_scale == Q(3));
    CHECK(c.fdim == Q(9));
    CHECK(cocommutativity_check(f));
    CHECK(nakayama(f) == Matrix::identity(FieldSpec::rational(), 9));
  }

  TEST_CASE("coproduct is counital") {
    const FrobeniusStructure f = group_standard_form(s3());
    const AlgebraPtr& a = f.algebra();
    const Tensor d = coproduct(f, Element::basis(a, 4));
    // (eps x id) Delta(b) = b
    Vector back = zero_vector(a->field(), a->dim());
    for (const auto& [key, value] : d.entries()) {
      const auto idx = d.decode(key);
      back[idx[1]] += f.eps()[idx[0]] * value;
    }
    CHECK(back == Element::basis(a, 4).coeffs());
  }

  TEST_CASE("twisting by one is the identity") {
    const FrobeniusStructure f = uqsl2_integral_form(2);
    const FrobeniusStructure t = twist(f, Element::one(f.algebra()));
    CHECK(t.eps() == f.eps());
    CHECK(t.gram() == f.gram());
    CHECK(error_kind([&] { (void)twist(f, Element::zero(f.algebra())); }) == ErrorKind::NotInvertible);
  }

  TEST_CASE("u_{-1} twisted by K + 5 KEF") {
    const Builtin b = resolve_builtin("uqsl2:2");
    const FrobeniusStructure f = apply_twist(b, "K + 5 KEF");
    const FieldSpec field = f.field();
    CHECK(rational_closed_form(f) == RationalSeries::make(field, {Q(5, field), Q(8, field)}, {Q(1, field)}));
    const Vector dims = hilbert_series(f, 4);
    CHECK(dims[0] == Q(5, field));
    CHECK(dims[1] == Q(8, field));
    CHECK(dims[2].is_zero());
    // 1 + 5EF is central and eps_K is symmetric
    const Classification c = classify(f);
    CHECK(c.symmetric);
    CHECK(c.weakly_symmetric);
    CHECK_FALSE(classify(apply_twist(b, "K + E")).symmetric);
  }

  TEST_CASE("u_q(sl2) at n = 3 twisted by K is symmetric") {
    const FrobeniusStructure f = uqsl2_symmetric_form(3);
    CHECK(classify(f).symmetric);
    CHECK(cocommutativity_check(f));
    CHECK(hilbert_series(f, 4) == vec({"0", "27", "81", "729"}, f.field()));
  }

  TEST_CASE("S3 twist with B = 1") {
    const GroupTable g = s3();
    const FrobeniusStructure base = group_standard_form(g);
    const ExprContext ctx{base.algebra(), g.aliases};
    const Element uinv = parse_element("1/6 e + 1/6 rs - 1/6 sr", ctx);
    const FrobeniusStructure f = twist(base, element_inverse(uinv));
    CHECK(lollipop(f) == Element::one(f.algebra()));
    const Classification c = classify(f);
    CHECK(c.special);
    CHECK(c.fdim == Q(3));
    CHECK_FALSE(c.symmetric);
    CHECK(rational_closed_form(f) == RationalSeries::geometric(Q(3), Q(1)));
  }

  TEST_CASE("standard group form is symmetric and special up to the order") {
    const FrobeniusStructure f = group_standard_form(cyclic(4));
    const Classification c = classify(f);
    CHECK(c.symmetric);
    REQUIRE(c.quasispecial);
    CHECK(*c.quasispecial == Q(4));
    CHECK(uloll(f) == vec({"4", "0", "0", "0"}));
  }
}
