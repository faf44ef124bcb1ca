#include <doctest.h>

#include "frob/builders.hpp"
#include "frob/expr.hpp"
#include "frob/kernels.hpp"
#include "support.hpp"

using namespace frob;
using frob::test::error_kind;
using frob::test::mat;
using frob::test::Q;
using frob::test::vec;

namespace {

// M2 table with E12 E21 = 2 E11 instead of E11.
std::vector<SparseVec> corrupted_m2_table() {
  const AlgebraPtr m2 = matrix_algebra(2);
  std::vector<SparseVec> table;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) table.push_back(m2->product(a, b));
  table[1 * 4 + 2] = {{0, Q(2)}};
  return table;
}

std::size_t center_dim(const AlgebraPtr& a) { return center(a).size(); }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("matrix units multiply") {
    const AlgebraPtr m2 = matrix_algebra(2);
    CHECK(m2->labels() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
    const Element e12 = Element::basis(m2, 1);
    const Element e21 = Element::basis(m2, 2);
    CHECK(e12 * e21 == Element::basis(m2, 0));
    CHECK(e21 * e12 == Element::basis(m2, 3));
    CHECK((e12 * e12).is_zero());
    CHECK(Element::one(m2) == Element::basis(m2, 0) + Element::basis(m2, 3));
  }

  TEST_CASE("validation rejects a corrupted table") {
    const AlgebraPtr m2 = matrix_algebra(2);
    CHECK(error_kind([] {
            (void)make_algebra(FieldSpec::rational(), {"a", "b", "c", "d"}, corrupted_m2_table(),
                               vec({"1", "0", "0", "1"}));
          }) == ErrorKind::NotAssociative);
    // wrong unit
    std::vector<SparseVec> table;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) table.push_back(m2->product(a, b));
    CHECK(error_kind([&] {
            (void)make_algebra(FieldSpec::rational(), {"a", "b", "c", "d"}, table, vec({"1", "0", "0", "0"}));
          }) == ErrorKind::BadUnit);
  }

  TEST_CASE("inverse") {
    const AlgebraPtr m2 = matrix_algebra(2);
    const Element u = matrix_element(m2, mat({{"1", "2"}, {"3", "4"}}));
    CHECK(element_inverse(u) == matrix_element(m2, mat({{"-2", "1"}, {"3/2", "-1/2"}})));
    CHECK_FALSE(try_inverse(Element::basis(m2, 1)));
    CHECK(error_kind([&] { (void)element_inverse(Element::zero(m2)); }) == ErrorKind::NotInvertible);
    CHECK(u.pow(0) == Element::one(m2));
    CHECK(u.pow(2) == u * u);
  }

  TEST_CASE("centers") {
    CHECK(center_dim(matrix_algebra(3)) == 1);
    CHECK(center_dim(group_algebra(s3())) == 3);
    CHECK(center_dim(group_algebra(cyclic(5))) == 5);
    const std::vector<std::size_t> dims{1, 1, 2};
    CHECK(center_dim(block_algebra(dims)) == 3);

    // u_{-1}: center spanned by 1, EF, KEF
    const AlgebraPtr uq = uqsl2(2);
    const auto z = center(uq);
    CHECK(z.size() == 3);
    const ExprContext ctx{uq, {}};
    for (const char* w : {"1", "EF", "KEF"}) CHECK(in_span(z, parse_element(w, ctx)));
    CHECK_FALSE(in_span(z, parse_element("K", ctx)));
  }

  TEST_CASE("commutator subspace") {
    CHECK(commutator_subspace(matrix_algebra(2)).size() == 3);
    CHECK(commutator_subspace(group_algebra(s3())).size() == 3);
    CHECK(commutator_subspace(group_algebra(cyclic(4))).empty());
  }

  TEST_CASE("direct sum") {
    const AlgebraPtr a = direct_sum(matrix_algebra(2), group_algebra(cyclic(2)));
    CHECK(a->dim() == 6);
    CHECK(center_dim(a) == 3);
  }

  TEST_CASE("minimal polynomial of rs + sr") {
    const GroupTable g = s3();
    const AlgebraPtr a = group_algebra(g);
    const ExprContext ctx{a, g.aliases};
    const Element x = parse_element("rs + sr", ctx);
    std::vector<Vector> powers{Element::one(a).coeffs(), x.coeffs(), (x * x).coeffs()};
    CHECK(minimal_polynomial(a->field(), powers) == vec({"-2", "-1", "1"}));
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("associativity: serial and parallel agree") {
    const Algebra bad(FieldSpec::rational(), {"a", "b", "c", "d"}, corrupted_m2_table(), vec({"1", "0", "0", "1"}));
    const auto s = kernels::associativity_violation_serial(bad);
    REQUIRE(s);
    CHECK(kernels::associativity_violation(bad) == s);
    for (unsigned n : {2u, 3u}) {
      const AlgebraPtr uq = uqsl2(n);
      CHECK_FALSE(kernels::associativity_violation_serial(*uq));
      CHECK_FALSE(kernels::associativity_violation(*uq));
      CHECK_FALSE(kernels::unit_violation(*uq));
    }
  }

  TEST_CASE("Gram: serial and parallel agree") {
    for (unsigned n : {2u, 3u}) {
      const FrobeniusStructure f = uqsl2_integral_form(n);
      const Matrix g = kernels::gram_matrix(*f.algebra(), f.eps());
      CHECK(g == kernels::gram_matrix_serial(*f.algebra(), f.eps()));
      CHECK(g == f.gram());
    }
    const FrobeniusStructure s = group_standard_form(s3());
    CHECK(kernels::gram_matrix(*s.algebra(), s.eps()) == kernels::gram_matrix_serial(*s.algebra(), s.eps()));
    CHECK(kernels::max_threads() >= 1);
  }
}
