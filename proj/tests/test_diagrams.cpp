#include <doctest.h>

#include "frob/builders.hpp"
#include "frob/diagrams.hpp"
#include "support.hpp"

using namespace frob;
using frob::test::mat;
using frob::test::Q;

namespace {

FrobeniusStructure m2_reference() { return matrix_frobenius(mat({{"1", "0"}, {"0", "2"}})).frobenius; }

// Independent face count: walk the DSL text and count edges per interface by hand.
std::size_t faces_by_hand(const Diagram& d) {
  std::size_t vertices = d.inputs() + d.outputs();
  std::size_t edges = 0;
  for (std::size_t s = 0; s <= d.slices().size(); ++s) edges += d.width(s);
  for (const auto& slice : d.slices()) vertices += slice.size();
  return edges + 1 - vertices;
}

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("parsing and interfaces") {
    const Diagram mul = parse_diagram("mul");
    CHECK(mul.inputs() == 2);
    CHECK(mul.outputs() == 1);
    const Diagram loll = parse_diagram(" cap ;  mul ");
    CHECK(loll.inputs() == 0);
    CHECK(loll.outputs() == 1);
    CHECK(format_diagram(loll) == "cap; mul");
    CHECK_THROWS_AS(parse_diagram("mul; comul; comul"), Error);
    try {
      parse_diagram("mul; comul; comul");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InterfaceMismatch);
    }
    CHECK_THROWS_AS(parse_diagram("mul, spoon"), ParseError);
    CHECK_THROWS_AS(parse_diagram(""), ParseError);
    CHECK_THROWS_AS(parse_diagram("mul;"), ParseError);
  }

  TEST_CASE("connectivity and faces") {
    CHECK(connectivity(parse_diagram("mul")) == 1);
    CHECK(connectivity(parse_diagram("id,id")) == 2);
    CHECK(connectivity(parse_diagram("cap; cup")) == 1);
    CHECK(bounded_faces(parse_diagram("mul")) == 0);
    CHECK(bounded_faces(parse_diagram("cap; cup")) == 1);
    CHECK(bounded_faces(parse_diagram("cap; comul,id; id,mul; cup")) == 2);
    CHECK_THROWS_AS(bounded_faces(parse_diagram("id,id")), Error);
    // Id insertion leaves the count alone.
    CHECK(bounded_faces(parse_diagram("cap; id,id; comul,id; id,id,id; id,mul; id,id; cup")) == 2);
  }

  TEST_CASE("canonical and standard forms") {
    CHECK(canonical_form(parse_diagram("mul")) == StandardForm{2, 1, 0});
    CHECK(canonical_form(parse_diagram("unit; comul; mul; counit")) == StandardForm{0, 0, 1});
    CHECK(canonical_form(parse_diagram("id")) == StandardForm{1, 1, 0});
    CHECK_THROWS_AS(canonical_form(Diagram{}), Error);
    CHECK(format_diagram(standard_diagram({2, 1, 0})) == "mul");
    CHECK(format_diagram(standard_diagram({0, 0, 2})) == "unit; comul; mul; comul; mul; counit");
    CHECK(format_diagram(standard_diagram({1, 1, 2})) == "comul; mul; comul; mul");
    CHECK(format_diagram(standard_diagram({3, 3, 0})) == "id,mul; mul; comul; id,comul");
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t j = 0; j < 3; ++j) CHECK(canonical_form(standard_diagram({m, n, j})) == StandardForm{m, n, j});
  }

  TEST_CASE("evaluation agrees with the algebraic quantities") {
    const FrobeniusStructure f = m2_reference();
    CHECK(evaluate(parse_diagram("cap; mul"), f).as_vector() == lollipop(f).coeffs());
    const auto identity = matrix_frobenius(Matrix::identity(FieldSpec::rational(), 2)).frobenius;
    CHECK(evaluate(parse_diagram("unit; comul; mul; counit"), identity).scalar_value() == Q(4));

    auto sym = uqsl2_symmetric_form(2);
    CHECK(evaluate(standard_diagram({0, 0, 2}), sym).scalar_value().is_zero());
    CHECK(evaluate(standard_diagram({0, 0, 1}), sym).scalar_value() == fdim(sym, 1));

    const auto gens = generator_set(f);
    CHECK_THROWS_AS(evaluate(parse_diagram("comul; comul,id; comul,id,id"), gens, 3), Error);
  }

  TEST_CASE("random diagrams are deterministic and connected") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Diagram d = random_connected_diagram(seed, 8, 4);
      CHECK(d == random_connected_diagram(seed, 8, 4));
      CHECK(connectivity(d) == 1);
      CHECK(d.max_width() <= 4);
      CHECK(d.inputs() <= 2);
      CHECK(d.operation_count() >= 1);
      CHECK(d.operation_count() <= 8);
      CHECK(bounded_faces(d) == faces_by_hand(d));
    }
  }

  TEST_CASE("lemma suite passes on genuine structures and fails on a corrupted form") {
    const FrobeniusStructure f = m2_reference();
    const LemmaReport r = lemma_suite(generator_set(f));
    CHECK(r.passed());
    CHECK(r.checks.size() == 16);

    Vector bad = f.eps();
    bad[1] += Q(1);
    const GeneratorSet corrupted = generator_set(*f.algebra(), bad, f.metric());
    const LemmaReport broken = lemma_suite(corrupted);
    REQUIRE_FALSE(broken.passed());
    CHECK_FALSE(broken.first_failure()->witness.empty());
    CHECK_THROWS_AS(require_lemmas(corrupted), Error);
  }

  TEST_CASE("spider fuzz on M2: serial and parallel agree") {
    const auto gens = generator_set(m2_reference());
    const SpiderResult serial = spider_fuzz_serial(gens, 11, 60, 8, 4);
    const SpiderResult parallel = spider_fuzz(gens, 11, 60, 8, 4);
    CHECK(serial.passed == 60);
    CHECK(parallel.passed == serial.passed);
  }

  TEST_CASE("bead additivity") {
    const auto gens = generator_set(m2_reference());
    for (std::size_t j1 = 0; j1 < 4; ++j1)
      for (std::size_t j2 = 0; j2 < 4; ++j2) {
        const Diagram stacked = compose(standard_diagram({1, 1, j1}), standard_diagram({1, 1, j2}));
        CHECK(evaluate(stacked, gens, 4) == evaluate(standard_diagram({1, 1, j1 + j2}), gens, 4));
      }
  }
}
