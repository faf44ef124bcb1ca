#include <doctest.h>

#include <json.hpp>

#include "frob/builders.hpp"
#include "frob/io.hpp"
#include "support.hpp"

using namespace frob;
using frob::test::error_kind;
using frob::test::Q;
using frob::test::vec;

namespace {

const char* kDual = R"({
  "field": {"kind": "rational"},
  "dimension": 2,
  "basis_labels": ["1", "x"],
  "unit": ["1", "0"],
  "structure": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
  "form": ["0", "1"]
})";

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("labels, juxtaposition and powers") {
    const Builtin b = resolve_builtin("uqsl2:2");
    const ExprContext& ctx = b.context;
    const AlgebraPtr& a = ctx.algebra;
    const Element k = Element::basis(a, pbw_index(2, {1, 0, 0}));
    CHECK(parse_element("K", ctx) == k);
    CHECK(parse_element("K^2", ctx) == Element::one(a));
    CHECK(parse_element("K^-1", ctx) == k);
    CHECK(parse_element("2K + 3", ctx) == Q(2, a->field()) * k + Q(3, a->field()) * Element::one(a));
    CHECK(parse_element("K*E", ctx) == parse_element("KE", ctx));
    CHECK(parse_element("EF - FE", ctx) == parse_element("E F", ctx) - parse_element("F E", ctx));
    CHECK(parse_element("-(K - 1)", ctx) == Element::one(a) - k);
    // q = -1 at n = 2
    CHECK(parse_element("q", ctx) == -Element::one(a));
  }

  TEST_CASE("aliases and coefficient lists") {
    const GroupTable g = s3();
    const AlgebraPtr a = group_algebra(g);
    const ExprContext ctx{a, g.aliases};
    CHECK(parse_element("(12)", ctx) == parse_element("r", ctx));
    CHECK(parse_element("(12)(23)", ctx) == parse_element("rs", ctx));
    CHECK(parse_element("{1, 0, 0, 0, 0, 2}", ctx).coeffs() == vec({"1", "0", "0", "0", "0", "2"}));
    CHECK(parse_element("r^2", ctx) == Element::one(a));
    CHECK(parse_element("rs^-1", ctx) == parse_element("sr", ctx));
  }

  TEST_CASE("errors") {
    const ExprContext ctx{matrix_algebra(2), {}};
    CHECK_THROWS_AS(parse_element("E11 +", ctx), ParseError);
    CHECK_THROWS_AS(parse_element("(E11", ctx), ParseError);
    CHECK_THROWS_AS(parse_element("{1, 2}", ctx), Error);
    CHECK_THROWS_AS(parse_element("zzz", ctx), Error);
    CHECK(error_kind([&] { (void)parse_element("E12^-1", ctx); }) == ErrorKind::NotInvertible);
  }
}

TEST_SUITE("io") {
  TEST_CASE("load a file with a form") {
    const LoadedAlgebra l = load_algebra_json(kDual);
    CHECK(l.algebra->dim() == 2);
    REQUIRE(l.form);
    const FrobeniusStructure f = make_frobenius(l.algebra, *l.form);
    // dual numbers with eps(x) = 1: B = 2x, dims 2, 0, 0
    CHECK(hilbert_series(f, 3) == vec({"0", "2", "0"}));
    CHECK(classify(f).symmetric);
  }

  TEST_CASE("round trip") {
    const FrobeniusStructure f = uqsl2_integral_form(2);
    const std::string text = algebra_to_json(f.algebra(), f.eps());
    const LoadedAlgebra l = load_algebra_json(text);
    CHECK(l.algebra->labels() == f.algebra()->labels());
    CHECK(l.algebra->field() == f.field());
    REQUIRE(l.form);
    CHECK(*l.form == f.eps());
    for (std::size_t a = 0; a < f.dim(); ++a)
      for (std::size_t b = 0; b < f.dim(); ++b) CHECK(l.algebra->product(a, b) == f.algebra()->product(a, b));
    CHECK(algebra_to_json(l.algebra, l.form) == text);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(load_algebra_json("{"), ParseError);
    CHECK_THROWS_AS(load_algebra_json(R"({"field": {"kind": "rational"}})"), ParseError);
    CHECK_THROWS_AS(load_algebra_json(R"({"field": {"kind": "reals"}, "dimension": 1, "unit": ["1"],
                                          "structure": [[0, 0, 0, "1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(load_algebra_json(R"({"field": {"kind": "rational"}, "dimension": 1, "unit": ["1"],
                                          "structure": [[0, 0, "1"]]})"),
                    ParseError);
    CHECK(error_kind([] {
            (void)load_algebra_json(R"({"field": {"kind": "rational"}, "dimension": 1, "unit": ["2"],
                                        "structure": [[0, 0, 0, "1"]]})");
          }) == ErrorKind::BadUnit);
    CHECK(error_kind([] { (void)load_algebra_file("/nonexistent/a.json"); }) == ErrorKind::Usage);
  }

  TEST_CASE("builtins") {
    CHECK(resolve_builtin("matrix:3").base.dim() == 9);
    CHECK(resolve_builtin("blocks:1+1+2").base.dim() == 6);
    CHECK(resolve_builtin("group:cyclic:5").base.dim() == 5);
    CHECK(resolve_builtin("taft:3").base.dim() == 9);
    CHECK(resolve_builtin("uqsl2:3").order == 3);
    for (const char* bad : {"matrix:0", "matrix:x", "uqsl2:1", "uqsl2:13", "nope", "group:a5"})
      CHECK(error_kind([&] { (void)resolve_builtin(bad); }) == ErrorKind::Usage);
  }

  TEST_CASE("report") {
    const Builtin b = resolve_builtin("matrix:2");
    const Report r = make_report(b.base, "m2", 4);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["dimension"] == 2 * 2);
    CHECK(j["classification"]["symmetric"] == true);
    CHECK(j["dims"] == nlohmann::json::array({"2", "4", "8", "16"}));
    CHECK(j["lambda"] == "2");
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(report_text(r).find("nakayama:         identity") != std::string::npos);
  }
}
