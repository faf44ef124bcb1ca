#include <doctest.h>

#include "frob/tensor.hpp"
#include "support.hpp"

using namespace frob;
using frob::test::error_kind;
using frob::test::mat;
using frob::test::Q;
using frob::test::vec;

TEST_SUITE("scalar") {
  TEST_CASE("rational arithmetic") {
    CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
    CHECK(Q("-4/6") == Q("-2/3"));
    CHECK(Q("3/7").inv() == Q("7/3"));
    CHECK(Q("2").pow(-3) == Q("1/8"));
    CHECK(error_kind([] { (void)Q("0").inv(); }) == ErrorKind::DivisionByZero);
    CHECK(format_scalar(Q("-6/4")) == "-3/2");
  }

  TEST_CASE("cyclotomic reduction") {
    const auto f3 = FieldSpec::cyclotomic(3);
    const Scalar z = Scalar::root_of_unity(f3, 1);
    // Phi_3 = 1 + x + x^2
    CHECK(z * z == Q(-1, f3) - z);
    CHECK(z.pow(3) == Q(1, f3));
    CHECK((Q(2, f3) + z).inv() == (Q(1, f3) - z) / Q(3, f3));
    CHECK(Scalar::root_of_unity(f3, -1) == z * z);

    const auto f4 = FieldSpec::cyclotomic(4);
    CHECK(Scalar::root_of_unity(f4, 2) == Q(-1, f4));
    CHECK(Scalar::root_of_unity(f4, 5) == Scalar::root_of_unity(f4, 1));
    CHECK(FieldSpec::cyclotomic(12).degree() == 4);
    CHECK(FieldSpec::cyclotomic(5).degree() == 4);

    // 1 + z + ... + z^(n-1) = 0
    for (int n : {3, 5, 7, 8, 12}) {
      const auto f = FieldSpec::cyclotomic(n);
      Scalar s = Q(0, f);
      for (int k = 0; k < n; ++k) s += Scalar::root_of_unity(f, k);
      CHECK(s.is_zero());
    }
  }

  TEST_CASE("parse and format round trip") {
    const auto f5 = FieldSpec::cyclotomic(5);
    for (const char* text : {"[1, -2/3, 0, 5]", "[0, 1]", "7/2", "[-1]"}) {
      const Scalar s = Q(text, f5);
      CHECK(Q(format_scalar(s), f5) == s);
    }
    CHECK(Q("[0, 1]", f5) == Scalar::root_of_unity(f5, 1));
    CHECK(Q("[0, 0, 0, 0]", f5).is_zero());
    CHECK_THROWS_AS(Q("1/0"), Error);
    CHECK_THROWS_AS(Q("abc"), ParseError);
    CHECK_THROWS_AS(Q("[1, 2"), ParseError);
    CHECK(error_kind([&] { (void)(Q(1) + Q(1, f5)); }) == ErrorKind::FieldMismatch);
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("inverse multiplies back") {
    const Matrix m = mat({{"2", "1", "0"}, {"1", "1", "1/2"}, {"0", "3", "1"}});
    const Matrix inv = invert(m);
    CHECK(m * inv == Matrix::identity(m.field(), 3));
    CHECK(inv * m == Matrix::identity(m.field(), 3));
    CHECK(invert(mat({{"2", "1"}, {"1", "1"}})) == mat({{"1", "-1"}, {"-1", "2"}}));
    CHECK(error_kind([] { (void)invert(mat({{"1", "2"}, {"2", "4"}})); }) == ErrorKind::Singular);
  }

  TEST_CASE("determinant, rank, solve") {
    CHECK(determinant(mat({{"1", "2"}, {"3", "4"}})) == Q(-2));
    CHECK(rank(mat({{"1", "2", "3"}, {"2", "4", "6"}})) == 1);
    const Matrix m = mat({{"1", "1"}, {"1", "-1"}});
    const auto x = solve(m, vec({"3", "1"}));
    REQUIRE(x);
    CHECK(*x == vec({"2", "1"}));
    CHECK_FALSE(solve(mat({{"1", "1"}, {"2", "2"}}), vec({"1", "3"})));
  }

  TEST_CASE("nullspace") {
    const Matrix m = mat({{"1", "2", "3"}, {"2", "4", "6"}});
    const auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(is_zero_vector(m.apply(v)));
    CHECK(nullspace(Matrix::identity(FieldSpec::rational(), 3)).empty());
  }

  TEST_CASE("span and minimal polynomial of a sequence") {
    const std::vector<Vector> vs{vec({"1", "0", "1"}), vec({"0", "1", "1"}), vec({"1", "1", "2"})};
    CHECK(span_basis(FieldSpec::rational(), 3, vs).size() == 2);
    CHECK(in_span(FieldSpec::rational(), std::span(vs).first(2), vec({"2", "-1", "1"})));
    CHECK_FALSE(in_span(FieldSpec::rational(), std::span(vs).first(2), vec({"0", "0", "1"})));

    // powers of A = [[0,1],[2,1]] applied to e1: A^2 = A + 2
    const Matrix a = mat({{"0", "1"}, {"2", "1"}});
    std::vector<Vector> seq{vec({"1", "0"})};
    for (int i = 0; i < 3; ++i) seq.push_back(a.apply(seq.back()));
    CHECK(minimal_polynomial(FieldSpec::rational(), seq) == vec({"-2", "-1", "1"}));
    CHECK(error_kind([&] { (void)minimal_polynomial(FieldSpec::rational(), std::span(seq).first(2)); }) ==
          ErrorKind::NotFound);
  }

  TEST_CASE("cyclotomic entries") {
    const auto f3 = FieldSpec::cyclotomic(3);
    const Scalar z = Scalar::root_of_unity(f3, 1);
    const Matrix m(2, 2, {Q(1, f3), z, z, Q(1, f3)});
    CHECK(m * invert(m) == Matrix::identity(f3, 2));
    CHECK(determinant(m) == Q(1, f3) - z * z);
    // z^3 = 1 makes this one singular
    CHECK(error_kind([&] { (void)invert(Matrix(2, 2, {Q(1, f3), z, z * z, Q(1, f3)})); }) == ErrorKind::Singular);
  }
}

TEST_SUITE("tensor") {
  TEST_CASE("packing and sparsity") {
    Tensor t(FieldSpec::rational(), 3, 3);
    const std::vector<std::size_t> idx{2, 0, 1};
    CHECK(t.encode(idx) == 2 * 9 + 0 * 3 + 1);
    CHECK(t.decode(t.encode(idx)) == idx);
    t.add(idx, Q("1/2"));
    t.add(idx, Q("-1/2"));
    CHECK(t.nnz() == 0);
    t.add(idx, Q(4));
    CHECK(t.at(idx) == Q(4));
    CHECK(max_legs_for_dim(2) == 63);
    CHECK(max_legs_for_dim(16) == 15);
  }

  TEST_CASE("swap") {
    Tensor t(FieldSpec::rational(), 2, 2);
    t.add(std::vector<std::size_t>{0, 1}, Q(3));
    Tensor s(FieldSpec::rational(), 2, 2);
    s.add(std::vector<std::size_t>{1, 0}, Q(3));
    CHECK(t.swapped() == s);
    CHECK(s.swapped().swapped() == s);
  }

  TEST_CASE("apply_generator") {
    const auto q = FieldSpec::rational();
    // 1 -> 1 map with matrix [[1,2],[3,4]] (row = input)
    GeneratorMap g{1, 1, 2, q, {}};
    g.rows = {{{0, Q(1)}, {1, Q(2)}}, {{0, Q(3)}, {1, Q(4)}}};
    Tensor t(q, 2, 2);
    t.add(std::vector<std::size_t>{0, 1}, Q(5));
    t.add(std::vector<std::size_t>{1, 0}, Q(7));
    CHECK(apply_generator(t, 0, GeneratorMap::identity(q, 2)) == t);
    CHECK(apply_generator(t, 1, GeneratorMap::identity(q, 2)) == t);

    // on leg 1: [0,1]*5 -> 5*(3 e0 + 4 e1); [1,0]*7 -> 7*(e0 + 2 e1)
    Tensor want(q, 2, 2);
    want.add(std::vector<std::size_t>{0, 0}, Q(15));
    want.add(std::vector<std::size_t>{0, 1}, Q(20));
    want.add(std::vector<std::size_t>{1, 0}, Q(7));
    want.add(std::vector<std::size_t>{1, 1}, Q(14));
    CHECK(apply_generator(t, 1, g) == want);

    // 2 -> 0 pairing delta_ij contracts legs 0 and 1
    GeneratorMap cap{2, 0, 2, q, {}};
    cap.rows = {{{0, Q(1)}}, {}, {}, {{0, Q(1)}}};
    Tensor v(q, 2, 3);
    v.add(std::vector<std::size_t>{1, 1, 0}, Q(2));
    v.add(std::vector<std::size_t>{0, 1, 1}, Q(9));
    v.add(std::vector<std::size_t>{0, 0, 1}, Q(-1));
    const Tensor r = apply_generator(v, 0, cap);
    CHECK(r.legs() == 1);
    CHECK(r.as_vector() == vec({"2", "-1"}));
  }
}
