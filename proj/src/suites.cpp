#include "frob/suites.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>

#include "frob/builders.hpp"
#include "frob/diagrams.hpp"
#include "frob/kernels.hpp"

namespace frob {

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.passed;
  return n;
}

namespace {

using Named = std::pair<std::string, FrobeniusStructure>;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }

  Scalar rational(FieldSpec f, long range = 4) {
    Rational q(integer(-range, range), integer(1, 3));
    q.canonicalize();
    return Scalar(f, q);
  }
  Scalar nonzero(FieldSpec f, long range = 4) {
    for (;;) {
      Scalar s = rational(f, range);
      if (!s.is_zero()) return s;
    }
  }

private:
  std::mt19937_64 gen_;
};

// Checks sharing an id are tallied; the first failing sample is kept.
class Recorder {
public:
  void check(const std::string& id, bool ok, const std::string& detail = {}) {
    auto [it, fresh] = index_.try_emplace(id, tallies_.size());
    if (fresh) tallies_.push_back(Tally{id, 0, 0, {}});
    Tally& t = tallies_[it->second];
    ++t.total;
    if (t.total == 1 && ok) t.first = detail;
    if (!ok && t.failed++ == 0) t.first = detail;
  }

  std::vector<CheckResult> results() const {
    std::vector<CheckResult> out;
    for (const auto& t : tallies_) {
      std::string detail;
      if (t.failed > 0) {
        detail = "failed " + std::to_string(t.failed) + " of " + std::to_string(t.total) + "; first: " + t.first;
      } else if (t.total == 1) {
        detail = t.first;
      } else {
        detail = std::to_string(t.total) + " samples";
      }
      out.push_back({t.id, t.failed == 0, detail});
    }
    return out;
  }

private:
  struct Tally {
    std::string id;
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first;
  };
  std::vector<Tally> tallies_;
  std::map<std::string, std::size_t> index_;
};

struct Context {
  Rng rng;
  Recorder rec;
  bool parallel = true;
  std::vector<Named>* sink = nullptr;

  void keep(std::string name, const FrobeniusStructure& f) {
    if (sink) sink->emplace_back(std::move(name), f);
  }

  template <class Fn>
  void guarded(const std::string& id, const std::string& where, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      rec.check(id, false, where + ": " + e.what());
    }
  }
};

const FieldSpec QQ = FieldSpec::rational();

Scalar num(FieldSpec f, long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return Scalar(f, r);
}

// ---- matrices --------------------------------------------------------------

Matrix random_matrix(Rng& rng, std::size_t d) {
  Matrix m(QQ, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.rational(QQ);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t d) {
  for (;;) {
    Matrix m = random_matrix(rng, d);
    if (!determinant(m).is_zero()) return m;
  }
}

Matrix diagonal(const Vector& entries) {
  Matrix m(QQ, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i == j ? m(i, j) != m(0, 0) : !m(i, j).is_zero()) return false;
  return true;
}

// Invertible u with Tr(u^-1) = 0, built from a traceless invertible inverse.
Matrix traceless_inverse(Rng& rng, std::size_t d) {
  for (;;) {
    Matrix v = random_matrix(rng, d);
    Scalar t = Scalar::zero(QQ);
    for (std::size_t i = 0; i + 1 < d; ++i) t += v(i, i);
    v(d - 1, d - 1) = -t;
    if (!determinant(v).is_zero()) return invert(v);
  }
}

std::string str(std::size_t v) { return std::to_string(v); }

void matrix_suite(Context& c) {
  for (std::size_t d : {2, 3}) {
    std::vector<std::pair<std::string, Matrix>> samples;
    for (int i = 0; i < 20; ++i) samples.emplace_back("random " + str(i), random_invertible(c.rng, d));
    samples.emplace_back("diagonal traceless inverse",
                         d == 2 ? diagonal({num(QQ, 1), num(QQ, -1)}) : diagonal({num(QQ, 1), num(QQ, 1), num(QQ, -1, 2)}));
    samples.emplace_back("traceless inverse", traceless_inverse(c.rng, d));
    samples.emplace_back("scalar", diagonal(Vector(d, num(QQ, 5, 2))));

    for (const auto& [tag, u] : samples) {
      const std::string where = "d=" + str(d) + " " + tag;
      c.guarded("matrix/sample", where, [&] {
        const FrobeniusStructure f = matrix_frobenius(u).frobenius;
        const Matrix ui = invert(u);
        const Scalar tu = u.trace();
        const Scalar ti = ui.trace();
        const Classification cls = classify(f);
        c.rec.check("matrix/lollipop = Tr(u^-1) 1", lollipop(f) == Element::scalar(f.algebra(), ti), where);
        c.rec.check("matrix/lambda' = Tr(u)", cls.counit_scale == tu, where);
        c.rec.check("matrix/dim_1 = Tr(u) Tr(u^-1)", cls.fdim == tu * ti, where);
        c.rec.check("matrix/closed form", rational_closed_form(f) == RationalSeries::geometric(tu, ti), where);
        c.rec.check("matrix/symmetric iff u scalar", cls.symmetric == is_scalar_matrix(u), where);
        c.rec.check("matrix/quasispecial iff Tr(u^-1) != 0",
                    ti.is_zero() ? !cls.quasispecial : cls.quasispecial && *cls.quasispecial == ti, where);
        if (ti.is_zero())
          c.rec.check("matrix/Tr(u^-1) = 0 gives asymmetric weakly symmetric", cls.weakly_symmetric && !cls.symmetric,
                      where);
        c.keep("matrix " + where, f);
      });
    }
  }
}

// ---- semisimple --------------------------------------------------------------

void semisimple_suite(Context& c) {
  const std::vector<std::size_t> sss{1, 1, 2};
  c.guarded("semisimple/special form", "(1,1,2)", [&] {
    const FrobeniusStructure f = semisimple_special_form(sss);
    const Classification cls = classify(f);
    c.rec.check("semisimple/(1,1,2) special and symmetric", cls.special && cls.symmetric);
    c.rec.check("semisimple/(1,1,2) dim_1 = 6", cls.fdim == num(QQ, 6), "dim_1 = " + format_scalar(cls.fdim));
    c.keep("semisimple (1,1,2) special", f);
  });

  const std::vector<std::vector<std::size_t>> shapes{{1, 1, 2}, {2, 3}, {1, 2}};
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto& dims = shapes[s];
    for (int i = 0; i < 6; ++i) {
      std::string where = "dims #" + str(s) + " sample " + str(i);
      c.guarded("semisimple/block twist", where, [&] {
        std::vector<Matrix> blocks;
        // Sample 0 is quasispecial by construction: u_i = lambda^-1 I.
        const Scalar lambda = c.rng.nonzero(QQ);
        for (std::size_t d : dims)
          blocks.push_back(i == 0 ? diagonal(Vector(d, lambda.inv())) : random_invertible(c.rng, d));
        const FrobeniusStructure f = block_twist(dims, blocks).first;

        Scalar fd = Scalar::zero(QQ);
        Scalar counit = Scalar::zero(QQ);
        RationalSeries series = RationalSeries::make(QQ, {}, {Scalar::one(QQ)});
        std::optional<Scalar> common;
        bool agree = true;
        for (std::size_t b = 0; b < dims.size(); ++b) {
          const Scalar d = num(QQ, static_cast<long>(dims[b]));
          const Scalar t = blocks[b].trace();
          const Scalar ti = invert(blocks[b]).trace();
          fd += t * ti;
          counit += d * t;
          series = series + RationalSeries::geometric(d * t, ti / d);
          if (common && *common != ti / d) agree = false;
          common = ti / d;
        }
        const Classification cls = classify(f);
        c.rec.check("semisimple/block twist dim_1 = sum Tr(u_i) Tr(u_i^-1)", cls.fdim == fd, where);
        c.rec.check("semisimple/block twist lambda' = sum d_i Tr(u_i)", cls.counit_scale == counit, where);
        c.rec.check("semisimple/block twist Hilbert series", rational_closed_form(f) == series, where);
        const bool quasi = agree && !common->is_zero();
        c.rec.check("semisimple/quasispecial iff Tr(u_i^-1)/d_i agree",
                    quasi ? cls.quasispecial && *cls.quasispecial == *common : !cls.quasispecial, where);
        c.keep("semisimple block twist " + where, f);
      });
    }
  }

  // Weakly symmetric strata on K + K + M2: I = {1, 2} and I = all.
  for (int i = 0; i < 6; ++i) {
    const bool all = i % 2 == 1;
    const std::string where = std::string(all ? "I = all" : "I = {1,2}") + " sample " + str(i);
    c.guarded("semisimple/weak strata", where, [&] {
      std::vector<BlockChoice> choices;
      std::vector<Scalar> mu;
      for (std::size_t b = 0; b < 3; ++b) {
        if (b < 2 || all) {
          mu.push_back(i < 2 ? Scalar::one(QQ) : c.rng.nonzero(QQ));
          choices.emplace_back(mu.back());
        } else {
          choices.emplace_back(traceless_inverse(c.rng, 2));
        }
      }
      const WeakBlockForm w = weakly_symmetric_block_form(sss, choices);
      const Classification cls = classify(w.frobenius);
      const std::array<long, 3> d{1, 1, 2};
      Scalar fd = Scalar::zero(QQ);
      RationalSeries series = RationalSeries::make(QQ, {}, {Scalar::one(QQ)});
      for (std::size_t b = 0; b < mu.size(); ++b) {
        fd += num(QQ, d[b] * d[b]);
        series = series + RationalSeries::geometric(num(QQ, d[b] * d[b]) / mu[b], mu[b]);
      }
      c.rec.check("semisimple/strata weakly symmetric", cls.weakly_symmetric, where);
      c.rec.check("semisimple/strata dim_1 = sum_I d_i^2", cls.fdim == fd, where + ": " + format_scalar(cls.fdim));
      c.rec.check("semisimple/strata Hilbert series", rational_closed_form(w.frobenius) == series, where);
      c.rec.check("semisimple/strata symmetric iff I = all", cls.symmetric == all, where);
      if (all && i < 2)
        c.rec.check("semisimple/I = all, mu = 1 is the special form",
                    w.frobenius.eps() == semisimple_special_form(sss).eps() && cls.special, where);
      c.keep("semisimple strata " + where, w.frobenius);
    });
  }

  c.guarded("semisimple/empty stratum", "M2, u = diag(1,-1)", [&] {
    const std::vector<std::size_t> dims{2};
    const std::vector<BlockChoice> choices{diagonal({num(QQ, 1), num(QQ, -1)})};
    const WeakBlockForm w = weakly_symmetric_block_form(dims, choices);
    c.rec.check("semisimple/I empty: dim_1 = 0 and series 0",
                fdim(w.frobenius, 1).is_zero() && rational_closed_form(w.frobenius).numerator.empty());
  });
}

// ---- S3 ------------------------------------------------------------------------

struct S3Basis {
  AlgebraPtr alg;
  Element e, r, s, t, rs, sr;
};

S3Basis s3_basis(const FrobeniusStructure& f) {
  const auto& a = f.algebra();
  auto b = [&](const char* label) { return Element::basis(a, *a->index_of(label)); };
  return {a, b("e"), b("r"), b("s"), b("t"), b("rs"), b("sr")};
}

// u^-1 = e/6 + a(rs - sr) + b(r - t) + c(s - t); returns (u^-1, displayed u, predicted dim_1).
struct SpecialS3 {
  Element u_inverse;
  Element u_displayed;
  Scalar circle;
};

SpecialS3 special_s3(const S3Basis& x, const Scalar& a, const Scalar& b, const Scalar& c) {
  const Element rest = a * (x.rs - x.sr) + b * (x.r - x.t) + c * (x.s - x.t);
  const Element uinv = num(QQ, 1, 6) * x.e + rest;
  const Scalar d = num(QQ, 1) + num(QQ, 108) * (a * a - (b * b + b * c + c * c));
  const Scalar circle = num(QQ, 2) * (num(QQ, 2) + d) / d;
  const Element u = circle * x.e + ((num(QQ, 6) - circle) / num(QQ, 2)) * (x.rs + x.sr) +
                    (num(QQ, 9) * (num(QQ, 2) - circle)) * rest;
  return {uinv, u, circle};
}

void s3_suite(Context& c) {
  const GroupTable g = s3();
  const FrobeniusStructure base = group_standard_form(g);
  const S3Basis x = s3_basis(base);

  // (a) special twists.
  for (int i = 0; i < 10; ++i) {
    const std::string where = "(a) sample " + str(i);
    c.guarded("s3/(a)", where, [&] {
      Scalar a = c.rng.rational(QQ), b = c.rng.rational(QQ), cc = c.rng.rational(QQ);
      while ((num(QQ, 1) + num(QQ, 108) * (a * a - (b * b + b * cc + cc * cc))).is_zero()) a = c.rng.rational(QQ);
      const SpecialS3 sp = special_s3(x, a, b, cc);
      c.rec.check("s3/(a) displayed u inverts u^-1", sp.u_displayed * sp.u_inverse == Element::one(x.alg) &&
                                                         element_inverse(sp.u_inverse) == sp.u_displayed,
                  where);
      const FrobeniusStructure f = twist(base, sp.u_displayed);
      const Classification cls = classify(f);
      c.rec.check("s3/(a) special", cls.special, where);
      c.rec.check("s3/(a) dim_1 = 2(2+d)/d", cls.fdim == sp.circle, where + ": " + format_scalar(cls.fdim));
      c.keep("s3 " + where, f);
    });
  }

  // (b) central twists.
  for (int i = 0; i < 10; ++i) {
    const std::string where = "(b) sample " + str(i);
    c.guarded("s3/(b)", where, [&] {
      for (;;) {
        const Scalar al = c.rng.rational(QQ), be = c.rng.rational(QQ), ga = c.rng.rational(QQ);
        const Scalar det = (al - ga) * (al - num(QQ, 3) * be + num(QQ, 2) * ga) * (al + num(QQ, 3) * be + num(QQ, 2) * ga);
        if (det.is_zero()) continue;
        const Element u = al * x.e + be * (x.r + x.s + x.t) + ga * (x.rs + x.sr);
        const FrobeniusStructure f = twist(base, u);
        const Classification cls = classify(f);
        c.rec.check("s3/(b) central twists symmetric", cls.symmetric, where);
        c.rec.check("s3/(b) dim_1 = 6", cls.fdim == num(QQ, 6), where);
        c.rec.check("s3/(b) special only for u = e", cls.special == (u == x.e), where);
        c.keep("s3 " + where, f);
        break;
      }
    });
  }

  // (c) weakly symmetric strata.
  const Vector regular{num(QQ, 6), num(QQ, 0), num(QQ, 0), num(QQ, 0), num(QQ, 0), num(QQ, 0)};
  const Vector sign_plus{num(QQ, 2), num(QQ, 0), num(QQ, 0), num(QQ, 0), num(QQ, 2), num(QQ, 2)};
  for (int i = 0; i < 10; ++i) {
    const bool symmetric_stratum = i % 2 == 0;
    const std::string where = std::string(symmetric_stratum ? "(c)(i)" : "(c)(ii)") + " sample " + str(i);
    c.guarded("s3/(c)", where, [&] {
      for (;;) {
        const Scalar al = c.rng.rational(QQ), be = c.rng.rational(QQ);
        const Scalar ga = symmetric_stratum ? c.rng.rational(QQ) : al;
        Element u = al * x.e + be * (x.r + x.s + x.t) + ga * (x.rs + x.sr);
        if (!symmetric_stratum)
          u += c.rng.nonzero(QQ) * (x.rs - x.sr) + c.rng.rational(QQ) * (x.r - x.t) + c.rng.rational(QQ) * (x.s - x.t);
        if (!try_inverse(u)) continue;
        const FrobeniusStructure f = twist(base, u);
        const Classification cls = classify(f);
        const Vector ul = uloll(f);
        if (symmetric_stratum) {
          c.rec.check("s3/(c)(i) uloll = {6,0,0,0,0,0}", ul == regular, where);
        } else {
          c.rec.check("s3/(c)(ii) uloll = {2,0,0,0,2,2}", ul == sign_plus, where);
          c.rec.check("s3/(c)(ii) weakly symmetric, not symmetric", cls.weakly_symmetric && !cls.symmetric, where);
        }
        c.keep("s3 " + where, f);
        break;
      }
    });
  }

  // (d) class function on group elements, frozen from the permutation oracle.
  c.guarded("s3/(d)", "group elements", [&] {
    const std::vector<std::pair<const char*, RationalSeries>> frozen{
        {"e", RationalSeries::make(QQ, {num(QQ, 1)}, {num(QQ, 1), num(QQ, -6)})},
        {"r", RationalSeries::make(QQ, {num(QQ, 0), num(QQ, 2)}, {num(QQ, 1), num(QQ, 0), num(QQ, -36)})},
        {"rs", RationalSeries::make(QQ, {num(QQ, 0), num(QQ, 3)}, {num(QQ, 1), num(QQ, -3), num(QQ, -18)})},
    };
    for (const auto& [label, series] : frozen) {
      const FrobeniusStructure f = twist(base, Element::basis(x.alg, *x.alg->index_of(label)));
      const RationalSeries got = rational_closed_form(f);
      c.rec.check(std::string("s3/(d) u = ") + label + " closed form", got == series, got.format());
    }
    for (const auto& cls : conjugacy_classes(g)) {
      const RationalSeries first = rational_closed_form(twist(base, Element::basis(x.alg, cls.front())));
      for (auto idx : cls) {
        const FrobeniusStructure f = twist(base, Element::basis(x.alg, idx));
        c.rec.check("s3/(d) dim_x constant on conjugacy classes", rational_closed_form(f) == first, g.labels[idx]);
        c.keep("s3 (d) u = " + g.labels[idx], f);
      }
    }
  });

  // (d) general parametrization, as power series.
  for (int i = 0; i < 10; ++i) {
    const std::string where = "(d) general sample " + str(i);
    c.guarded("s3/(d) general", where, [&] {
      for (;;) {
        const Scalar al = c.rng.rational(QQ), be = c.rng.rational(QQ), ga = c.rng.rational(QQ);
        const Scalar a = c.rng.rational(QQ), b = c.rng.rational(QQ), cc = c.rng.rational(QQ);
        const Element u = al * x.e + be * (x.r + x.s + x.t) + ga * (x.rs + x.sr) + a * (x.rs - x.sr) +
                          b * (x.r - x.t) + cc * (x.s - x.t);
        const Scalar A = al + num(QQ, 3) * be + num(QQ, 2) * ga;
        const Scalar Bm = al - num(QQ, 3) * be + num(QQ, 2) * ga;
        const Scalar C = al - ga;
        const Scalar N = C * C + num(QQ, 3) * (a * a - (b * b + b * cc + cc * cc));
        if (!try_inverse(u) || A.is_zero() || Bm.is_zero() || C.is_zero() || N.is_zero()) continue;
        const Scalar circle = num(QQ, 2) + num(QQ, 4) * C * C / N;
        // A^2/(A - 6x) = A/(1 - (6/A)x); the last term likewise.
        const RationalSeries predicted =
            RationalSeries::geometric(A / num(QQ, 6), num(QQ, 6) / A) +
            RationalSeries::geometric(Bm / num(QQ, 6), num(QQ, 6) / Bm) +
            RationalSeries::geometric(num(QQ, 4) * C / num(QQ, 6), -(num(QQ, 3, 2) * (num(QQ, 2) - circle)) / C);
        const FrobeniusStructure f = twist(base, u);
        c.rec.check("s3/(d) general dim_1", fdim(f, 1) == circle, where);
        c.rec.check("s3/(d) general Hilbert series", rational_closed_form(f) == predicted, where);
        c.keep("s3 " + where, f);
        break;
      }
    });
  }
}

// ---- u_q(sl2) ------------------------------------------------------------------

const FrobeniusStructure& integral_form(unsigned n) {
  static const FrobeniusStructure f2 = uqsl2_integral_form(2);
  static const FrobeniusStructure f3 = uqsl2_integral_form(3);
  if (n == 2) return f2;
  if (n == 3) return f3;
  throw Error(ErrorKind::Usage, "no cached integral form for n = " + str(n));
}

Element mono(const AlgebraPtr& a, unsigned n, unsigned i, unsigned j, unsigned k) {
  return Element::basis(a, pbw_index(n, {i, j, k}));
}

Element cartan_part(const Element& x, unsigned n) {
  Vector v = zero_vector(x.field(), x.algebra()->dim());
  for (unsigned i = 0; i < n; ++i) v[pbw_index(n, {i, 0, 0})] = x[pbw_index(n, {i, 0, 0})];
  return Element(x.algebra(), std::move(v));
}

// Basis order (1, K, EF, KEF, E, KE, F, KF) as PBW indices at n = 2.
constexpr std::array<std::size_t, 8> kN2Order{0, 4, 3, 7, 1, 5, 2, 6};

struct N2Params {
  Scalar a, b, c, d, al, be, ga, de;
};

Element n2_element(const AlgebraPtr& alg, const std::array<Scalar, 8>& coeffs) {
  Vector v = zero_vector(alg->field(), 8);
  for (std::size_t i = 0; i < 8; ++i) v[kN2Order[i]] = coeffs[i];
  return Element(alg, std::move(v));
}

std::array<Scalar, 8> n2_display_order(const Vector& v) {
  std::array<Scalar, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = v[kN2Order[i]];
  return out;
}

FrobeniusStructure n2_generic_twist() {
  const FrobeniusStructure& f = integral_form(2);
  const FieldSpec k = f.field();
  const std::array<Scalar, 8> p{num(k, 1), num(k, 2),  num(k, 3), num(k, 4),
                                num(k, 1), num(k, -1), num(k, 2), num(k, 1, 2)};
  return twist(f, n2_element(f.algebra(), p));
}

void uqsl2_n2_suite(Context& c) {
  const FrobeniusStructure& base = integral_form(2);
  const AlgebraPtr& alg = base.algebra();
  const FieldSpec k = alg->field();
  const Scalar zero = Scalar::zero(k);

  c.guarded("uqsl2-n2/commutators", "", [&] {
    const auto comm = commutator_subspace(alg);
    bool ok = comm.size() == 5;
    for (std::size_t i : {3, 4, 5, 6, 7}) ok = ok && in_span(comm, Element::basis(alg, kN2Order[i]));
    c.rec.check("uqsl2-n2/[A,A] = <KEF, E, KE, F, KF>", ok, "dimension " + str(comm.size()));
  });

  for (int i = 0; i < 20; ++i) {
    const bool sym = i % 4 == 0;
    const std::string where = "sample " + str(i) + (sym ? " (a = alpha = ... = 0)" : "");
    c.guarded("uqsl2-n2/sample", where, [&] {
      N2Params p;
      for (;;) {
        p = {sym ? zero : c.rng.rational(k), c.rng.rational(k), c.rng.rational(k), c.rng.rational(k),
             sym ? zero : c.rng.rational(k), sym ? zero : c.rng.rational(k), sym ? zero : c.rng.rational(k),
             sym ? zero : c.rng.rational(k)};
        if (p.a * p.a != p.b * p.b) break;
      }
      const auto& [a, b, cc, d, al, be, ga, de] = p;
      const Element u = n2_element(alg, {a, b, cc, d, al, be, ga, de});
      const Scalar s = a * a - b * b;
      const Scalar two = num(k, 2);
      const Scalar ef = -((a * a + b * b) * cc - two * a * (b * d + al * ga - be * de)) / s;
      const Scalar kef = -((a * a + b * b) * d - two * b * (a * cc - al * ga + be * de)) / s;
      const Element displayed = s.inv() * n2_element(alg, {a, -b, ef, kef, -al, -be, -ga, -de});
      c.rec.check("uqsl2-n2/u^-1 matches the closed form", element_inverse(u) == displayed, where);

      const FrobeniusStructure f = twist(base, u);
      const std::array<Scalar, 8> eps_expected{d, cc, b, a, de, -ga, be, -al};
      c.rec.check("uqsl2-n2/eps_u = {d,c,b,a,delta,-gamma,beta,-alpha}", n2_display_order(f.eps()) == eps_expected,
                  where);

      const Scalar kappa = num(k, 8) * b / (b * b - a * a);
      const Element ef_elt = Element::basis(alg, kN2Order[2]);
      c.rec.check("uqsl2-n2/B = 8b/(b^2-a^2) EF", lollipop(f) == kappa * ef_elt, where);
      std::array<Scalar, 8> ul_expected;
      ul_expected.fill(zero);
      ul_expected[0] = kappa * b;
      ul_expected[1] = kappa * a;
      c.rec.check("uqsl2-n2/uloll = 8b/(b^2-a^2) {b,a,0,...}", n2_display_order(uloll(f)) == ul_expected, where);

      const Scalar circle = num(k, 8) * b * b / (b * b - a * a);
      const Vector dims = hilbert_series(f, 6);
      bool higher_zero = true;
      for (std::size_t j = 2; j < dims.size(); ++j) higher_zero = higher_zero && dims[j].is_zero();
      c.rec.check("uqsl2-n2/dim_1 = 8b^2/(b^2-a^2)", dims[1] == circle, where);
      c.rec.check("uqsl2-n2/dim_j = 0 for j >= 2", higher_zero, where);
      c.rec.check("uqsl2-n2/closed form d + 8b^2/(b^2-a^2) x",
                  rational_closed_form(f) == RationalSeries::make(k, {d, circle}, {Scalar::one(k)}), where);

      const Classification cls = classify(f);
      c.rec.check("uqsl2-n2/never special", !cls.special, where);
      c.rec.check("uqsl2-n2/always weakly symmetric", cls.weakly_symmetric, where);
      c.rec.check("uqsl2-n2/symmetric exactly when a = alpha = beta = gamma = delta = 0", cls.symmetric == sym, where);
      c.keep("uqsl2-n2 " + where, f);
    });
  }
}

Element random_degree_zero(Rng& rng, const AlgebraPtr& alg, unsigned n, double density) {
  const FieldSpec k = alg->field();
  Element u = Element::zero(alg);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (rng.chance(density)) u += rng.rational(k, 3) * mono(alg, n, i, j, j);
  return u;
}

void uqsl2_n3_suite(Context& c) {
  const unsigned n = 3;
  const FrobeniusStructure& base = integral_form(n);
  const AlgebraPtr& alg = base.algebra();
  const FieldSpec k = alg->field();
  const Scalar q = Scalar::root_of_unity(k, 1);
  const Element one = Element::one(alg);
  const Element K = mono(alg, n, 1, 0, 0);
  const Element K2 = mono(alg, n, 2, 0, 0);
  const Element FE = mono(alg, n, 0, 1, 1);
  const Element F2E2 = mono(alg, n, 0, 2, 2);

  c.guarded("uqsl2-n3/K twist", "", [&] {
    const FrobeniusStructure f = twist(base, K);
    Vector expected = zero_vector(k, alg->dim());
    expected[pbw_index(n, {0, 2, 2})] = Scalar::one(k);
    c.rec.check("uqsl2-n3/eps_K is supported on F^2E^2", f.eps() == expected);
    c.rec.check("uqsl2-n3/eps_K symmetric", classify(f).symmetric);
    const Element cq = K + q * K2 - (num(k, 3) * q * q) * FE;
    c.rec.check("uqsl2-n3/c^3 = 2 + 3q c", cq.pow(3) == num(k, 2) * one + (num(k, 3) * q) * cq);
    c.rec.check("uqsl2-n3/B = (3/q)(c^2 - q^-2)", lollipop(f) == (num(k, 3) / q) * (cq.pow(2) - q.pow(-2) * one));
    const Vector dims = hilbert_series(f, 4);
    c.rec.check("uqsl2-n3/dims (0, 27, 81, 729)", dims == Vector{num(k, 0), num(k, 27), num(k, 81), num(k, 729)});
    c.keep("uqsl2-n3 K twist", f);
  });

  for (int i = 0; i < 10; ++i) {
    const std::string where = "Cartan sample " + str(i);
    c.guarded("uqsl2-n3/Cartan", where, [&] {
      std::array<Scalar, 3> u;
      Scalar delta;
      do {
        for (auto& x : u) x = i == 0 ? Scalar::zero(k) : c.rng.rational(k);
        if (i == 0) u[1] = c.rng.nonzero(k);
        delta = u[0].pow(3) + u[1].pow(3) + u[2].pow(3) - num(k, 3) * u[0] * u[1] * u[2];
      } while (delta.is_zero());
      const FrobeniusStructure f = uqsl2_cartan_twist(n, u);
      c.rec.check("uqsl2-n3/Cartan eps_u (u1, u0, u2)",
                  f.eps()[pbw_index(n, {0, 2, 2})] == u[1] && f.eps()[pbw_index(n, {1, 2, 2})] == u[0] &&
                      f.eps()[pbw_index(n, {2, 2, 2})] == u[2],
                  where);
      const Scalar ratio = (u[1] * u[1] - u[0] * u[2]) / delta;
      const Vector dims = hilbert_series(f, 5);
      c.rec.check("uqsl2-n3/Cartan dim_0 = 0", dims[0].is_zero(), where);
      c.rec.check("uqsl2-n3/Cartan dim_1 = 27 u1 (u1^2 - u0 u2)/delta", dims[1] == num(k, 27) * u[1] * ratio, where);
      bool formula = true;
      for (unsigned j = 2; j < dims.size(); ++j) formula = formula && dims[j] == u[1] * (num(k, 9) * ratio).pow(j);
      c.rec.check("uqsl2-n3/Cartan dim_j = u1 (9 (u1^2 - u0 u2)/delta)^j, j >= 2", formula, where);
      const Classification cls = classify(f);
      c.rec.check("uqsl2-n3/Cartan symmetric iff u0 = u2 = 0", cls.symmetric == (u[0].is_zero() && u[2].is_zero()),
                  where);
      // u1^2 = u0 u2 kills B, and uloll = 0 is trivially a trace.
      const bool degenerate = lollipop(f).is_zero();
      c.rec.check("uqsl2-n3/Cartan B = 0 iff u1^2 = u0 u2", degenerate == (u[1] * u[1] - u[0] * u[2]).is_zero(), where);
      c.rec.check("uqsl2-n3/Cartan weakly symmetric only when symmetric or B = 0",
                  !cls.weakly_symmetric || cls.symmetric || degenerate, where);
      c.rec.check("uqsl2-n3/Cartan not special", !cls.special, where);
      c.keep("uqsl2-n3 " + where, f);
    });
  }

  c.guarded("uqsl2-n3/example", "u = K(1 - 3/2 F^2E^2)", [&] {
    const Element u = K * (one - num(k, 3, 2) * F2E2);
    const Element uinv = K2 + (-(num(k, 3, 2) * q * q) * one + (num(k, 1, 2) * (q - num(k, 1)).pow(2)) * K) * F2E2;
    c.rec.check("uqsl2-n3/example u^-1", element_inverse(u) == uinv);
    const FrobeniusStructure f = twist(base, u);
    const Element b_expected =
        (num(k, 6) * (one - (q + num(k, 1)) * K + q * K2)) * FE + num(k, 18) * F2E2;
    c.rec.check("uqsl2-n3/example B", lollipop(f) == b_expected);
    Vector ul = zero_vector(k, alg->dim());
    const Scalar two_q = num(k, 2) + q;
    ul[pbw_index(n, {0, 0, 0})] = num(k, 18);
    ul[pbw_index(n, {0, 1, 1})] = num(k, 6);
    ul[pbw_index(n, {1, 1, 1})] = -(num(k, 18) * q) / two_q.pow(2);
    ul[pbw_index(n, {2, 1, 1})] = num(k, 6) * (q - num(k, 1)) / two_q;
    c.rec.check("uqsl2-n3/example uloll values", uloll(f) == ul);
    const Vector dims = hilbert_series(f, 5);
    c.rec.check("uqsl2-n3/example dims (-3/2, 18, 0, 0, 0)",
                dims == Vector{num(k, -3, 2), num(k, 18), num(k, 0), num(k, 0), num(k, 0)});
    const Classification cls = classify(f);
    c.rec.check("uqsl2-n3/example asymmetric weakly symmetric", cls.weakly_symmetric && !cls.symmetric);
    c.keep("uqsl2-n3 example", f);
  });

  for (int i = 0; i < 10; ++i) {
    const std::string where = "grading sample " + str(i);
    c.guarded("uqsl2-n3/grading", where, [&] {
      for (;;) {
        Element v = random_degree_zero(c.rng, alg, n, 0.6);
        for (int extra = 0; extra < 6; ++extra) {
          const unsigned a = static_cast<unsigned>(c.rng.integer(0, 2));
          const unsigned j = static_cast<unsigned>(c.rng.integer(0, 2));
          const unsigned l = static_cast<unsigned>(c.rng.integer(0, 2));
          if (j != l) v += c.rng.nonzero(k, 3) * mono(alg, n, a, j, l);
        }
        const auto u = try_inverse(v);
        const auto u0 = try_inverse(degree_zero_part(v, n));
        if (!u || !u0 || degree_zero_part(v, n) == v) continue;
        const FrobeniusStructure f = twist(base, *u);
        c.rec.check("uqsl2-n3/grading: B depends only on deg-0 part of u^-1",
                    lollipop(f) == lollipop(twist(base, *u0)), where);
        c.keep("uqsl2-n3 " + where, f);
        break;
      }
    });
  }

  for (int i = 0; i < 10; ++i) {
    const std::string where = "inverse lemma sample " + str(i);
    c.guarded("uqsl2-n3/inverse lemma", where, [&] {
      for (;;) {
        const Element u = random_degree_zero(c.rng, alg, n, 0.7);
        const auto ui = try_inverse(u);
        if (!ui) continue;
        const Element uk_inv = element_inverse(cartan_part(u, n));
        c.rec.check("uqsl2-n3/inverse lemma: Cartan part of u^-1 is u_K^-1",
                    cartan_part(*ui, n) == uk_inv && degree_zero_part(*ui, n) == *ui, where);
        break;
      }
    });
  }

  for (int i = 0; i < 5; ++i) {
    const std::string where = "weak family sample " + str(i);
    c.guarded("uqsl2-n3/weak family", where, [&] {
      for (;;) {
        const Scalar u0 = c.rng.rational(k), u6 = c.rng.rational(k), u7 = c.rng.rational(k), u8 = c.rng.rational(k);
        const Element uinv = u0 * (one + K) + (num(k, 1, 3) * (-q * u6 + (q + num(k, 1)) * u7 - u8)) * K2 +
                             (u6 * one + u7 * K + u8 * K2) * F2E2;
        const auto u = try_inverse(uinv);
        if (!u) continue;
        const FrobeniusStructure f = twist(base, *u);
        const Classification cls = classify(f);
        c.rec.check("uqsl2-n3/u^-1 family is asymmetric weakly symmetric", cls.weakly_symmetric && !cls.symmetric,
                    where);
        c.keep("uqsl2-n3 " + where, f);
        break;
      }
    });
  }

  for (unsigned m : {3u, 4u}) {
    c.guarded("uqsl2-n3/circulant", "n = " + str(m), [&] {
      const AlgebraPtr a = m == 3 ? alg : uqsl2(m);
      const FieldSpec km = a->field();
      std::size_t singular = 0;
      for (int i = 0; i < 12; ++i) {
        std::vector<Scalar> coeffs;
        Scalar sum = Scalar::zero(km);
        for (unsigned j = 0; j < m; ++j) {
          coeffs.push_back(c.rng.rational(km));
          sum += coeffs.back();
        }
        if (i % 3 == 0) coeffs.back() -= sum;  // eigenvalue 0 at the trivial character
        Element u = Element::zero(a);
        for (unsigned j = 0; j < m; ++j) u += coeffs[j] * mono(a, m, j, 0, 0);
        const bool det_nonzero = !circulant_determinant(coeffs).is_zero();
        singular += !det_nonzero;
        c.rec.check("uqsl2-n3/circulant: invertible iff det != 0 (n = 3, 4)", try_inverse(u).has_value() == det_nonzero,
                    "n = " + str(m) + " sample " + str(i));
      }
      c.rec.check("uqsl2-n3/circulant samples include singular ones (n = " + str(m) + ")", singular > 0,
                  str(singular) + " singular of 12");
    });
  }

  c.guarded("uqsl2-n3/search", "", [&] {
    std::size_t special = 0, zero_b = 0, tried = 0;
    while (tried < 200) {
      const Element u = random_degree_zero(c.rng, alg, n, 0.5);
      if (!try_inverse(u)) continue;
      ++tried;
      const FrobeniusStructure f = twist(base, u);
      const Element b = lollipop(f);
      special += b == one;
      zero_b += b.is_zero();
      c.keep("uqsl2-n3 search " + str(tried), f);
    }
    c.rec.check("uqsl2-n3/200-sample search finds no special form", special == 0,
                str(special) + " special, " + str(zero_b) + " with B = 0 (evidence only)");
  });
}

void taft_suite(Context& c) {
  const FrobeniusStructure base = taft_form(3);
  const AlgebraPtr& alg = base.algebra();
  const FieldSpec k = alg->field();
  for (int i = 0; i < 25; ++i) {
    const std::string where = "sample " + str(i);
    c.guarded("taft/sample", where, [&] {
      for (;;) {
        Vector v = zero_vector(k, alg->dim());
        for (auto& x : v)
          if (c.rng.chance(0.6)) x = c.rng.rational(k, 3);
        const Element u(alg, v);
        if (!try_inverse(u)) continue;
        const FrobeniusStructure f = twist(base, u);
        c.rec.check("taft/B = 0", lollipop(f).is_zero(), where);
        c.rec.check("taft/uloll = 0", is_zero_vector(uloll(f)), where);
        c.keep("taft " + where, f);
        break;
      }
    });
  }
}

void ktwist_suite(Context& c) {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    const std::string where = "n = " + str(n);
    c.guarded("ktwist/" + where, where, [&] {
      const AlgebraPtr alg = n <= 3 ? integral_form(n).algebra() : uqsl2(n);
      const std::size_t support = pbw_index(n, {1, n - 1, n - 1});
      const Element K = mono(alg, n, 1, 0, 0);
      Vector eps = zero_vector(alg->field(), alg->dim());
      for (std::size_t b = 0; b < alg->dim(); ++b) eps[b] = (K * Element::basis(alg, b))[support];
      const Matrix gram = kernels::gram_matrix(*alg, eps);
      c.rec.check("ktwist/Gram of eps_K symmetric (" + where + ")", gram.is_symmetric(),
                  "dimension " + str(alg->dim()));
      if (n <= 3) c.rec.check("ktwist/eps_K agrees with the twisted form (" + where + ")",
                              uqsl2_symmetric_form(n).eps() == eps);
    });
  }
}

std::vector<Named> lemma_structures() {
  std::vector<Named> out;
  out.emplace_back("M2 u = diag(1,2)", matrix_frobenius(diagonal({num(QQ, 1), num(QQ, 2)})).frobenius);
  out.emplace_back("M2 u = [[1,1],[0,1]]", matrix_frobenius(Matrix(2, 2, {num(QQ, 1), num(QQ, 1), num(QQ, 0), num(QQ, 1)})).frobenius);
  out.emplace_back("K + K + M2 special", semisimple_special_form(std::vector<std::size_t>{1, 1, 2}));
  const FrobeniusStructure s3base = group_standard_form(s3());
  out.emplace_back("KS3 delta_e", s3base);
  const S3Basis x = s3_basis(s3base);
  out.emplace_back("KS3 special twist", twist(s3base, special_s3(x, num(QQ, 1, 6), num(QQ, 1, 12), num(QQ, 0)).u_displayed));
  out.emplace_back("KS3 weakly symmetric twist", twist(s3base, num(QQ, 1) * x.e + num(QQ, 2) * (x.r + x.s + x.t) +
                                                                  num(QQ, 1) * (x.rs + x.sr) + num(QQ, 1) * (x.rs - x.sr)));
  out.emplace_back("u_-1(sl2) integral", integral_form(2));
  out.emplace_back("u_-1(sl2) generic twist", n2_generic_twist());
  const FrobeniusStructure& f3 = integral_form(3);
  const AlgebraPtr& a3 = f3.algebra();
  const Element K = mono(a3, 3, 1, 0, 0);
  out.emplace_back("u_q(sl2) n=3 K twist", twist(f3, K));
  out.emplace_back("u_q(sl2) n=3 example",
                   twist(f3, K * (Element::one(a3) - num(a3->field(), 3, 2) * mono(a3, 3, 0, 2, 2))));
  const std::array<Scalar, 3> cartan{num(a3->field(), 1), num(a3->field(), 1), num(a3->field(), 0)};
  out.emplace_back("u_q(sl2) n=3 Cartan (1,1,0)", uqsl2_cartan_twist(3, cartan));
  const FrobeniusStructure taft3 = taft_form(3);
  const AlgebraPtr& at = taft3.algebra();
  // Taft basis K^i F^j sits at i n + j: u = 2 + F + KF.
  out.emplace_back("Taft n=3 twist", twist(taft3, num(at->field(), 2) * Element::one(at) + Element::basis(at, 1) +
                                                      Element::basis(at, 4)));
  return out;
}

void lemma_suite_check(Context& c) {
  std::vector<Named> structures;
  c.guarded("lemma/build", "", [&] { structures = lemma_structures(); });
  for (const auto& [name, f] : structures) {
    c.guarded("lemma/" + name, name, [&] {
      const LemmaReport r = lemma_suite(generator_set(f));
      const LemmaCheck* bad = r.first_failure();
      c.rec.check("lemma/identities hold: " + name, r.passed(),
                  bad ? bad->tag + ": " + bad->witness : str(r.checks.size()) + " identities");
    });
  }
  for (std::size_t i : {std::size_t{0}, std::size_t{7}}) {
    if (i >= structures.size()) continue;
    const auto& [name, f] = structures[i];
    c.guarded("lemma/corrupted", name, [&] {
      Vector bad = f.eps();
      bad[1] += Scalar::one(f.field());
      const LemmaReport r = lemma_suite(generator_set(*f.algebra(), bad, f.metric()));
      const LemmaCheck* fail = r.first_failure();
      c.rec.check("lemma/corrupted eps fails with a witness: " + name, fail && !fail->witness.empty(),
                  fail ? fail->tag + ": " + fail->witness : "no failure detected");
    });
  }
}

void spider_suite(Context& c) {
  std::vector<Named> refs;
  c.guarded("spider/build", "", [&] {
    const FrobeniusStructure s3base = group_standard_form(s3());
    refs.emplace_back("M2 u = diag(1,2)", matrix_frobenius(diagonal({num(QQ, 1), num(QQ, 2)})).frobenius);
    refs.emplace_back("KS3 special twist",
                      twist(s3base, special_s3(s3_basis(s3base), num(QQ, 1, 6), num(QQ, 1, 12), num(QQ, 0)).u_displayed));
    refs.emplace_back("u_-1(sl2) generic twist", n2_generic_twist());
  });
  std::vector<GeneratorSet> gens;
  for (std::size_t r = 0; r < refs.size(); ++r) {
    const auto& [name, f] = refs[r];
    c.guarded("spider/" + name, name, [&] {
      gens.push_back(generator_set(f));
      const std::uint64_t seed = c.rng.integer(0, 1L << 40);
      const SpiderResult res = c.parallel ? spider_fuzz(gens.back(), seed, 200, 8, 4)
                                          : spider_fuzz_serial(gens.back(), seed, 200, 8, 4);
      std::string detail = str(res.passed) + "/" + str(res.count) + " diagrams";
      if (res.first_failure)
        detail += "; seed " + std::to_string(res.first_failure->seed) + " " +
                  format_diagram(res.first_failure->diagram) + ": " + res.first_failure->witness;
      c.rec.check("spider/fuzz: " + name, res.count == 200 && res.passed == res.count, detail);
    });
  }
  if (gens.size() != refs.size()) return;
  for (int i = 0; i < 50; ++i) {
    const std::size_t j1 = static_cast<std::size_t>(c.rng.integer(0, 4));
    const std::size_t j2 = static_cast<std::size_t>(c.rng.integer(0, 4));
    const std::size_t m = static_cast<std::size_t>(c.rng.integer(1, 2));
    const std::size_t n = static_cast<std::size_t>(c.rng.integer(1, 2));
    const GeneratorSet& g = gens[i % gens.size()];
    const std::string where = refs[i % refs.size()].first + " (m,n,j1,j2) = (" + str(m) + "," + str(n) + "," + str(j1) +
                              "," + str(j2) + ")";
    c.guarded("spider/bead additivity", where, [&] {
      const Diagram stacked = compose(standard_diagram({m, 1, j1}), standard_diagram({1, n, j2}));
      const auto diff = tensor_difference(evaluate(stacked, g, 4), evaluate(standard_diagram({m, n, j1 + j2}), g, 4));
      c.rec.check("spider/bead additivity", !diff, diff ? where + ": " + *diff : where);
    });
  }
}

void hilbert_suite(Context& c, const std::vector<Named>& structures) {
  std::size_t quasi = 0;
  for (const auto& [name, f] : structures) {
    c.guarded("hilbert/" + name, name, [&] {
      const RationalSeries closed = rational_closed_form(f);
      c.rec.check("hilbert/closed form matches dim_j for j <= 10", closed.expand(11) == hilbert_series(f, 11), name);
      const Classification cls = classify(f);
      if (cls.quasispecial) {
        ++quasi;
        c.rec.check("hilbert/quasispecial gives lambda'/(1 - lambda x)",
                    closed == RationalSeries::geometric(cls.counit_scale, *cls.quasispecial), name);
      }
    });
  }
  c.rec.check("hilbert/structures covered", !structures.empty(),
              str(structures.size()) + " structures, " + str(quasi) + " quasispecial");
}

using SuiteFn = std::function<void(Context&)>;

const std::vector<std::pair<std::string, SuiteFn>>& builders() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"matrix", matrix_suite},     {"semisimple", semisimple_suite}, {"s3", s3_suite},
      {"uqsl2-n2", uqsl2_n2_suite}, {"uqsl2-n3", uqsl2_n3_suite},     {"taft", taft_suite},
      {"ktwist", ktwist_suite},     {"lemma", lemma_suite_check},     {"spider", spider_suite},
  };
  return table;
}

constexpr std::size_t kStructureSuites = 6;

Context make_context(const SuiteOptions& options, std::size_t index, std::vector<Named>* sink) {
  return Context{Rng(options.seed + 0x9E3779B97F4A7C15ULL * (index + 1)), {}, options.parallel, sink};
}

SuiteResult run_one(std::size_t index, const SuiteOptions& options, std::vector<Named>* sink) {
  const auto& [name, fn] = builders()[index];
  Context c = make_context(options, index, sink);
  c.guarded(name + "/setup", name, [&] { fn(c); });
  return {name, c.rec.results()};
}

SuiteResult run_hilbert(const SuiteOptions& options, const std::vector<Named>& structures) {
  Context c = make_context(options, builders().size(), nullptr);
  hilbert_suite(c, structures);
  return {"hilbert", c.rec.results()};
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : builders()) out.push_back(name);
  out.push_back("hilbert");
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "hilbert") {
    std::vector<Named> structures;
    for (std::size_t i = 0; i < kStructureSuites; ++i) run_one(i, options, &structures);
    return run_hilbert(options, structures);
  }
  for (std::size_t i = 0; i < builders().size(); ++i)
    if (builders()[i].first == name) return run_one(i, options, nullptr);
  throw Error(ErrorKind::Usage, "unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const SuiteOptions& options) {
  std::vector<Named> structures;
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < builders().size(); ++i)
    out.push_back(run_one(i, options, i < kStructureSuites ? &structures : nullptr));
  out.push_back(run_hilbert(options, structures));
  return out;
}

}  // namespace frob
