#include <map>
#include <unordered_map>

#include "frob/builders.hpp"

namespace frob {

namespace {

using Terms = std::map<std::size_t, Scalar>;

/// Single-relation rewriting for words over K, F, E in u_q(sl2) (or the Taft
/// algebra when with_e is false). Results are memoized per word.
class Rewriter {
public:
  Rewriter(unsigned n, bool with_e)
      : n_(n),
        with_e_(with_e),
        field_(FieldSpec::cyclotomic(static_cast<int>(n))),
        q_(Scalar::root_of_unity(field_, 1)),
        q_inv_(Scalar::root_of_unity(field_, static_cast<long>(n) - 1)) {
    // At n = 2, K = K^-1 and q = q^-1 make the bracket 0/0; the relation is [E, F] = 0.
    if (n > 2) bracket_ = (q_ - q_inv_).inv();
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return with_e_ ? std::size_t{n_} * n_ * n_ : std::size_t{n_} * n_; }

  std::size_t index(unsigned i, unsigned j, unsigned k) const {
    return with_e_ ? pbw_index(n_, {i, j, k}) : std::size_t{i} * n_ + j;
  }

  PBWMonomial monomial(std::size_t idx) const {
    return with_e_ ? pbw_monomial(n_, idx) : PBWMonomial{static_cast<unsigned>(idx / n_), static_cast<unsigned>(idx % n_), 0};
  }

  std::string word(std::size_t idx) const {
    const PBWMonomial m = monomial(idx);
    return std::string(m.i, 'K') + std::string(m.j, 'F') + std::string(m.k, 'E');
  }

  const Terms& reduce(const std::string& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Terms out = rewrite(w);
    return memo_.emplace(w, std::move(out)).first->second;
  }

private:
  void accumulate(Terms& out, const std::string& w, const Scalar& c) {
    for (const auto& [idx, v] : reduce(w)) {
      auto [it, inserted] = out.try_emplace(idx, c * v);
      if (!inserted) {
        it->second += c * v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }

  Terms rewrite(const std::string& w) {
    Terms out;
    const std::string k_power(n_, 'K');
    if (w.find(std::string(n_, 'E')) != std::string::npos || w.find(std::string(n_, 'F')) != std::string::npos)
      return out;
    if (auto pos = w.find(k_power); pos != std::string::npos) {
      accumulate(out, w.substr(0, pos) + w.substr(pos + n_), Scalar::one(field_));
      return out;
    }
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const std::string pre = w.substr(0, p);
      const std::string post = w.substr(p + 2);
      const char a = w[p];
      const char b = w[p + 1];
      if (a == 'E' && b == 'K') {
        accumulate(out, pre + "KE" + post, q_);
        return out;
      }
      if (a == 'F' && b == 'K') {
        accumulate(out, pre + "KF" + post, q_inv_);
        return out;
      }
      if (a == 'E' && b == 'F') {
        accumulate(out, pre + "FE" + post, Scalar::one(field_));
        if (bracket_) {
          accumulate(out, pre + "K" + post, *bracket_);
          accumulate(out, pre + std::string(n_ - 1, 'K') + post, -*bracket_);
        }
        return out;
      }
    }
    // Normal form K^i F^j E^k.
    const auto i = static_cast<unsigned>(std::count(w.begin(), w.end(), 'K'));
    const auto j = static_cast<unsigned>(std::count(w.begin(), w.end(), 'F'));
    const auto k = static_cast<unsigned>(std::count(w.begin(), w.end(), 'E'));
    out.emplace(index(i, j, k), Scalar::one(field_));
    return out;
  }

  unsigned n_;
  bool with_e_;
  FieldSpec field_;
  Scalar q_;
  Scalar q_inv_;
  std::optional<Scalar> bracket_;
  std::unordered_map<std::string, Terms> memo_;
};

SparseVec to_sparse(const Terms& t) { return SparseVec(t.begin(), t.end()); }

AlgebraPtr build_quantum(unsigned n, bool with_e) {
  if (n < 2) throw Error(ErrorKind::Usage, "n must be at least 2");
  Rewriter rw(n, with_e);
  const std::size_t dim = rw.dim();
  const std::string letters = with_e ? "KFE" : "KF";
  // Left multiplication by each generator on the normal-ordered basis.
  std::map<char, std::vector<Terms>> left;
  for (char x : letters)
    for (std::size_t b = 0; b < dim; ++b) left[x].push_back(rw.reduce(std::string(1, x) + rw.word(b)));

  std::vector<SparseVec> table(dim * dim);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < dim; ++a) {
    const PBWMonomial m = rw.monomial(a);
    labels.push_back(pbw_label(m));
    const std::string w = rw.word(a);
    for (std::size_t b = 0; b < dim; ++b) {
      Terms v{{b, Scalar::one(rw.field())}};
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Terms next;
        for (const auto& [idx, c] : v)
          for (const auto& [jdx, d] : left[*it][idx]) {
            auto [pos, inserted] = next.try_emplace(jdx, c * d);
            if (!inserted) pos->second += c * d;
          }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        v = std::move(next);
      }
      table[a * dim + b] = to_sparse(v);
    }
  }
  Vector unit = zero_vector(rw.field(), dim);
  unit[0] = Scalar::one(rw.field());
  const Validation validation = dim <= 27 ? Validation::Full : Validation::Trusted;
  return make_algebra(rw.field(), std::move(labels), std::move(table), std::move(unit), validation);
}

unsigned order_of(const AlgebraPtr& alg, unsigned n) {
  if (alg->dim() == std::size_t{n} * n * n) return 3;
  if (alg->dim() == std::size_t{n} * n) return 2;
  throw Error(ErrorKind::ShapeMismatch, "algebra is not u_q(sl2) or Taft for this n");
}

}  // namespace

std::size_t pbw_index(unsigned n, PBWMonomial m) {
  if (m.i >= n || m.j >= n || m.k >= n) throw Error(ErrorKind::ShapeMismatch, "PBW exponent out of range");
  return (std::size_t{m.i} * n + m.j) * n + m.k;
}

PBWMonomial pbw_monomial(unsigned n, std::size_t index) {
  return {static_cast<unsigned>(index / (n * n)), static_cast<unsigned>((index / n) % n),
          static_cast<unsigned>(index % n)};
}

std::string pbw_label(PBWMonomial m) {
  auto part = [](char x, unsigned e) {
    if (e == 0) return std::string();
    return e == 1 ? std::string(1, x) : std::string(1, x) + "^" + std::to_string(e);
  };
  std::string s = part('K', m.i) + part('F', m.j) + part('E', m.k);
  return s.empty() ? "1" : s;
}

AlgebraPtr uqsl2(unsigned n) { return build_quantum(n, true); }

AlgebraPtr taft(unsigned n) { return build_quantum(n, false); }

Element normal_order(const AlgebraPtr& uq, unsigned n, std::string_view word, const Scalar& coeff) {
  const bool with_e = order_of(uq, n) == 3;
  Rewriter rw(n, with_e);
  std::string w;
  for (char c : word) {
    switch (c) {
      case 'K': w += 'K'; break;
      case 'k': w += std::string(n - 1, 'K'); break;
      case 'F': w += 'F'; break;
      case 'E':
        if (!with_e) throw Error(ErrorKind::ParseError, "E is not a generator of the Taft algebra");
        w += 'E';
        break;
      default: throw Error(ErrorKind::ParseError, std::string("unknown generator '") + c + "'");
    }
  }
  Vector v = zero_vector(rw.field(), rw.dim());
  for (const auto& [idx, c] : rw.reduce(w)) v[idx] = coeff * c;
  return Element(uq, std::move(v));
}

FrobeniusStructure uqsl2_integral_form(unsigned n) {
  auto alg = uqsl2(n);
  Vector eps = zero_vector(alg->field(), alg->dim());
  eps[pbw_index(n, {1, n - 1, n - 1})] = Scalar::one(alg->field());
  return make_frobenius(alg, std::move(eps));
}

FrobeniusStructure uqsl2_symmetric_form(unsigned n) {
  const FrobeniusStructure integral = uqsl2_integral_form(n);
  return twist(integral, Element::basis(integral.algebra(), pbw_index(n, {1, 0, 0})));
}

FrobeniusStructure uqsl2_cartan_twist(unsigned n, std::span<const Scalar> coeffs) {
  if (coeffs.size() != n) throw Error(ErrorKind::ShapeMismatch, "need n Cartan coefficients");
  const FrobeniusStructure integral = uqsl2_integral_form(n);
  const auto& alg = integral.algebra();
  Element u = Element::zero(alg);
  for (unsigned i = 0; i < n; ++i) u += coeffs[i] * Element::basis(alg, pbw_index(n, {i, 0, 0}));
  FrobeniusStructure twisted = twist(integral, u);
  if (n == 3) {
    const unsigned top = n - 1;
    const bool ok = twisted.eps()[pbw_index(n, {0, top, top})] == coeffs[1] &&
                    twisted.eps()[pbw_index(n, {1, top, top})] == coeffs[0] &&
                    twisted.eps()[pbw_index(n, {2, top, top})] == coeffs[2];
    if (!ok) throw Error(ErrorKind::InvariantViolated, "Cartan twist: eps_u on F^2E^2, KF^2E^2, K^2F^2E^2");
  }
  return twisted;
}

Element degree_zero_part(const Element& x, unsigned n) {
  const bool with_e = order_of(x.algebra(), n) == 3;
  Vector v = x.coeffs();
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const bool keep = with_e ? pbw_monomial(n, idx).j == pbw_monomial(n, idx).k : idx % n == 0;
    if (!keep) v[idx] = Scalar::zero(x.field());
  }
  return Element(x.algebra(), std::move(v));
}

Scalar circulant_determinant(std::span<const Scalar> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "empty circulant");
  Matrix c(coeffs.front().field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) c(r, col) = coeffs[(r + n - col) % n];
  return determinant(c);
}

FrobeniusStructure taft_form(unsigned n) {
  auto alg = taft(n);
  Vector eps = zero_vector(alg->field(), alg->dim());
  eps[n - 1] = Scalar::one(alg->field());
  return make_frobenius(alg, std::move(eps));
}

}  // namespace frob
