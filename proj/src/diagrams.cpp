#include "frob/diagrams.hpp"

#include <cctype>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <random>

namespace frob {

namespace {

struct GenInfo {
  Gen gen;
  const char* name;
  std::size_t in;
  std::size_t out;
};

constexpr GenInfo kGens[] = {
    {Gen::Id, "id", 1, 1},         {Gen::Mul, "mul", 2, 1},   {Gen::Comul, "comul", 1, 2},
    {Gen::Unit, "unit", 0, 1},     {Gen::Counit, "counit", 1, 0}, {Gen::Cup, "cup", 2, 0},
    {Gen::Cap, "cap", 0, 2},
};

const GenInfo& info(Gen g) { return kGens[static_cast<int>(g)]; }

std::size_t slice_in(const std::vector<Gen>& s) {
  std::size_t w = 0;
  for (Gen g : s) w += arity_in(g);
  return w;
}

std::size_t slice_out(const std::vector<Gen>& s) {
  std::size_t w = 0;
  for (Gen g : s) w += arity_out(g);
  return w;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Vertices: input endpoints, then generators slice by slice, then output endpoints.
Graph incidence_graph(const Diagram& d) {
  Graph g;
  // owner[p] = vertex emitting wire p of the current interface.
  std::vector<std::size_t> owner(d.inputs());
  std::iota(owner.begin(), owner.end(), 0);
  g.vertices = d.inputs();
  for (const auto& slice : d.slices()) {
    std::vector<std::size_t> next;
    std::size_t wire = 0;
    for (Gen gen : slice) {
      const std::size_t v = g.vertices++;
      for (std::size_t k = 0; k < arity_in(gen); ++k) g.edges.emplace_back(owner[wire++], v);
      for (std::size_t k = 0; k < arity_out(gen); ++k) next.push_back(v);
    }
    owner = std::move(next);
  }
  for (std::size_t p = 0; p < owner.size(); ++p) g.edges.emplace_back(owner[p], g.vertices++);
  return g;
}

GeneratorMap make_map(FieldSpec field, std::size_t dim, std::size_t in, std::size_t out) {
  GeneratorMap m;
  m.in = in;
  m.out = out;
  m.dim = dim;
  m.field = field;
  std::size_t rows = 1;
  for (std::size_t k = 0; k < in; ++k) rows *= dim;
  m.rows.resize(rows);
  return m;
}

std::string format_key(const Tensor& t, Tensor::Key key) {
  std::string s = "[";
  const auto idx = t.decode(key);
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "]";
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t i) {
  // splitmix64 step so that neighbouring cases are decorrelated.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SpiderCase run_case(const GeneratorSet& gens, std::uint64_t seed, std::size_t max_generators,
                    std::size_t max_width) {
  SpiderCase c;
  c.seed = seed;
  c.diagram = random_connected_diagram(seed, max_generators, max_width);
  c.form = canonical_form(c.diagram);
  const Tensor lhs = evaluate(c.diagram, gens, max_width);
  const Tensor rhs = evaluate(standard_diagram(c.form), gens, std::max(max_width, c.form.m + c.form.n));
  if (auto diff = tensor_difference(lhs, rhs)) {
    c.witness = *diff;
  } else {
    c.passed = true;
  }
  return c;
}

SpiderResult aggregate(std::vector<SpiderCase>& cases) {
  SpiderResult r;
  r.count = cases.size();
  for (auto& c : cases) {
    if (c.passed) {
      ++r.passed;
    } else if (!r.first_failure) {
      r.first_failure = std::move(c);
    }
  }
  return r;
}

}  // namespace

std::size_t arity_in(Gen g) { return info(g).in; }
std::size_t arity_out(Gen g) { return info(g).out; }
const char* gen_name(Gen g) { return info(g).name; }

Diagram::Diagram(std::vector<std::vector<Gen>> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) return;
  inputs_ = slice_in(slices_.front());
  for (std::size_t s = 0; s + 1 < slices_.size(); ++s) {
    const std::size_t got = slice_in(slices_[s + 1]);
    const std::size_t expected = slice_out(slices_[s]);
    if (got != expected) {
      throw Error(ErrorKind::InterfaceMismatch, "slice " + std::to_string(s + 1) + " expects " +
                                                    std::to_string(expected) + " inputs, got " +
                                                    std::to_string(got));
    }
  }
  outputs_ = slice_out(slices_.back());
}

std::size_t Diagram::width(std::size_t s) const {
  if (s == 0) return inputs_;
  return slice_out(slices_.at(s - 1));
}

std::size_t Diagram::max_width() const {
  std::size_t w = inputs_;
  for (std::size_t s = 1; s <= slices_.size(); ++s) w = std::max(w, width(s));
  return w;
}

std::size_t Diagram::operation_count() const {
  std::size_t c = 0;
  for (const auto& s : slices_)
    for (Gen g : s) c += g != Gen::Id;
  return c;
}

Diagram parse_diagram(std::string_view text) {
  std::vector<std::vector<Gen>> slices(1);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view word = text.substr(start, pos - start);
    if (word.empty()) throw ParseError(start, "expected a generator name");
    const GenInfo* found = nullptr;
    for (const auto& g : kGens)
      if (word == g.name) found = &g;
    if (!found) throw ParseError(start, "unknown generator '" + std::string(word) + "'");
    slices.back().push_back(found->gen);
    skip();
    if (pos == text.size()) break;
    if (text[pos] == ',') {
      ++pos;
    } else if (text[pos] == ';') {
      ++pos;
      slices.emplace_back();
    } else {
      throw ParseError(pos, std::string("unexpected '") + text[pos] + "'");
    }
  }
  return Diagram(std::move(slices));
}

std::string format_diagram(const Diagram& d) {
  std::string out;
  for (std::size_t s = 0; s < d.slices().size(); ++s) {
    if (s) out += "; ";
    for (std::size_t i = 0; i < d.slices()[s].size(); ++i) {
      if (i) out += ",";
      out += gen_name(d.slices()[s][i]);
    }
  }
  return out;
}

Diagram compose(const Diagram& a, const Diagram& b) {
  auto slices = a.slices();
  slices.insert(slices.end(), b.slices().begin(), b.slices().end());
  return Diagram(std::move(slices));
}

std::size_t connectivity(const Diagram& d) {
  const Graph g = incidence_graph(d);
  UnionFind uf(g.vertices);
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::size_t components = 0;
  for (std::size_t v = 0; v < g.vertices; ++v) components += uf.find(v) == v;
  return components;
}

std::size_t bounded_faces(const Diagram& d) {
  if (connectivity(d) != 1) throw Error(ErrorKind::NotConnected, "diagram has several components");
  const Graph g = incidence_graph(d);
  return g.edges.size() + 1 - g.vertices;
}

StandardForm canonical_form(const Diagram& d) {
  if (d.empty()) throw Error(ErrorKind::EmptyDiagram, "diagram has no generators");
  return {d.inputs(), d.outputs(), bounded_faces(d)};
}

Diagram standard_diagram(const StandardForm& f) {
  std::vector<std::vector<Gen>> slices;
  if (f.m == 0) slices.push_back({Gen::Unit});
  for (std::size_t k = f.m > 0 ? f.m - 1 : 0; k >= 1; --k) {
    std::vector<Gen> s(k - 1, Gen::Id);
    s.push_back(Gen::Mul);
    slices.push_back(std::move(s));
  }
  for (std::size_t b = 0; b < f.j; ++b) {
    slices.push_back({Gen::Comul});
    slices.push_back({Gen::Mul});
  }
  if (f.n == 0) slices.push_back({Gen::Counit});
  for (std::size_t k = 1; k < f.n; ++k) {
    std::vector<Gen> s(k - 1, Gen::Id);
    s.push_back(Gen::Comul);
    slices.push_back(std::move(s));
  }
  if (slices.empty()) slices.push_back({Gen::Id});
  return Diagram(std::move(slices));
}

const GeneratorMap& GeneratorSet::map(Gen g) const {
  switch (g) {
    case Gen::Id: return id;
    case Gen::Mul: return mul;
    case Gen::Comul: return comul;
    case Gen::Unit: return unit;
    case Gen::Counit: return counit;
    case Gen::Cup: return cup;
    case Gen::Cap: return cap;
  }
  throw Error(ErrorKind::Usage, "unknown generator");
}

GeneratorSet generator_set(const Algebra& algebra, const Vector& eps, const Matrix& metric) {
  const FieldSpec field = algebra.field();
  const std::size_t n = algebra.dim();
  GeneratorSet g;
  g.field = field;
  g.dim = n;
  g.id = GeneratorMap::identity(field, n);
  g.mul = make_map(field, n, 2, 1);
  g.comul = make_map(field, n, 1, 2);
  g.unit = make_map(field, n, 0, 1);
  g.counit = make_map(field, n, 1, 0);
  g.cup = make_map(field, n, 2, 0);
  g.cap = make_map(field, n, 0, 2);

  for (std::size_t i = 0; i < n; ++i) {
    if (!algebra.unit()[i].is_zero()) g.unit.rows[0].emplace_back(i, algebra.unit()[i]);
    if (!eps[i].is_zero()) g.counit.rows[i].emplace_back(0, eps[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Scalar pairing = Scalar::zero(field);
      for (const auto& [k, c] : algebra.product(i, j)) {
        g.mul.rows[i * n + j].emplace_back(k, c);
        pairing += c * eps[k];
      }
      if (!pairing.is_zero()) g.cup.rows[i * n + j].emplace_back(0, pairing);
      if (!metric(i, j).is_zero()) g.cap.rows[0].emplace_back(i * n + j, metric(i, j));
    }
  }
  // Delta(e_b) = sum_kl M_kl (e_b e_k) (x) e_l.
  for (std::size_t b = 0; b < n; ++b) {
    std::map<Tensor::Key, Scalar> acc;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        if (metric(k, l).is_zero()) continue;
        for (const auto& [i, c] : algebra.product(b, k))
          acc.try_emplace(i * n + l, Scalar::zero(field)).first->second += metric(k, l) * c;
      }
    for (auto& [key, c] : acc)
      if (!c.is_zero()) g.comul.rows[b].emplace_back(key, c);
  }
  return g;
}

GeneratorSet generator_set(const FrobeniusStructure& f) {
  GeneratorSet g = generator_set(*f.algebra(), f.eps(), f.metric());
  // The two expressions for Delta agree for a genuine Frobenius structure.
  for (std::size_t b = 0; b < f.dim(); ++b) coproduct(f, Element::basis(f.algebra(), b));
  return g;
}

std::size_t default_max_width(std::size_t dim) {
  if (const char* env = std::getenv("FROB_MAX_WIDTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error(ErrorKind::Usage, "FROB_MAX_WIDTH must be a positive integer");
  }
  std::size_t w = 0;
  std::uint64_t size = 1;
  while (w < 4 && size * dim <= 65536) {
    size *= dim;
    ++w;
  }
  return std::max<std::size_t>(w, 1);
}

Tensor evaluate(const Diagram& d, const GeneratorSet& gens, std::size_t max_width) {
  if (d.empty()) throw Error(ErrorKind::EmptyDiagram, "nothing to evaluate");
  for (std::size_t s = 0; s <= d.slices().size(); ++s) {
    if (d.width(s) > max_width) {
      throw Error(ErrorKind::WidthExceeded, "interface " + std::to_string(s) + " has width " +
                                                std::to_string(d.width(s)) + " > " + std::to_string(max_width));
    }
    if (d.inputs() + d.width(s) > max_legs_for_dim(gens.dim))
      throw Error(ErrorKind::WidthExceeded, "tensor legs exceed the packed index range");
  }
  const std::size_t m = d.inputs();
  Tensor t = Tensor::identity(gens.field, gens.dim, m);
  for (const auto& slice : d.slices()) {
    std::size_t position = m;
    for (Gen g : slice) {
      if (g != Gen::Id) t = apply_generator(t, position, gens.map(g));
      position += arity_out(g);
    }
  }
  return t;
}

Tensor evaluate(const Diagram& d, const FrobeniusStructure& f) {
  return evaluate(d, generator_set(f), std::max(default_max_width(f.dim()), d.max_width()));
}

Diagram random_connected_diagram(std::uint64_t seed, std::size_t max_generators, std::size_t max_width) {
  if (max_generators == 0 || max_width == 0) throw Error(ErrorKind::Usage, "limits must be positive");
  std::mt19937_64 rng(seed);
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t budget = 1 + pick(max_generators);
    std::size_t width = pick(std::min<std::size_t>(2, max_width) + 1);
    std::size_t used = 0;
    std::vector<std::vector<Gen>> slices;
    while (used < budget) {
      std::vector<Gen> slice;
      std::size_t remaining = width;
      std::size_t out = 0;
      std::size_t ops = 0;
      while (true) {
        const bool room = used + ops < budget;
        // Generators without inputs may appear anywhere, including in an empty interface.
        if (room && (chance(0.12) || (remaining == 0 && slice.empty()))) {
          const Gen g = chance(0.5) ? Gen::Unit : Gen::Cap;
          slice.push_back(g);
          out += arity_out(g);
          ++ops;
          continue;
        }
        if (remaining == 0) break;
        Gen g = Gen::Id;
        if (room && !chance(0.35)) {
          if (chance(0.6)) {
            g = (remaining >= 2 && chance(0.5)) ? Gen::Mul : Gen::Comul;
          } else {
            g = (remaining >= 2 && chance(0.5)) ? Gen::Cup : Gen::Counit;
          }
        }
        slice.push_back(g);
        remaining -= arity_in(g);
        out += arity_out(g);
        ops += g != Gen::Id;
      }
      if (ops == 0 || out > max_width) {
        if (slices.size() > 4 * max_generators) break;
        continue;
      }
      slices.push_back(std::move(slice));
      used += ops;
      width = out;
    }
    if (slices.empty()) continue;
    Diagram d(std::move(slices));
    if (d.operation_count() > 0 && d.max_width() <= max_width && connectivity(d) == 1) return d;
  }
  throw Error(ErrorKind::GiveUp, "no connected diagram after 1000 attempts");
}

std::optional<std::string> tensor_difference(const Tensor& a, const Tensor& b) {
  if (a.legs() != b.legs() || a.dim() != b.dim())
    return "shape " + std::to_string(a.legs()) + " legs vs " + std::to_string(b.legs()) + " legs";
  if (a == b) return std::nullopt;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  const Scalar zero = Scalar::zero(a.field());
  while (true) {
    Tensor::Key key;
    Scalar va = zero;
    Scalar vb = zero;
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
      key = ia->first;
      va = ia->second;
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      key = ib->first;
      vb = ib->second;
    } else {
      key = ia->first;
      va = ia->second;
      vb = ib->second;
    }
    if (va != vb) return "entry " + format_key(a, key) + ": " + format_scalar(va) + " vs " + format_scalar(vb);
    if (ia != a.entries().end() && ia->first == key) ++ia;
    if (ib != b.entries().end() && ib->first == key) ++ib;
  }
}

bool LemmaReport::passed() const { return first_failure() == nullptr; }

const LemmaCheck* LemmaReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

LemmaReport lemma_suite(const GeneratorSet& gens) {
  struct Identity {
    const char* tag;
    std::vector<const char*> sides;
  };
  static const std::vector<Identity> identities = {
      {"(2,1) product from coproduct", {"mul", "id,comul; cup,id", "comul,id; id,cup"}},
      {"(1,2) coproduct from product", {"comul", "cap,id; id,mul", "id,cap; mul,id"}},
      {"(1,1) snake", {"id", "id,cap; cup,id", "cap,id; id,cup"}},
      {"(1,1) unit", {"id", "unit,id; mul", "id,unit; mul"}},
      {"(1,1) counit", {"id", "comul; counit,id", "comul; id,counit"}},
      {"(1,1) bead", {"comul; mul", "cap,id; mul,id; mul", "id,cap; id,mul; mul"}},
      {"(3,1) associativity", {"mul,id; mul", "id,mul; mul"}},
      {"(1,3) coassociativity", {"comul; comul,id", "comul; id,comul"}},
      {"(0,2) cap", {"unit; comul", "cap"}},
      {"(2,0) cup", {"mul; counit", "cup"}},
      {"(1,0) counit from cup", {"counit", "unit,id; cup", "id,unit; cup"}},
      {"(0,1) unit from cap", {"unit", "cap; counit,id", "cap; id,counit"}},
      {"(0,0) circle", {"cap; cup", "unit; comul; mul; counit"}},
      {"(2,2) Frobenius law", {"id,comul; mul,id", "mul; comul", "comul,id; id,mul"}},
      {"(3,0) invariance", {"mul,id; cup", "id,mul; cup"}},
  };
  const std::size_t width = 4;
  LemmaReport report;
  for (const auto& id : identities) {
    LemmaCheck check{id.tag, true, {}};
    const Tensor first = evaluate(parse_diagram(id.sides[0]), gens, width);
    for (std::size_t s = 1; s < id.sides.size() && check.passed; ++s) {
      if (auto diff = tensor_difference(first, evaluate(parse_diagram(id.sides[s]), gens, width))) {
        check.passed = false;
        check.witness = std::string(id.sides[0]) + " vs " + id.sides[s] + ": " + *diff;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // special <=> B = 1 <=> uloll = eps.
  const Tensor b = evaluate(parse_diagram("cap; mul"), gens, width);
  const Tensor one = evaluate(parse_diagram("unit"), gens, width);
  const Tensor uloll = evaluate(parse_diagram("comul; mul; counit"), gens, width);
  const Tensor eps = evaluate(parse_diagram("counit"), gens, width);
  LemmaCheck special{"special iff uloll = eps", (b == one) == (uloll == eps), {}};
  if (!special.passed) special.witness = b == one ? "B = 1 but uloll != eps" : "uloll = eps but B != 1";
  report.checks.push_back(std::move(special));
  return report;
}

void require_lemmas(const GeneratorSet& gens) {
  const LemmaReport r = lemma_suite(gens);
  if (const auto* f = r.first_failure()) throw Error(ErrorKind::IdentityFailed, f->tag + ": " + f->witness);
}

SpiderResult spider_fuzz_serial(const GeneratorSet& gens, std::uint64_t seed, std::size_t count,
                                std::size_t max_generators, std::size_t max_width) {
  std::vector<SpiderCase> cases;
  for (std::size_t i = 0; i < count; ++i) cases.push_back(run_case(gens, case_seed(seed, i), max_generators, max_width));
  return aggregate(cases);
}

SpiderResult spider_fuzz(const GeneratorSet& gens, std::uint64_t seed, std::size_t count, std::size_t max_generators,
                         std::size_t max_width) {
  std::vector<SpiderCase> cases(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      cases[i] = run_case(gens, case_seed(seed, static_cast<std::size_t>(i)), max_generators, max_width);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // Rethrow the lowest-index failure, as the serial loop would.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return aggregate(cases);
}

}  // namespace frob
