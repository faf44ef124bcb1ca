#include "frob/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frob/builders.hpp"

namespace frob {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, what); }

const json& field_of(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar scalar_of(const json& j, FieldSpec field) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
  bad("scalars must be strings or integers, got " + j.dump());
}

Vector vector_of(const json& j, FieldSpec field, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string(what) + " must be an array of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_of(x, field));
  return v;
}

FieldSpec parse_field(const json& j) {
  const std::string kind = field_of(j, "kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "cyclotomic") return FieldSpec::cyclotomic(field_of(j, "order").get<int>());
  bad("unknown field kind '" + kind + "'");
}

json field_json(FieldSpec f) {
  if (!f.is_cyclotomic()) return json{{"kind", "rational"}};
  return json{{"kind", "cyclotomic"}, {"order", f.order}};
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(format_scalar(s));
  return out;
}

unsigned parse_count(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v == 0 || v > 64)
    throw Error(ErrorKind::Usage, "bad size '" + text + "' in builtin '" + name + "'");
  return static_cast<unsigned>(v);
}

}  // namespace

LoadedAlgebra load_algebra_json(const std::string& text, Validation validation) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
  try {
    const FieldSpec field = parse_field(field_of(j, "field"));
    const auto n = field_of(j, "dimension").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis_labels")) {
      labels = j.at("basis_labels").get<std::vector<std::string>>();
      if (labels.size() != n) bad("basis_labels length != dimension");
    } else {
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }
    Vector unit = vector_of(field_of(j, "unit"), field, n, "unit");
    std::vector<StructureEntry> entries;
    for (const auto& q : field_of(j, "structure")) {
      if (!q.is_array() || q.size() != 4) bad("structure entries are [i, j, k, scalar]");
      entries.push_back({q[0].get<std::size_t>(), q[1].get<std::size_t>(), q[2].get<std::size_t>(),
                         scalar_of(q[3], field)});
    }
    LoadedAlgebra out;
    out.algebra = make_algebra(field, std::move(labels), entries, std::move(unit), validation);
    if (j.contains("form")) out.form = vector_of(j.at("form"), field, n, "form");
    return out;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed algebra file: ") + e.what());
  }
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_algebra_json(buf.str());
}

std::string algebra_to_json(const AlgebraPtr& algebra, const std::optional<Vector>& form) {
  json j;
  j["field"] = field_json(algebra->field());
  j["dimension"] = algebra->dim();
  j["basis_labels"] = algebra->labels();
  j["unit"] = vector_json(algebra->unit());
  json structure = json::array();
  const std::size_t n = algebra->dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, c] : algebra->product(a, b)) structure.push_back({a, b, k, format_scalar(c)});
  j["structure"] = std::move(structure);
  if (form) j["form"] = vector_json(*form);
  return j.dump(2);
}

Builtin resolve_builtin(const std::string& name) {
  const auto colon = name.find(':');
  const std::string family = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto make = [&](std::string description, FrobeniusStructure f, std::map<std::string, std::size_t> aliases = {},
                  unsigned order = 0) {
    ExprContext ctx{f.algebra(), std::move(aliases)};
    return Builtin{name, std::move(description), std::move(f), std::move(ctx), order};
  };

  if (family == "matrix") {
    const unsigned d = parse_count(arg, name);
    return make("M_" + arg + " with eps = Tr", matrix_frobenius(Matrix::identity(FieldSpec::rational(), d)).frobenius);
  }
  if (family == "blocks") {
    std::vector<std::size_t> dims;
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, '+')) dims.push_back(parse_count(part, name));
    if (dims.empty()) throw Error(ErrorKind::Usage, "blocks need at least one size");
    return make("direct sum of matrix blocks with eps = sum d_i Tr", semisimple_special_form(dims));
  }
  if (family == "group") {
    if (arg == "s3") {
      const GroupTable g = s3();
      return make("group algebra of S3 with eps = delta_e", group_standard_form(g), g.aliases);
    }
    if (arg.rfind("cyclic:", 0) == 0) {
      const GroupTable g = cyclic(parse_count(arg.substr(7), name));
      return make("group algebra of Z/" + arg.substr(7) + " with eps = delta_e", group_standard_form(g));
    }
  }
  if (family == "uqsl2") {
    const unsigned n = parse_count(arg, name);
    if (n < 2 || n > 12) throw Error(ErrorKind::Usage, "uqsl2 needs 2 <= n <= 12");
    return make("u_q(sl2) at q = zeta_" + arg + " with eps = integral", uqsl2_integral_form(n), {}, n);
  }
  if (family == "taft") {
    const unsigned n = parse_count(arg, name);
    if (n < 2 || n > 12) throw Error(ErrorKind::Usage, "taft needs 2 <= n <= 12");
    return make("Taft algebra at q = zeta_" + arg + " with eps on F^(n-1)", taft_form(n), {}, n);
  }
  throw Error(ErrorKind::Usage, "unknown builtin '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> builtin_catalog() {
  return {
      {"matrix:d", "M_d, matrix units E11, E12, ..., eps = Tr"},
      {"blocks:d1+d2+...", "direct sum of M_di, labels E11_1, ..., eps = sum d_i Tr (special symmetric)"},
      {"group:s3", "KS3 on e, r, s, t, rs, sr (cycle notation accepted), eps = delta_e"},
      {"group:cyclic:n", "KZ/n on e, g, g^2, ..., eps = delta_e"},
      {"uqsl2:n", "u_q(sl2), PBW basis K^i F^j E^k, eps = integral on K F^(n-1) E^(n-1)"},
      {"taft:n", "Taft algebra, basis K^i F^j, eps on F^(n-1)"},
  };
}

FrobeniusStructure apply_twist(const Builtin& b, const std::string& expression) {
  return twist(b.base, parse_element(expression, b.context));
}

Report make_report(const FrobeniusStructure& f, std::string description, std::size_t terms) {
  // The full automorphism check is quadratic in products; skip it on large algebras.
  Matrix z = f.dim() <= 64 ? nakayama(f) : nakayama_matrix(f);
  return Report{std::move(description), f.field(), f.dim(), classify(f), hilbert_series(f, terms),
                rational_closed_form(f), std::move(z), std::nullopt};
}

std::string report_json(const Report& r) {
  json j;
  j["input"] = r.description;
  j["field"] = r.field.describe();
  j["dimension"] = r.dim;
  const auto& c = r.classification;
  j["classification"] = {{"symmetric", c.symmetric},
                         {"weakly_symmetric", c.weakly_symmetric},
                         {"special", c.special},
                         {"quasispecial", c.quasispecial.has_value()}};
  j["lambda"] = c.quasispecial ? json(format_scalar(*c.quasispecial)) : json(nullptr);
  j["lambda_prime"] = format_scalar(c.counit_scale);
  j["fdim"] = format_scalar(c.fdim);
  j["dims"] = vector_json(r.dims);
  j["closed_form"] = {{"numerator", vector_json(r.closed_form.numerator)},
                      {"denominator", vector_json(r.closed_form.denominator)},
                      {"text", r.closed_form.format()}};
  json z = json::array();
  for (std::size_t i = 0; i < r.nakayama.rows(); ++i) z.push_back(vector_json(r.nakayama.row(i)));
  j["nakayama"] = std::move(z);
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j.dump(2);
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  const auto& c = r.classification;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "input:            " << r.description << "\n";
  out << "field:            " << r.field.describe() << ", dimension " << r.dim << "\n";
  out << "symmetric:        " << yes(c.symmetric) << "\n";
  out << "weakly symmetric: " << yes(c.weakly_symmetric) << "\n";
  out << "special:          " << yes(c.special) << "\n";
  out << "quasispecial:     " << (c.quasispecial ? "yes, lambda = " + format_scalar(*c.quasispecial) : "no") << "\n";
  out << "lambda':          " << format_scalar(c.counit_scale) << "\n";
  out << "dims:            ";
  for (const auto& d : r.dims) out << " " << format_scalar(d);
  out << "\n";
  out << "series:           " << r.closed_form.format() << "\n";
  std::size_t nonidentity = 0;
  for (std::size_t i = 0; i < r.nakayama.rows(); ++i)
    for (std::size_t k = 0; k < r.nakayama.cols(); ++k)
      nonidentity += !(r.nakayama(i, k) == (i == k ? Scalar::one(r.field) : Scalar::zero(r.field)));
  out << "nakayama:         " << (nonidentity == 0 ? "identity" : "trace " + format_scalar(r.nakayama.trace()))
      << "\n";
  if (r.elapsed_ms) out << "elapsed:          " << *r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace frob
