#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frob/expr.hpp"
#include "frob/frobenius.hpp"

namespace frob {

struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::optional<Vector> form;
};

/// JSON algebra file: field, dimension, basis_labels, unit, structure
/// ([i, j, k, "scalar"] quadruples), optional form. Errors are ParseError or
/// the validation errors of make_algebra.
LoadedAlgebra load_algebra_json(const std::string& text, Validation validation = Validation::Full);
LoadedAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_json(const AlgebraPtr& algebra, const std::optional<Vector>& form);

struct Builtin {
  std::string name;
  std::string description;
  FrobeniusStructure base;
  ExprContext context;
  unsigned order = 0;  ///< n for uqsl2:n and taft:n, else 0
};

/// matrix:d, blocks:d1+d2+..., group:s3, group:cyclic:n, uqsl2:n, taft:n.
/// Throws Error{Usage} for unknown names.
Builtin resolve_builtin(const std::string& name);
std::vector<std::pair<std::string, std::string>> builtin_catalog();

/// Parses a twist expression against the builtin and twists its base form.
FrobeniusStructure apply_twist(const Builtin& b, const std::string& expression);

struct Report {
  std::string description;
  FieldSpec field;
  std::size_t dim = 0;
  Classification classification;
  Vector dims;
  RationalSeries closed_form;
  Matrix nakayama;
  std::optional<double> elapsed_ms;
};

Report make_report(const FrobeniusStructure& f, std::string description, std::size_t terms);
std::string report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace frob
