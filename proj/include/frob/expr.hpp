#pragma once

#include <map>
#include <string_view>

#include "frob/algebra.hpp"

namespace frob {

/// Names available to parse_element beyond the algebra's basis labels.
struct ExprContext {
  AlgebraPtr algebra;
  std::map<std::string, std::size_t> aliases;  ///< extra basis names, e.g. "(12)"
};

/// Parses an algebra element.
///
///   expr   := term (("+" | "-") term)*
///   term   := unary ("*"? unary)*          juxtaposition multiplies
///   unary  := ("-" | "+") unary | power
///   power  := atom ("^" "-"? integer)?     negative powers invert
///   atom   := rational | ident | alias | "(" expr ")"
///           | "[" c0 "," c1 ... "]"        cyclotomic scalar
///           | "{" s0 "," s1 ... "}"        coefficients on the basis
///
/// An identifier is a basis label if one matches exactly; otherwise `q` is the
/// root of unity of a cyclotomic field, and any other word is read as the
/// product of its single-letter labels ("FE" = F*E).
Element parse_element(std::string_view text, const ExprContext& ctx);

}  // namespace frob
