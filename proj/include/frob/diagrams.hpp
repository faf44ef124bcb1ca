#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/tensor.hpp"

namespace frob {

enum class Gen { Id, Mul, Comul, Unit, Counit, Cup, Cap };

std::size_t arity_in(Gen g);
std::size_t arity_out(Gen g);
const char* gen_name(Gen g);

/// Planar diagram as horizontal slices read top to bottom; each slice lists
/// generators left to right. Interfaces between slices must match in width.
class Diagram {
public:
  Diagram() = default;
  /// Throws Error{InterfaceMismatch}.
  explicit Diagram(std::vector<std::vector<Gen>> slices);

  const std::vector<std::vector<Gen>>& slices() const { return slices_; }
  bool empty() const { return slices_.empty(); }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  /// Width of interface s: s = 0 is the input boundary, s = slices() the output.
  std::size_t width(std::size_t s) const;
  std::size_t max_width() const;
  /// Generators other than Id.
  std::size_t operation_count() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  std::vector<std::vector<Gen>> slices_;
  std::size_t inputs_ = 0;
  std::size_t outputs_ = 0;
};

/// diagram := slice (";" slice)*, slice := gen ("," gen)*.
Diagram parse_diagram(std::string_view text);
std::string format_diagram(const Diagram& d);
/// a followed by b (a's outputs feed b's inputs).
Diagram compose(const Diagram& a, const Diagram& b);

/// Components of the incidence graph (generators and boundary endpoints).
std::size_t connectivity(const Diagram& d);
/// E - V + 1; throws Error{NotConnected}.
std::size_t bounded_faces(const Diagram& d);

struct StandardForm {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t j = 0;
  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

/// (inputs, outputs, bounded faces). Throws Error{EmptyDiagram}, Error{NotConnected}.
StandardForm canonical_form(const Diagram& d);
/// Right-nested products (or unit), j beads, coproducts (or counit).
Diagram standard_diagram(const StandardForm& f);

/// Linear maps for each generator. Built from a Frobenius structure, or from
/// raw data so that tests can pair a form with a metric that does not invert it.
struct GeneratorSet {
  FieldSpec field;
  std::size_t dim = 0;
  GeneratorMap id, mul, comul, unit, counit, cup, cap;

  const GeneratorMap& map(Gen g) const;
};

GeneratorSet generator_set(const FrobeniusStructure& f);
/// No consistency checks: cup = eps o mu from `eps`, cap and comul from `metric`.
GeneratorSet generator_set(const Algebra& algebra, const Vector& eps, const Matrix& metric);

/// Interface width cap: FROB_MAX_WIDTH if set, else the largest w <= 4 with
/// dim^w <= 65536.
std::size_t default_max_width(std::size_t dim);

/// Tensor of the map A^{m} -> A^{n}, legs ordered inputs then outputs.
/// Throws Error{WidthExceeded} when an interface is wider than max_width.
Tensor evaluate(const Diagram& d, const GeneratorSet& gens, std::size_t max_width);
Tensor evaluate(const Diagram& d, const FrobeniusStructure& f);

/// Deterministic for a seed. At most two inputs; throws Error{GiveUp} after
/// 1000 rejected attempts.
Diagram random_connected_diagram(std::uint64_t seed, std::size_t max_generators, std::size_t max_width);

struct LemmaCheck {
  std::string tag;
  bool passed = true;
  std::string witness;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
  /// First failing check, if any.
  const LemmaCheck* first_failure() const;
};

/// Evaluates both sides of every core identity as tensors and compares exactly.
LemmaReport lemma_suite(const GeneratorSet& gens);
/// Throws Error{IdentityFailed} with the tag and witness of the first failure.
void require_lemmas(const GeneratorSet& gens);

struct SpiderCase {
  std::uint64_t seed = 0;
  Diagram diagram;
  StandardForm form;
  bool passed = false;
  std::string witness;
};

struct SpiderResult {
  std::size_t count = 0;
  std::size_t passed = 0;
  std::optional<SpiderCase> first_failure;
};

/// Case i uses seed + i; serial reference and OpenMP version agree exactly.
SpiderResult spider_fuzz_serial(const GeneratorSet& gens, std::uint64_t seed, std::size_t count,
                                std::size_t max_generators, std::size_t max_width);
SpiderResult spider_fuzz(const GeneratorSet& gens, std::uint64_t seed, std::size_t count,
                         std::size_t max_generators, std::size_t max_width);

/// Compares two tensors; on mismatch describes the first differing entry.
std::optional<std::string> tensor_difference(const Tensor& a, const Tensor& b);

}  // namespace frob
