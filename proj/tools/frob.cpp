#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/builders.hpp"
#include "frob/diagrams.hpp"
#include "frob/io.hpp"
#include "frob/suites.hpp"

using namespace frob;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kDegenerate = 3 };

struct InputFlags {
  std::string input;
  std::string builtin;
  std::string twist;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--input", in.input, "JSON algebra file with a form");
  cmd->add_option("--builtin", in.builtin, "builtin name, see `builtin --list`");
  cmd->add_option("--twist", in.twist, "twist element, e.g. \"K\", \"(12)\", \"{1,0,0,2}\"");
}

struct Source {
  FrobeniusStructure frobenius;
  std::string description;
};

Source load_source(const InputFlags& in) {
  if (in.input.empty() == in.builtin.empty())
    throw Error(ErrorKind::Usage, "give exactly one of --input and --builtin");
  if (!in.builtin.empty()) {
    const Builtin b = resolve_builtin(in.builtin);
    if (in.twist.empty()) return {b.base, b.name + ": " + b.description};
    return {apply_twist(b, in.twist), b.name + " twisted by " + in.twist};
  }
  LoadedAlgebra loaded = load_algebra_file(in.input);
  if (!loaded.form) throw Error(ErrorKind::Usage, "'" + in.input + "' has no \"form\"; nothing to analyze");
  FrobeniusStructure f = make_frobenius(loaded.algebra, *loaded.form);
  if (in.twist.empty()) return {f, in.input};
  const ExprContext ctx{loaded.algebra, {}};
  return {twist(f, parse_element(in.twist, ctx)), in.input + " twisted by " + in.twist};
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Degenerate:
      return kDegenerate;
    case ErrorKind::IdentityFailed:
    case ErrorKind::InvariantViolated:
      return kCheckFailed;
    default:
      return kUsage;
  }
}

std::string format_tensor(const Tensor& t, std::size_t limit = 16) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& [key, value] : t.entries()) {
    if (shown++ == limit) {
      out += "  ... (" + std::to_string(t.nnz()) + " nonzero entries)\n";
      break;
    }
    std::string idx;
    for (auto i : t.decode(key)) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    out += "  [" + idx + "] = " + format_scalar(value) + "\n";
  }
  return out.empty() ? "  (zero)\n" : out;
}

int cmd_analyze(const InputFlags& in, std::size_t terms, const std::string& format, bool timing) {
  const Source src = load_source(in);
  const auto start = std::chrono::steady_clock::now();
  Report r = make_report(src.frobenius, src.description, terms);
  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << (format == "json" ? report_json(r) + "\n" : report_text(r));
  return kOk;
}

int cmd_series(const InputFlags& in, const std::string& format) {
  const Source src = load_source(in);
  const RationalSeries s = rational_closed_form(src.frobenius);
  if (format == "json") {
    nlohmann::ordered_json j;
    auto vec = [](const Vector& v) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& x : v) a.push_back(format_scalar(x));
      return a;
    };
    j["input"] = src.description;
    j["numerator"] = vec(s.numerator);
    j["denominator"] = vec(s.denominator);
    j["text"] = s.format();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << s.format() << "\n";
  }
  return kOk;
}

int cmd_spider(const InputFlags& in, std::uint64_t seed, std::size_t count, std::size_t max_gens,
               std::optional<std::size_t> max_width, bool serial) {
  const Source src = load_source(in);
  const std::size_t dim = src.frobenius.dim();
  const std::size_t width = max_width.value_or(default_max_width(dim));
  double entries = 1;
  for (std::size_t i = 0; i < width; ++i) entries *= static_cast<double>(dim);
  if (width == 0 || width > max_legs_for_dim(dim) || entries > double(1 << 20))
    throw Error(ErrorKind::Usage, "width " + std::to_string(width) + " is outside the budget for dimension " +
                                      std::to_string(dim));
  const GeneratorSet gens = generator_set(src.frobenius);
  const SpiderResult res = serial ? spider_fuzz_serial(gens, seed, count, max_gens, width)
                                  : spider_fuzz(gens, seed, count, max_gens, width);
  std::cout << "structure: " << src.description << "\n";
  std::cout << "seed " << seed << ", max generators " << max_gens << ", max width " << width << "\n";
  std::cout << "passed " << res.passed << "/" << res.count << "\n";
  if (!res.first_failure) return kOk;
  const SpiderCase& bad = *res.first_failure;
  std::cout << "first failure: case seed " << bad.seed << "\n";
  std::cout << "diagram: " << format_diagram(bad.diagram) << "\n";
  std::cout << "standard form (m, n, j) = (" << bad.form.m << ", " << bad.form.n << ", " << bad.form.j << ")\n";
  std::cout << "witness: " << bad.witness << "\n";
  std::cout << "diagram tensor:\n" << format_tensor(evaluate(bad.diagram, gens, width));
  std::cout << "standard tensor:\n" << format_tensor(evaluate(standard_diagram(bad.form), gens, width));
  return kCheckFailed;
}

int print_suite(const SuiteResult& r, std::vector<std::string>& failing) {
  std::cout << "== " << r.name << "\n";
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "  PASS  " : "  FAIL  ") << c.id;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    if (!c.passed) failing.push_back(c.id);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const InputFlags& in, std::uint64_t seed, bool serial) {
  std::vector<std::string> failing;
  if (!in.builtin.empty() || !in.input.empty()) {
    if (suite != "lemma") throw Error(ErrorKind::Usage, "--builtin/--input only apply to --suite lemma");
    const Source src = load_source(in);
    const LemmaReport report = lemma_suite(generator_set(src.frobenius));
    std::cout << "== lemma on " << src.description << "\n";
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "  PASS  " : "  FAIL  ") << c.tag;
      if (!c.passed) std::cout << "  [" << c.witness << "]";
      std::cout << "\n";
      if (!c.passed) failing.push_back(c.tag);
    }
  } else {
    const SuiteOptions options{seed, !serial};
    std::vector<SuiteResult> results;
    if (suite == "all") {
      results = run_all(options);
    } else {
      results.push_back(run_suite(suite, options));
    }
    for (const auto& r : results) print_suite(r, failing);
  }
  if (failing.empty()) {
    std::cout << "all checks passed\n";
    return kOk;
  }
  std::cout << "failing checks:\n";
  for (const auto& id : failing) std::cout << "  " << id << "\n";
  return kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius algebra workbench"};
  app.require_subcommand(1);

  InputFlags in;
  std::size_t terms = 6;
  std::string format = "text";
  bool timing = false;
  auto add_report_flags = [&](CLI::App* cmd) {
    add_input_flags(cmd, in);
    cmd->add_option("--terms", terms, "number of F-dimensions to list")->check(CLI::Range(1, 1000));
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timing", timing, "include elapsed time in the report");
  };

  auto* analyze = app.add_subcommand("analyze", "classify a Frobenius structure and list its F-dimensions");
  add_report_flags(analyze);
  auto* twist_cmd = app.add_subcommand("twist", "analyze with a required --twist");
  add_report_flags(twist_cmd);

  auto* series = app.add_subcommand("series", "print the closed-form F-Hilbert series");
  add_input_flags(series, in);
  series->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_gens = 8;
  std::optional<std::size_t> max_width;
  bool serial = false;
  auto* spider = app.add_subcommand("spider", "fuzz the planar spider theorem on random diagrams");
  add_input_flags(spider, in);
  spider->add_option("--seed", seed, "first case seed");
  spider->add_option("--count", count, "number of diagrams");
  spider->add_option("--max-gens", max_gens, "generators per diagram")->check(CLI::Range(1, 64));
  spider->add_option("--max-width", max_width, "interface width cap (default from FROB_MAX_WIDTH or dimension)");
  spider->add_flag("--serial", serial, "use the serial reference instead of OpenMP");

  bool list = false;
  auto* builtin = app.add_subcommand("builtin", "list builtin algebras");
  builtin->add_flag("--list", list, "print the catalogue");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--builtin", in.builtin, "with --suite lemma: run the identities on this builtin");
  verify->add_option("--input", in.input, "with --suite lemma: run the identities on this file");
  verify->add_option("--twist", in.twist, "twist applied to --builtin/--input");
  std::uint64_t suite_seed = SuiteOptions{}.seed;
  verify->add_option("--seed", suite_seed, "suite seed");
  verify->add_flag("--serial", serial, "serial spider fuzz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(in, terms, format, timing);
    if (*twist_cmd) {
      if (in.twist.empty()) throw Error(ErrorKind::Usage, "twist needs --twist");
      return cmd_analyze(in, terms, format, timing);
    }
    if (*series) return cmd_series(in, format);
    if (*spider) return cmd_spider(in, seed, count, max_gens, max_width, serial);
    if (*builtin) {
      for (const auto& [name, description] : builtin_catalog()) std::cout << name << "\t" << description << "\n";
      return kOk;
    }
    if (*verify) {
      const auto names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string known;
        for (const auto& n : names) known += " " + n;
        throw Error(ErrorKind::Usage, "unknown suite '" + suite + "'; known: all" + known);
      }
      return cmd_verify(suite, in, suite_seed, serial);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}
