#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frob {

struct CheckResult {
  std::string id;
  bool passed = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  bool parallel = true;  ///< OpenMP spider fuzz; the serial reference otherwise
};

/// matrix, semisimple, s3, uqsl2-n2, uqsl2-n3, taft, ktwist, lemma, spider,
/// hilbert, in that order.
std::vector<std::string> suite_names();

/// Throws Error{Usage} for an unknown name. Library errors raised inside a
/// sample are recorded as failed checks, not rethrown.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// Every suite once; hilbert reuses the structures built by the first six.
std::vector<SuiteResult> run_all(const SuiteOptions& options = {});

}  // namespace frob
