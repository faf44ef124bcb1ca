// One line per acceptance criterion; exit status is nonzero if any is red.

#include <iostream>

#include "frob/suites.hpp"

int main() {
  const auto results = frob::run_all();
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::cout << "criterion " << i + 1 << ": " << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << " ("
              << r.checks.size() << " checks";
    if (!r.passed()) {
      std::cout << "; failing:";
      for (const auto& c : r.checks)
        if (!c.passed) std::cout << " [" << c.id << ": " << c.detail << "]";
    }
    std::cout << ")\n";
    all = all && r.passed();
  }
  return all ? 0 : 1;
}
