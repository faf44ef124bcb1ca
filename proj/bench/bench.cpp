// Serial reference vs OpenMP for the three parallel kernels.
// usage: frob_bench [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "frob/builders.hpp"
#include "frob/diagrams.hpp"
#include "frob/kernels.hpp"

using namespace frob;

namespace {

template <class F>
double best_ms(int repeats, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

bool all_ok = true;

void row(const std::string& name, double serial, double parallel, bool agree) {
  all_ok = all_ok && agree;
  std::cout << std::left << std::setw(42) << name << std::right << std::fixed << std::setprecision(1) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(8) << std::setprecision(2) << serial / parallel << "x"
            << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads: " << kernels::max_threads() << ", best of " << repeats << "\n";
  std::cout << std::left << std::setw(42) << "kernel" << std::right << std::setw(10) << "serial ms" << std::setw(10)
            << "omp ms" << std::setw(9) << "speedup" << "\n";

  for (unsigned n : {3u, 4u}) {
    const AlgebraPtr a = uqsl2(n);
    std::optional<kernels::Triple> s, p;
    const double ts = best_ms(repeats, [&] { s = kernels::associativity_violation_serial(*a); });
    const double tp = best_ms(repeats, [&] { p = kernels::associativity_violation(*a); });
    row("associativity uqsl2:" + std::to_string(n) + " (dim " + std::to_string(a->dim()) + ")", ts, tp, s == p);
  }

  for (unsigned n : {3u, 4u, 5u}) {
    const FrobeniusStructure f = uqsl2_integral_form(n);
    Matrix gs(f.field(), 0, 0), gp(f.field(), 0, 0);
    const double ts = best_ms(repeats, [&] { gs = kernels::gram_matrix_serial(*f.algebra(), f.eps()); });
    const double tp = best_ms(repeats, [&] { gp = kernels::gram_matrix(*f.algebra(), f.eps()); });
    row("gram uqsl2:" + std::to_string(n) + " (dim " + std::to_string(f.dim()) + ")", ts, tp, gs == gp);
  }

  Matrix u3 = Matrix::identity(FieldSpec::rational(), 3);
  u3(1, 1) = Scalar::from_int(FieldSpec::rational(), 2);
  u3(2, 2) = Scalar::from_int(FieldSpec::rational(), 3);
  struct Fuzz {
    std::string name;
    FrobeniusStructure f;
    std::size_t width;
  };
  const Fuzz fuzzes[] = {
      {"spider M3 diag(1,2,3)", matrix_frobenius(u3).frobenius, 4},
      {"spider uqsl2:2 twisted by K", uqsl2_symmetric_form(2), 4},
  };
  for (const auto& fz : fuzzes) {
    const GeneratorSet gens = generator_set(fz.f);
    SpiderResult s, p;
    const double ts = best_ms(repeats, [&] { s = spider_fuzz_serial(gens, 1, 200, 8, fz.width); });
    const double tp = best_ms(repeats, [&] { p = spider_fuzz(gens, 1, 200, 8, fz.width); });
    row(fz.name + " (200 cases)", ts, tp, s.passed == p.passed && s.count == p.count);
  }
  return all_ok ? 0 : 1;
}
