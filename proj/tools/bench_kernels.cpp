// Compares the serial reference kernels against the OpenMP ones on the
// workloads that dominate in practice: assignment scans, profile scans
// over completion-sized algebras, and model enumeration.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gira/constructions.hpp"
#include "gira/enumerate.hpp"
#include "gira/eval.hpp"
#include "gira/hilbert.hpp"
#include "gira/parallel.hpp"
#include "gira/parser.hpp"
#include "gira/profile.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gira;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& name, const std::function<void()>& fn) {
  par::set_threads(0);
  double serial = time_ms(fn);
#ifdef _OPENMP
  par::set_threads(omp_get_max_threads());
#else
  par::set_threads(1);
#endif
  double parallel = time_ms(fn);
  par::set_threads(0);
  std::printf("%-40s %9.1f ms %9.1f ms   x%.2f\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("%-40s %12s %12s %s\n", "kernel", "serial", "openmp", "speedup");

  FiniteAlgebra g4 = gen_gn(4);
  FormulaPtr deep = parse_formula(
      "(p -> q) /\\ (r -> s) /\\ (t -> u) -> ((q -> v) -> ((p -> v) \\/ (w -> w)))");
  row("validates, 8 vars over G4 (6^8)", [&] { (void)validates(g4, deep); });

  FiniteAlgebra g2xg1 = direct_product(gen_gn(2), gen_gn(1));
  row("phase completion of G2 x G1 (8 elts)", [&] { (void)phase_completion(g2xg1); });

  FiniteAlgebra big = direct_product(g2xg1, gen_gn(2));  // 32 elements
  row("profile scan, bounded-girale, 32 elts", [&] {
    (void)check_profile(big, Profile::BoundedGirale);
  });

  row("enumerate girard algebras, size 5", [&] {
    SearchSpec spec;
    spec.profile = Profile::Girard;
    spec.max_size = 5;
    (void)enumerate_models(spec);
  });

  row("HL1-24 validity over G2 x G2", [&] {
    FiniteAlgebra a = direct_product(gen_gn(2), gen_gn(2));
    for (const auto& s : schemata()) (void)validates(a, s.pattern);
  });

  return 0;
}
