// Compares the serial reference implementations of the heavy verification
// kernels against their OpenMP variants on the bundled fixtures. The outputs
// are asserted identical before timings are reported.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "jbkit/cone.hpp"
#include "jbkit/io.hpp"
#include "jbkit/free_lie.hpp"
#include "jbkit/operad/delta.hpp"

using namespace jbkit;

namespace {

template <class Fn>
double time_of(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-46s %9.3f s %9.3f s %6.2fx\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  LiePair dg = load_pair(dir + "/pair_sl2_dg.json");
  LiePair gl = load_pair(dir + "/pair_sl2_gl2.json");

  std::printf("%-46s %11s %11s %7s\n", "kernel", "serial", "openmp", "speedup");

  {
    auto cd = build_codifferential(dg, ConeMode::dg, 5);
    ValidationReport a, b;
    double ts = time_of([&] { a = check_D_squared(cd, 5, Exec::serial); });
    double tp = time_of([&] { b = check_D_squared(cd, 5, Exec::parallel); });
    if (!(a.ok() == b.ok() && a.violations.size() == b.violations.size())) {
      std::cerr << "kernel outputs differ\n";
      return 1;
    }
    row("check_D_squared (dg pair, weight 5)", ts, tp);
  }
  {
    auto cd = build_codifferential(dg, ConeMode::dg, 4);
    AlgebraSpec cone = export_cone_brackets(cd, 4);
    ValidationReport a, b;
    double ts = time_of([&] { a = check_linfinity(cone, 4, Exec::serial); });
    double tp = time_of([&] { b = check_linfinity(cone, 4, Exec::parallel); });
    if (a.ok() != b.ok()) return 1;
    row("check_linfinity (dg cone, arity 4)", ts, tp);
  }
  {
    auto fields = twisted_action(gl, 7);
    ValidationReport a, b;
    double ts = time_of([&] { a = verify_field_morphism(fields, gl.g, gl.h, 6, Exec::serial); });
    double tp = time_of([&] { b = verify_field_morphism(fields, gl.g, gl.h, 6, Exec::parallel); });
    if (a.ok() != b.ok()) return 1;
    row("verify_field_morphism (sl2->gl2, order 6)", ts, tp);
  }
  {
    ValidationReport a, b;
    double ts = time_of([&] { a = operad::check_delta_squared(operad::OperadId::hs_inf, 5,
                                                              Exec::serial); });
    double tp = time_of([&] { b = operad::check_delta_squared(operad::OperadId::hs_inf, 5,
                                                              Exec::parallel); });
    if (a.ok() != b.ok()) return 1;
    row("check_delta_squared (arity 5)", ts, tp);
  }
  {
    AlgebraSpec fn = free_nilpotent({"x1", "x2", "x3"}, 5);
    ValidationReport a, b;
    double ts = time_of([&] { a = validate_lie(fn, Exec::serial); });
    double tp = time_of([&] { b = validate_lie(fn, Exec::parallel); });
    if (a.ok() != b.ok()) return 1;
    row("validate_lie (free nilpotent, weight 5)", ts, tp);
  }
  return 0;
}
