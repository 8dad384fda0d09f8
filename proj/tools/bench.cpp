// Benchmark of the OpenMP kernels against their serial reference paths:
// history convolution (all nodes), the solver's implicit stepping, and the
// pairwise Hoelder seminorm. Results must agree bitwise; timings show the
// parallel speedup.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fracml/ab_operators.hpp"
#include "fracml/diagnostics.hpp"
#include "fracml/nonlocal_space.hpp"
#include "fracml/parabolic_solver.hpp"

using namespace fracml;

namespace {

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_s();
    fn();
    best = std::min(best, now_s() - t0);
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s, bool bits) {
  std::printf("%-28s serial %8.3f ms   omp %8.3f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              bits ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel paths fall back to serial\n");
#endif

  const auto ord = FractionalOrder::make(0.5);

  // history convolution over all nodes, O(kappa^2)
  {
    const auto grid = TimeGrid::make(0.0, 1.0, 4096);
    const auto ser = TimeSeries::sample(
        grid, [](double t) { return std::sin(7.0 * t) + 0.3 * t; });
    std::vector<double> a, b;
    const double ts = time_best_of(3, [&] { a = discrete_l_all_serial(ser, ord); });
    const double tp = time_best_of(3, [&] { b = discrete_l_all(ser, ord); });
    report("discrete_l_all (k=4096)", ts, tp,
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
  }

  // implicit solver: dense nonlocal matvec + per-step history
  {
    const auto tg = TimeGrid::make(0.0, 0.25, 48);
    const auto xg = SpaceGrid::make(2.0, 513, {FarFieldKind::zero, 0.0});
    SolverConfig cfg;
    cfg.order = ord;
    cfg.spatial =
        SpatialKernelSpec::make(1, 1.5, 1.0, 1.0, calibrated_normalization(1.5));
    cfg.g = [](double, double) { return 0.0; };
    std::vector<double> u0(513);
    for (int j = 0; j < 513; ++j) {
      const double x = xg.node(j);
      u0[j] = std::exp(-4.0 * x * x);
    }
    SolverConfig scfg = cfg;
    scfg.parallel = false;
    const ParabolicStepper ps(cfg, tg, xg), ss(scfg, tg, xg);
    SolveResult ra, rb;
    const double ts = time_best_of(2, [&] { ra = ss.solve(u0); });
    const double tp = time_best_of(2, [&] { rb = ps.solve(u0); });
    report("pde solve (48 x 513)", ts, tp,
           std::memcmp(ra.field.values.data(), rb.field.values.data(),
                       ra.field.values.size() * sizeof(double)) == 0);
  }

  // pairwise seminorm (max-reduction, order independent)
  {
    const auto tg = TimeGrid::make(0.0, 1.0, 127);
    const auto xg = SpaceGrid::make(1.0, 79, {FarFieldKind::zero, 0.0});
    SpaceTimeField f = SpaceTimeField::make(tg, xg);
    for (int k = 0; k <= 127; ++k) {
      for (int j = 0; j < 79; ++j) {
        f.at(k, j) = std::sin(3.0 * xg.node(j)) * std::exp(-tg.node(k));
      }
    }
    const Region reg{-1.0, 1.0, 0.0, 1.0};
    double a = 0.0, b = 0.0;
#ifdef _OPENMP
    const int nt = omp_get_max_threads();
#endif
    const double tp = time_best_of(3, [&] {
      a = holder_seminorm(f, 0.5, 0.5, 1.0, reg);
    });
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    const double ts = time_best_of(3, [&] {
      b = holder_seminorm(f, 0.5, 0.5, 1.0, reg);
    });
#ifdef _OPENMP
    omp_set_num_threads(nt);
#endif
    report("holder_seminorm (1e4 nodes)", ts, tp, a == b);
  }
  return 0;
}
