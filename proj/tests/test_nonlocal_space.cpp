#include <cmath>
#include <random>

#include <doctest.h>

#include "fracml/errors.hpp"
#include "fracml/nonlocal_space.hpp"

using namespace fracml;

namespace {

SampledField sample(const SpaceGrid& g, double (*f)(double)) {
  std::vector<double> v(g.n_points);
  for (int j = 0; j < g.n_points; ++j) v[j] = f(g.node(j));
  return SampledField(g, std::move(v));
}

}  // namespace

TEST_CASE("space grid") {
  const auto g = SpaceGrid::make(2.0, 129);
  CHECK(g.spacing == doctest::Approx(4.0 / 128.0));
  CHECK(g.node(64) == doctest::Approx(0.0));
  CHECK_THROWS_AS(SpaceGrid::make(2.0, 128), DomainError);  // even
  CHECK_THROWS_AS(SpaceGrid::make(-1.0, 5), DomainError);
  const auto g1 = SpaceGrid::make(1.0, 1);  // single point is allowed
  CHECK(g1.spacing == 0.0);
}

TEST_CASE("second differences") {
  // affine functions vanish for h inside the grid
  const auto g = SpaceGrid::make(4.0, 257, {FarFieldKind::none, 0.0});
  const auto lin = sample(g, [](double x) { return 3.0 * x + 1.0; });
  for (double h : {0.03125, 0.5, 1.0}) {
    CHECK(std::abs(second_difference(lin, 0.25, h)) <= 1e-12);
  }
  // quadratic with matching power growth: exact 2 h^2 on node offsets
  const auto gq = SpaceGrid::make(4.0, 257, {FarFieldKind::power_growth, 2.0});
  const auto quad = sample(gq, [](double x) { return x * x; });
  for (double h : {1.0, 3.0, 6.0}) {  // h = 6 reaches the far-field model
    CHECK(second_difference(quad, 0.0, h) == doctest::Approx(2.0 * h * h).epsilon(1e-12));
  }
  // cos at x = 0 with h = pi: exact node values give -4
  const auto gc = SpaceGrid::make(M_PI, 5, {FarFieldKind::none, 0.0});
  const auto cosf = sample(gc, [](double x) { return std::cos(x); });
  CHECK(second_difference(cosf, 0.0, M_PI) == doctest::Approx(-4.0).epsilon(1e-14));
  // no model and out of the box
  CHECK_THROWS_AS(second_difference(cosf, 0.0, 2.0 * M_PI), DomainError);
}

TEST_CASE("fractional Laplacian kills constants under the constant model") {
  const auto g = SpaceGrid::make(2.0, 65, {FarFieldKind::constant, 0.0});
  const auto f = sample(g, [](double) { return 2.5; });
  const auto spec = SpatialKernelSpec::make(1, 1.2, 1.0, 1.0, 1.0);
  CHECK(std::abs(fractional_laplacian(f, spec, 0.0, 1e-12)) <= 1e-14);
}

TEST_CASE("calibrated symbol: J cos = -|xi|^sigma cos") {
  const double C = calibrated_normalization(1.0);
  const auto g = SpaceGrid::make(60.0, 4001, {FarFieldKind::zero, 0.0});
  const auto f = sample(g, [](double x) { return std::cos(x); });
  const auto spec = SpatialKernelSpec::make(1, 1.0, 0.9, 1.1, C);
  CHECK(fractional_laplacian(f, spec, 0.0, 1e-9) ==
        doctest::Approx(-1.0).epsilon(2e-3));
  // at a nonzero node the same symbol scales cos(x)
  const double x0 = g.node(2200);
  CHECK(fractional_laplacian(f, spec, x0, 1e-9) ==
        doctest::Approx(-std::cos(x0)).epsilon(5e-3));
}

TEST_CASE("sigma -> 2 sanity: low-mode symbol approaches |xi|^2") {
  const double sigma = 1.95;
  const double C = calibrated_normalization(sigma);
  const auto g = SpaceGrid::make(60.0, 4001, {FarFieldKind::zero, 0.0});
  const auto spec = SpatialKernelSpec::make(1, sigma, 1.0, 1.0, C);
  for (double xi : {0.5, 1.0}) {
    std::vector<double> v(g.n_points);
    for (int j = 0; j < g.n_points; ++j) v[j] = std::cos(xi * g.node(j));
    const SampledField f(g, std::move(v));
    const double got = fractional_laplacian(f, spec, 0.0, 2e-7);
    CHECK(std::abs(got + xi * xi) <= 0.05 * xi * xi);
  }
}

TEST_CASE("Gaussian bump against a brute-force midpoint oracle") {
  const double sigma = 1.3;
  const auto g = SpaceGrid::make(8.0, 1025, {FarFieldKind::zero, 0.0});
  const auto f = sample(g, [](double x) { return std::exp(-x * x); });
  const auto spec = SpatialKernelSpec::make(1, sigma, 1.0, 1.0, 0.7);
  const double got = fractional_laplacian(f, spec, 0.0, 1e-10);

  // oracle over the same evaluable field: shared Taylor near field below
  // h0, then a dense midpoint rule instead of the adaptive splitting
  const double dx = g.spacing;
  const double h0 = 3.0 * dx;
  const double upp = second_difference(f, 0.0, dx) / (dx * dx);
  double oracle = upp * 0.7 * 2.0 * std::pow(h0, 2.0 - sigma) / (2.0 - sigma);
  const double dh = 2.0e-5;
  double acc = 0.0;
  for (double h = h0; h < 40.0; h += dh) {
    const double mid = h + 0.5 * dh;
    acc += (f.eval(mid) + f.eval(-mid) - 2.0 * f.eval(0.0)) *
           std::pow(mid, -1.0 - sigma) * dh;
  }
  oracle += 2.0 * 0.7 * acc;
  // analytic zero-model remainder past the sweep
  oracle += 2.0 * 0.7 * (-2.0 * f.eval(0.0)) * std::pow(40.0, -sigma) / sigma;
  CHECK(got == doctest::Approx(oracle).epsilon(2e-6));
}

TEST_CASE("scaling law: J u(r .)(0) = r^sigma J u(0)") {
  // the same samples on a box shrunk by r represent exactly u(r x), so the
  // comparison isolates the operator's scaling (interpolation cancels)
  const double sigma = 1.4;
  const auto spec = SpatialKernelSpec::make(1, sigma, 1.0, 1.0, 1.0);
  const auto g1 = SpaceGrid::make(10.0, 2049, {FarFieldKind::zero, 0.0});
  const auto g2 = SpaceGrid::make(5.0, 2049, {FarFieldKind::zero, 0.0});
  std::vector<double> v(2049);
  for (int j = 0; j < 2049; ++j) {
    const double x = g1.node(j);
    v[j] = std::exp(-x * x);
  }
  const SampledField f1(g1, v), f2(g2, v);
  const double j1 = fractional_laplacian(f1, spec, 0.0, 1e-11);
  const double j2 = fractional_laplacian(f2, spec, 0.0, 1e-11);
  CHECK(j2 == doctest::Approx(std::pow(2.0, sigma) * j1).epsilon(1e-6));
}

TEST_CASE("growth beyond the operator order is rejected") {
  const auto g = SpaceGrid::make(2.0, 65, {FarFieldKind::power_growth, 1.5});
  const auto f = sample(g, [](double x) { return std::abs(x); });
  const auto spec = SpatialKernelSpec::make(1, 1.2, 1.0, 1.0, 1.0);
  CHECK_THROWS_AS(fractional_laplacian(f, spec, 0.0, 1e-9), DomainError);
}

TEST_CASE("pucci pair: trivial and structural identities") {
  const auto gc = SpaceGrid::make(2.0, 65, {FarFieldKind::constant, 0.0});
  const auto cf = sample(gc, [](double) { return 1.7; });
  const PucciConfig pc{ExtremalConstants::make(0.5, 2.0), 1.0, false};
  CHECK(std::abs(pucci_plus(cf, pc, 0.0, 1e-12)) <= 1e-14);
  CHECK(std::abs(pucci_minus(cf, pc, 0.0, 1e-12)) <= 1e-14);

  const auto g = SpaceGrid::make(3.0, 241, {FarFieldKind::zero, 0.0});
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(241), vn(241);
    const double w = 1.0 + 2.0 * std::abs(U(rng));
    for (int j = 0; j < 241; ++j) {
      const double x = g.node(j);
      v[j] = std::exp(-w * x * x) * (1.0 + 0.5 * U(rng));
      vn[j] = -v[j];
    }
    const SampledField f(g, v), fn(g, vn);
    const double x0 = U(rng);
    // duality M+(-u) = -M-(u)
    CHECK(pucci_plus(fn, pc, x0, 1e-11) ==
          doctest::Approx(-pucci_minus(f, pc, x0, 1e-11)).epsilon(1e-12));
    // degenerate ellipticity collapses onto the linear operator
    const PucciConfig pc1{ExtremalConstants::make(1.0, 1.0), 1.0, false};
    const auto lin = SpatialKernelSpec::make(1, 1.0, 1.0, 1.0, 1.0);
    CHECK(pucci_plus(f, pc1, x0, 1e-11) ==
          doctest::Approx(pucci_minus(f, pc1, x0, 1e-11)).epsilon(1e-12));
    CHECK(pucci_plus(f, pc1, x0, 1e-11) ==
          doctest::Approx(fractional_laplacian(f, lin, x0, 1e-11))
              .epsilon(1e-10));
    // ordering when J's normalization sits inside [lambda, Lambda]
    const double mp = pucci_plus(f, pc, x0, 1e-11);
    const double mm = pucci_minus(f, pc, x0, 1e-11);
    const double ju = fractional_laplacian(f, lin, x0, 1e-11);
    CHECK(mm <= ju + 1e-10);
    CHECK(ju <= mp + 1e-10);
  }
}

TEST_CASE("the 2-sigma measure variant") {
  const auto g = SpaceGrid::make(2.0, 129, {FarFieldKind::zero, 0.0});
  const auto f = sample(g, [](double x) { return std::exp(-2.0 * x * x); });
  // converges for sigma < 1
  const PucciConfig ok{ExtremalConstants::make(1.0, 1.0), 0.6, true};
  CHECK(std::isfinite(pucci_plus(f, ok, 0.0, 1e-9)));
  // diverges on C^2 fields for sigma >= 1: rejected, not silently wrong
  const PucciConfig bad{ExtremalConstants::make(1.0, 1.0), 1.2, true};
  CHECK_THROWS_AS(pucci_plus(f, bad, 0.0, 1e-9), DomainError);
}

TEST_CASE("temporal pucci operators") {
  const auto ord = FractionalOrder::make(0.5);
  const auto ec = ExtremalConstants::make(0.5, 2.0);
  const auto grid = TimeGrid::make(0.0, 1.0, 64);
  // constants vanish
  const auto cser = TimeSeries::sample(grid, [](double) { return 3.0; });
  CHECK(std::abs(pucci_time_plus(cser, ord, ec, 1.0, 1e-12)) <= 1e-14);
  CHECK(std::abs(pucci_time_minus(cser, ord, ec, 1.0, 1e-12)) <= 1e-14);
  // nondecreasing series: every difference is nonnegative, so
  // M+_T u = Lambda L u (and M-_T u = lambda L u)
  const auto ramp = TimeSeries::sample(grid, [](double t) { return t; });
  const double lu = l_operator(ramp, ord, 1.0, 1e-11);
  CHECK(pucci_time_plus(ramp, ord, ec, 1.0, 1e-11) ==
        doctest::Approx(2.0 * lu).epsilon(1e-9));
  CHECK(pucci_time_minus(ramp, ord, ec, 1.0, 1e-11) ==
        doctest::Approx(0.5 * lu).epsilon(1e-9));
  // duality on random series
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    TimeSeries u, un;
    u.grid = un.grid = grid;
    u.values.resize(65);
    un.values.resize(65);
    for (int k = 0; k <= 64; ++k) {
      u.values[k] = U(rng);
      un.values[k] = -u.values[k];
    }
    CHECK(pucci_time_plus(un, ord, ec, 1.0, 1e-11) ==
          doctest::Approx(-pucci_time_minus(u, ord, ec, 1.0, 1e-11))
              .epsilon(1e-12));
  }
}

TEST_CASE("calibration rejects out-of-range sigma") {
  CHECK_THROWS_AS(calibrated_normalization(0.05), DomainError);
  CHECK_THROWS_AS(calibrated_normalization(2.0), DomainError);
}
