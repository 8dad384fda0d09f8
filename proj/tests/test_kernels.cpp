#include <cmath>
#include <random>

#include <doctest.h>

#include "fracml/errors.hpp"
#include "fracml/gamma.hpp"
#include "fracml/kernels.hpp"
#include "fracml/mittag_leffler.hpp"

using namespace fracml;

TEST_CASE("fractional order constants recompute from alpha") {
  for (double a : {0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    const auto o = FractionalOrder::make(a);
    CHECK(o.b_alpha == 1.0 - a + a * reciprocal_gamma(a));
    CHECK(o.c == -a / (1.0 - a));
    CHECK(o.nu_alpha == o.b_alpha / (1.0 - a));
    CHECK(o.c_alpha == -o.c * o.nu_alpha);
    CHECK(o.b_alpha > 0.0);
    CHECK(o.c < 0.0);
    CHECK(o.nu_alpha > 0.0);
    CHECK(o.c_alpha > 0.0);
  }
  CHECK_THROWS_AS(FractionalOrder::make(0.0), DomainError);
  CHECK_THROWS_AS(FractionalOrder::make(1.0), DomainError);
  CHECK_THROWS_AS(FractionalOrder::make(-0.3), DomainError);
}

TEST_CASE("time kernel point values") {
  const auto ord = FractionalOrder::make(0.5);
  const auto caputo =
      TimeKernelSpec::make(ord, 4.0, TimeKernelKind::caputo_power_kernel);
  // (t-s)^{alpha-1}/Gamma(alpha) at gap 1 is 1/sqrt(pi)
  CHECK(caputo.eval(1.0, 0.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-14));

  const auto ml =
      TimeKernelSpec::make(ord, 4.0, TimeKernelKind::mittag_leffler_kernel);
  // gap 1, c = -1: E_{0.5,0.5}(-1), frozen from the quad-precision oracle
  CHECK(ml.eval(1.0, 0.0) ==
        doctest::Approx(0.13660600739194928).epsilon(1e-12));
}

TEST_CASE("kernel domain errors") {
  const auto spec = TimeKernelSpec::make(FractionalOrder::make(0.5), 2.0,
                                         TimeKernelKind::caputo_power_kernel);
  CHECK_THROWS_AS(spec.eval(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(spec.eval(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(spec.eval(3.0, 0.0), DomainError);  // beyond horizon
  CHECK_THROWS_AS(TimeKernelSpec::make(FractionalOrder::make(0.5), -1.0,
                                       TimeKernelKind::caputo_power_kernel),
                  DomainError);
}

TEST_CASE("difference kernels are translation invariant and symmetric") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(0.05, 1.5);
  for (auto kind : {TimeKernelKind::mittag_leffler_kernel,
                    TimeKernelKind::caputo_power_kernel}) {
    const auto spec = TimeKernelSpec::make(FractionalOrder::make(0.6), 8.0, kind);
    // spec example pair (t, s) = (0.7, 0.2); the two gap subtractions round
    // differently, so the comparison carries the symmetry tolerance
    CHECK(spec.eval(0.7, 0.7 - 0.2) ==
          doctest::Approx(spec.eval(0.7 + 0.2, 0.7)).epsilon(1e-14));
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 100; ++i) samples.emplace_back(U(rng), U(rng));
    CHECK(verify_time_symmetry(spec, samples));
    for (int i = 0; i < 50; ++i) {
      const double t = 1.0 + U(rng), s = U(rng) * 0.5, d = U(rng);
      CHECK(spec.eval(t + d, s + d) ==
            doctest::Approx(spec.eval(t, s)).epsilon(1e-14));
    }
  }
}

TEST_CASE("an asymmetric kernel is caught") {
  // T(t,s) = t (t-s)^{alpha-1}: explicit t dependence breaks the symmetry
  auto bad = [](double t, double s) { return t * std::pow(t - s, -0.5); };
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> U(0.1, 1.0);
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < 100; ++i) samples.emplace_back(1.0 + U(rng), U(rng));
  CHECK_FALSE(verify_time_symmetry_generic(bad, samples));
}

TEST_CASE("envelope report: caputo ratio is constant") {
  for (double a : {0.25, 0.5, 0.75}) {
    const auto spec = TimeKernelSpec::make(FractionalOrder::make(a), 4.0,
                                           TimeKernelKind::caputo_power_kernel);
    const auto rep = verify_time_kernel_envelope(spec, 64);
    CHECK(rep.holds);
    // rho(g) = Gamma(a+1)/Gamma(a) = a for every gap, so both constants are
    // a / (-c) = 1 - a
    CHECK(rep.lambda_emp == doctest::Approx(1.0 - a).epsilon(1e-12));
    CHECK(rep.Lambda_emp == doctest::Approx(1.0 - a).epsilon(1e-12));
    CHECK(rep.Lambda_emp - rep.lambda_emp <= 1e-12 * rep.Lambda_emp);
  }
}

TEST_CASE("envelope report: Mittag-Leffler kernel stays sandwiched") {
  for (double a : {0.25, 0.5, 0.75}) {
    const auto spec = TimeKernelSpec::make(FractionalOrder::make(a), 4.0,
                                           TimeKernelKind::mittag_leffler_kernel);
    const auto rep = verify_time_kernel_envelope(spec, 64);
    CHECK(rep.holds);
    CHECK(rep.lambda_emp > 0.0);
    CHECK(rep.Lambda_emp >= rep.lambda_emp);
    CHECK(std::isfinite(rep.Lambda_emp));
  }
}

TEST_CASE("envelope degenerate sample count") {
  for (auto kind : {TimeKernelKind::mittag_leffler_kernel,
                    TimeKernelKind::caputo_power_kernel}) {
    const auto spec = TimeKernelSpec::make(FractionalOrder::make(0.5), 4.0, kind);
    const auto rep = verify_time_kernel_envelope(spec, 2);
    CHECK(rep.grid.size() == 2);
    CHECK(rep.holds);
  }
  const auto spec = TimeKernelSpec::make(FractionalOrder::make(0.5), 4.0,
                                         TimeKernelKind::caputo_power_kernel);
  CHECK_THROWS_AS(verify_time_kernel_envelope(spec, 1), DomainError);
}

TEST_CASE("spatial kernel") {
  const auto spec = SpatialKernelSpec::make(1, 1.0, 0.5, 2.0, 1.0);
  CHECK(spec.eval1d(2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(spec.eval1d(0.37) == spec.eval1d(-0.37));
  CHECK_THROWS_AS(spec.eval1d(0.0), DomainError);
  // envelope sandwich with the kernel's own constants
  for (double h = 0.05; h < 5.0; h += 0.21) {
    const double v = spec.eval1d(h);
    CHECK(v >= 0.5 * std::pow(std::abs(h), -2.0) - 1e-15);
    CHECK(v <= 2.0 * std::pow(std::abs(h), -2.0) + 1e-15);
  }
  CHECK_THROWS_AS(SpatialKernelSpec::make(1, 0.05, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(SpatialKernelSpec::make(1, 2.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(SpatialKernelSpec::make(1, 1.0, 2.0, 1.0, 1.0), DomainError);
}

TEST_CASE("spatial kernel in n dimensions (definition keeps n general)") {
  const auto spec = SpatialKernelSpec::make(3, 1.5, 1.0, 1.0, 2.0);
  const double h[3] = {0.3, -0.4, 1.2};
  const double r = std::sqrt(0.09 + 0.16 + 1.44);
  CHECK(spec.eval(std::span<const double>(h, 3)) ==
        doctest::Approx(2.0 * std::pow(r, -4.5)).epsilon(1e-14));
  const double bad[2] = {1.0, 1.0};
  CHECK_THROWS_AS(spec.eval(std::span<const double>(bad, 2)), DomainError);
}
