#include "fracml/acceptance_suite.hpp"

#include <cmath>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>

#include "fracml/ab_operators.hpp"
#include "fracml/diagnostics.hpp"
#include "fracml/fode.hpp"
#include "fracml/kernels.hpp"
#include "fracml/mittag_leffler.hpp"
#include "fracml/nonlocal_space.hpp"
#include "fracml/parabolic_solver.hpp"

namespace fracml {

namespace {

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << v;
  return ss.str();
}

// 1. special functions
CriterionResult c1_special_functions() {
  double worst_exp = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = -30.0 + 60.0 * i / 999.0;
    const double got = ml_one_param(1.0, z);
    worst_exp = std::max(worst_exp, std::abs(got - std::exp(z)) / std::exp(z));
  }
  double worst_cos = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = 10.0 * i / 100.0;
    const double got = mittag_leffler({2.0, 1.0}, -x * x);
    worst_cos = std::max(worst_cos, std::abs(got - std::cos(x)) /
                                        std::max(1.0, std::abs(std::cos(x))));
  }
  double worst_cross = 0.0;
  for (double a : {0.25, 0.5, 0.75, 0.9}) {
    for (double b : {1.0, a}) {
      const double xs = ml_series_radius(a);
      const double xa = ml_asymptotic_radius(a);
      const auto s = ml_internal::eval_series(a, b, -xs);
      const auto i1 = ml_internal::eval_integral_rep(a, b, -xs);
      const auto i2 = ml_internal::eval_integral_rep(a, b, -xa);
      const auto as = ml_internal::eval_asymptotic(a, b, -xa);
      worst_cross = std::max(
          worst_cross, std::abs(s.value - i1.value) / std::abs(s.value));
      worst_cross = std::max(
          worst_cross, std::abs(i2.value - as.value) / std::abs(i2.value));
    }
  }
  const bool ok = worst_exp <= 1e-12 && worst_cos <= 1e-10 && worst_cross <= 1e-10;
  return {1, "special functions (exp/cos checks, crossover agreement)", ok,
          "exp rel " + num(worst_exp) + ", cos " + num(worst_cos) +
              ", crossover " + num(worst_cross)};
}

// 2. operator identities: annihilation + inversion
CriterionResult c2_operator_identities() {
  double worst_const = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    const auto ord = FractionalOrder::make(a);
    const ScalarFn cu = [](double) { return 4.2; };
    const ScalarFn zero = [](double) { return 0.0; };
    worst_const = std::max(worst_const,
                           std::abs(ab_derivative(zero, ord, 0.0, 1.0, 1e-12)));
    worst_const =
        std::max(worst_const, std::abs(ab_caputo_form(cu, ord, 0.0, 1.0, 1e-12)));
    worst_const =
        std::max(worst_const, std::abs(l_operator(cu, ord, 0.0, 1.0, 1e-12)));
    const auto grid = TimeGrid::make(0.0, 1.0, 32);
    const auto ser = TimeSeries::sample(grid, cu);
    worst_const = std::max(worst_const, std::abs(discrete_l(ser, ord, 32)));
    // temporal Pucci pair on constants
    const auto ec = ExtremalConstants::make(0.5, 2.0);
    worst_const = std::max(
        worst_const, std::abs(pucci_time_plus(ser, ord, ec, 1.0, 1e-12)));
    worst_const = std::max(
        worst_const, std::abs(pucci_time_minus(ser, ord, ec, 1.0, 1e-12)));
  }
  // spatial Pucci pair on constants (constant far field keeps delta == 0)
  {
    const auto xg = SpaceGrid::make(1.0, 33, {FarFieldKind::constant, 0.0});
    const SampledField f(xg, std::vector<double>(33, 4.2));
    const PucciConfig pc{ExtremalConstants::make(0.5, 2.0), 1.0, false};
    worst_const = std::max(worst_const, std::abs(pucci_plus(f, pc, 0.25, 1e-12)));
    worst_const = std::max(worst_const, std::abs(pucci_minus(f, pc, 0.25, 1e-12)));
  }

  double worst_inv = 0.0;
  struct Case {
    ScalarFn u, up;
    double u0;
  };
  const Case cases[3] = {
      {[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); },
       0.0},
      {[](double t) { return t; }, [](double) { return 1.0; }, 0.0},
      {[](double t) { return t * t; }, [](double t) { return 2.0 * t; }, 0.0}};
  for (double a : {0.25, 0.5, 0.75}) {
    const auto ord = FractionalOrder::make(a);
    for (const auto& cs : cases) {
      const ScalarFn inner = [&](double y) {
        return y <= 1e-13 ? 0.0 : ab_derivative(cs.up, ord, 0.0, y, 1e-10);
      };
      const double got = ab_integral(inner, ord, 0.0, 1.0, 1e-8);
      worst_inv = std::max(worst_inv, std::abs(got - (cs.u(1.0) - cs.u0)));
    }
  }
  const bool ok = worst_const <= 1e-14 && worst_inv <= 1e-6;
  return {2, "operator identities (annihilation, integral inversion)", ok,
          "const " + num(worst_const) + ", inversion " + num(worst_inv)};
}

// 3. representation equivalence
CriterionResult c3_representation_equivalence() {
  double worst = 0.0;
  struct Case {
    ScalarFn u, up;
  };
  const Case cases[3] = {
      {[](double t) { return t < 0 ? 0.0 : t; }, [](double) { return 1.0; }},
      {[](double t) { return t < 0 ? 0.0 : std::sin(t); },
       [](double t) { return std::cos(t); }},
      {[](double t) { return t < 0 ? 0.0 : t * t; },
       [](double t) { return 2.0 * t; }}};
  for (double a : {0.25, 0.5, 0.75}) {
    const auto ord = FractionalOrder::make(a);
    for (const auto& cs : cases) {
      const double d1 = ab_derivative(cs.up, ord, 0.0, 1.0, 1e-9);
      const double d2 = ab_caputo_form(cs.u, ord, 0.0, 1.0, 1e-9);
      const double d3 = l_operator(cs.u, ord, 0.0, 1.0, 1e-9);
      worst = std::max({worst, std::abs(d1 - d2), std::abs(d1 - d3),
                        std::abs(d2 - d3)});
    }
  }
  return {3, "representation equivalence (velocity/Caputo/history forms)",
          worst <= 1e-6, "max pairwise gap " + num(worst)};
}

// 4. kernel class: symmetry + envelope
CriterionResult c4_kernel_class() {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> U(0.05, 1.6);
  bool sym_ok = true;
  for (auto kind :
       {TimeKernelKind::mittag_leffler_kernel, TimeKernelKind::caputo_power_kernel}) {
    const auto spec =
        TimeKernelSpec::make(FractionalOrder::make(0.6), 8.0, kind);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 100; ++i) {
      const double t = U(rng);
      const double s = U(rng);
      samples.emplace_back(t, s);
    }
    sym_ok = sym_ok && verify_time_symmetry(spec, samples);
  }
  bool env_ok = true;
  std::string envs;
  for (double a : {0.25, 0.5, 0.75}) {
    const auto spec = TimeKernelSpec::make(
        FractionalOrder::make(a), 4.0, TimeKernelKind::mittag_leffler_kernel);
    const auto rep = verify_time_kernel_envelope(spec, 64);
    env_ok = env_ok && rep.holds && rep.lambda_emp > 0.0 &&
             rep.Lambda_emp >= rep.lambda_emp;
    envs += " a=" + num(a) + ":[" + num(rep.lambda_emp) + "," +
            num(rep.Lambda_emp) + "]";
  }
  return {4, "kernel class (symmetry, envelope constants)", sym_ok && env_ok,
          std::string(sym_ok ? "symmetry ok," : "symmetry FAILED,") + envs};
}

// 5. discrete consistency
CriterionResult c5_discrete_consistency() {
  const auto ord = FractionalOrder::make(0.5);
  const double cont =
      l_operator([](double t) { return t < 0 ? 0.0 : t; }, ord, 0.0, 1.0, 1e-10);
  double gaps[3];
  int idx = 0;
  for (int kap : {128, 256, 512}) {
    const auto grid = TimeGrid::make(0.0, 1.0, kap);
    const auto ser = TimeSeries::sample(grid, [](double t) { return t; });
    const double disc = discrete_l(ser, ord, kap) +
                        discrete_l_history_closure(ser, ord, kap);
    gaps[idx++] = std::abs(disc - cont);
  }
  const double r1 = gaps[1] / gaps[0];
  const double r2 = gaps[2] / gaps[1];
  const bool ok = r1 >= 0.375 && r1 <= 0.625 && r2 >= 0.375 && r2 <= 0.625;
  return {5, "discrete consistency (gap halves when tau halves)", ok,
          "gaps " + num(gaps[0]) + "/" + num(gaps[1]) + "/" + num(gaps[2]) +
              ", ratios " + num(r1) + ", " + num(r2)};
}

// 6. FODE residuals, arbitration, corollary floor
CriterionResult c6_fode() {
  const auto ord = FractionalOrder::make(0.5);
  const auto grid = TimeGrid::make(0.0, 1.0, 256);
  auto max_tail = [](const std::vector<double>& v) {
    double m = 0.0;
    for (size_t i = 1; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
  };
  const FodeProblem p0{ord, 1.0, 0.0, [](double t) { return t; }, 0.0, 0.0, 1.0};
  const double r0 = max_tail(fode_residual(solve_c1_zero(p0, grid), p0, 1e-9));

  const FodeProblem pg{ord, 1.0, 1.0, [](double t) { return t; }, 0.0, 0.0, 1.0};
  const auto rep = solve_general(pg, grid, 1e-9);
  const bool arb_ok =
      rep.companion_residual_max <= 1e-4 || rep.fallback_residual_max <= 1e-4;

  bool floor_ok = true;
  const auto cgrid = TimeGrid::make(-2.0, 0.0, 256);
  for (double a : {0.25, 0.5, 0.75}) {
    for (double c1 : {0.5, 1.0, 2.0}) {
      const auto o = FractionalOrder::make(a);
      const FodeProblem pc{
          o, 1.0, c1,
          [](double t) { return (t >= -2.0 && t <= -1.0) ? 1.0 : 0.0; }, 0.0,
          -2.0, 0.0};
      const auto g = solve_general_closed(pc, cgrid);
      double gmin = 1e300;
      for (int k = 0; k <= 256; ++k) {
        if (cgrid.node(k) >= -1.0) gmin = std::min(gmin, g.values[k]);
      }
      if (gmin < corollary_floor(o, 1.0, c1, 1.0)) floor_ok = false;
    }
  }
  const bool ok = r0 <= 1e-4 && arb_ok && floor_ok;
  return {6, "FODE (residuals, closed-form arbitration, corollary floor)", ok,
          "c1=0 residual " + num(r0) + "; companion " +
              num(rep.companion_residual_max) + " vs fallback " +
              num(rep.fallback_residual_max) + " (chose " + rep.chosen +
              "); floor sweep " + (floor_ok ? "ok" : "FAILED")};
}

// 7. barrier bound
CriterionResult c7_barrier() {
  const auto ord = FractionalOrder::make(0.5);
  double max_l = -1e300;
  bool within_all = true;
  double d_emp = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t1 = -5.0 * i / 49.0;
    const auto rep = barrier_l_bound(ord, 0.25, 1.0, t1, 1e-9);
    max_l = std::max(max_l, rep.value);
    within_all = within_all && rep.within;
    d_emp = rep.d_emp;
  }
  const bool ok = within_all && max_l <= 1e-10;
  return {7, "barrier: -d_emp <= L rho(t1) <= 0 on 50 samples", ok,
          "max L " + num(max_l) + ", d_emp " + num(d_emp)};
}

// 8. discrete integration by parts
CriterionResult c8_ibp() {
  const auto ord = FractionalOrder::make(0.5);
  const auto grid = TimeGrid::make(0.0, 1.0, 64);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  int fails = 0;
  for (int trial = 0; trial < 100; ++trial) {
    TimeSeries u;
    u.grid = grid;
    u.values.assign(65, 0.0);
    for (int k = 1; k <= 64; ++k) u.values[k] = U(rng);
    if (!discrete_ibp_check(u, ord, 64).holds) ++fails;
  }
  return {8, "discrete integration-by-parts on 100 random series", fails == 0,
          std::to_string(fails) + " failures"};
}

// 9. solver: steady state, manufactured solution, comparison, determinism
CriterionResult c9_solver() {
  const auto ord = FractionalOrder::make(0.75);
  const double sigma = 1.25, L = 2.0, T = 0.5;
  const double C = calibrated_normalization(sigma);
  const auto bump = [](double x) { return std::exp(-4.0 * x * x); };

  // constant steady state
  double steady_dev = 0.0;
  {
    const auto tg = TimeGrid::make(0.0, 1.0, 32);
    const auto xg = SpaceGrid::make(1.0, 65, {FarFieldKind::zero, 0.0});
    SolverConfig cfg;
    cfg.order = FractionalOrder::make(0.5);
    cfg.spatial = SpatialKernelSpec::make(1, 1.0, 1.0, 1.0,
                                          calibrated_normalization(1.0));
    cfg.g = [](double, double) { return 0.0; };
    cfg.exterior_value = 3.0;
    const ParabolicStepper st(cfg, tg, xg);
    const auto res = st.solve(std::vector<double>(65, 3.0));
    for (int k = 0; k <= 32; ++k) {
      for (int j = 0; j < 65; ++j) {
        steady_dev = std::max(steady_dev, std::abs(res.field.at(k, j) - 3.0));
      }
    }
  }

  // manufactured solution u* = t bump(x), forcing from the continuous operators
  double errs[2];
  for (int lev = 0; lev < 2; ++lev) {
    const int kap = lev ? 256 : 128;
    const int N = lev ? 257 : 129;
    const auto tg = TimeGrid::make(0.0, T, kap);
    const auto xg = SpaceGrid::make(L, N, {FarFieldKind::zero, 0.0});
    std::vector<double> lramp(kap + 1, 0.0);
    for (int k = 1; k <= kap; ++k) {
      lramp[k] = l_operator([](double s) { return s < 0 ? 0.0 : s; }, ord, 0.0,
                            tg.node(k), 1e-10);
    }
    const auto spec = SpatialKernelSpec::make(1, sigma, 1.0, 1.0, C);
    std::vector<double> bv(N);
    for (int j = 0; j < N; ++j) bv[j] = bump(xg.node(j));
    const SampledField bf(xg, bv);
    std::vector<double> jb(N);
    for (int j = 0; j < N; ++j) {
      jb[j] = fractional_laplacian(bf, spec, xg.node(j), 1e-10);
    }
    SolverConfig cfg;
    cfg.order = ord;
    cfg.spatial = spec;
    cfg.g = [&, kap, N](double t, double x) {
      const int k = (int)std::llround((t - tg.a) / tg.tau);
      const int j = (int)std::llround((x + L) / xg.spacing);
      return lramp[k] * bv[j] - t * jb[j];
    };
    const ParabolicStepper st(cfg, tg, xg);
    const auto res = st.solve(std::vector<double>(N, 0.0));
    double e = 0.0;
    for (int k = 0; k <= kap; ++k) {
      for (int j = 0; j < N; ++j) {
        e = std::max(e, std::abs(res.field.at(k, j) - tg.node(k) * bv[j]));
      }
    }
    errs[lev] = e;
  }

  // comparison principle on 10 ordered pairs
  int viol = 0;
  {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const auto tg = TimeGrid::make(0.0, 0.4, 24);
    const auto xg = SpaceGrid::make(1.0, 49, {FarFieldKind::zero, 0.0});
    const auto spec = SpatialKernelSpec::make(1, 1.0, 1.0, 1.0,
                                              calibrated_normalization(1.0));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> u01(49), u02(49);
      const double gshift = 0.3 * U(rng);
      const double freq = 1.0 + 3.0 * U(rng);
      for (int j = 0; j < 49; ++j) {
        u01[j] = 0.5 * U(rng);
        u02[j] = u01[j] + 0.4 * U(rng);
      }
      SolverConfig c1;
      c1.order = FractionalOrder::make(0.5);
      c1.spatial = spec;
      c1.g = [freq](double t, double x) { return 0.2 * std::sin(freq * x) + 0.1 * t; };
      SolverConfig c2 = c1;
      c2.g = [freq, gshift](double t, double x) {
        return 0.2 * std::sin(freq * x) + 0.1 * t + gshift;
      };
      const ParabolicStepper s1(c1, tg, xg), s2(c2, tg, xg);
      const auto r1 = s1.solve(u01), r2 = s2.solve(u02);
      for (int k = 0; k <= 24; ++k) {
        for (int j = 0; j < 49; ++j) {
          if (r1.field.at(k, j) > r2.field.at(k, j) + 1e-10) ++viol;
        }
      }
    }
  }

  // bit-identical reruns (and the serial reference path agrees bitwise)
  bool bits_ok = true;
  {
    const auto tg = TimeGrid::make(0.0, 0.3, 16);
    const auto xg = SpaceGrid::make(1.0, 33, {FarFieldKind::zero, 0.0});
    SolverConfig cfg;
    cfg.order = FractionalOrder::make(0.6);
    cfg.spatial = SpatialKernelSpec::make(1, 1.2, 1.0, 1.0,
                                          calibrated_normalization(1.2));
    cfg.g = [](double t, double x) { return std::sin(x) * t; };
    std::vector<double> u0(33);
    for (int j = 0; j < 33; ++j) u0[j] = std::cos(xg.node(j));
    const ParabolicStepper st(cfg, tg, xg);
    const auto a = st.solve(u0);
    const auto b = st.solve(u0);
    SolverConfig scfg = cfg;
    scfg.parallel = false;
    const ParabolicStepper sts(scfg, tg, xg);
    const auto c = sts.solve(u0);
    bits_ok = std::memcmp(a.field.values.data(), b.field.values.data(),
                          a.field.values.size() * sizeof(double)) == 0 &&
              std::memcmp(a.field.values.data(), c.field.values.data(),
                          a.field.values.size() * sizeof(double)) == 0;
  }

  const bool ok = steady_dev <= 1e-12 && errs[0] <= 1e-3 && errs[1] < errs[0] &&
                  viol == 0 && bits_ok;
  return {9, "solver (steady state, manufactured solution, comparison, bits)",
          ok,
          "steady " + num(steady_dev) + "; MMS " + num(errs[0]) + " -> " +
              num(errs[1]) + "; comparison violations " + std::to_string(viol) +
              "; bit-identical " + (bits_ok ? "yes" : "NO")};
}

// 10. Pucci duality and collapse
CriterionResult c10_pucci() {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst_dual = 0.0;
  double worst_collapse = 0.0;
  const auto xg = SpaceGrid::make(2.0, 101, {FarFieldKind::zero, 0.0});
  const PucciConfig pc{ExtremalConstants::make(0.5, 2.0), 1.0, false};
  const PucciConfig pc1{ExtremalConstants::make(1.0, 1.0), 1.0, false};
  const auto lin = SpatialKernelSpec::make(1, 1.0, 1.0, 1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(101), vn(101);
    const double f1 = 1.0 + 2.0 * std::abs(U(rng));
    const double ph = U(rng);
    for (int j = 0; j < 101; ++j) {
      const double x = xg.node(j);
      v[j] = std::exp(-x * x) * std::sin(f1 * x + ph) + 0.3 * U(rng) * std::exp(-2 * x * x);
      vn[j] = -v[j];
    }
    const SampledField f(xg, v), fn(xg, vn);
    const double x0 = 0.8 * U(rng);
    worst_dual = std::max(worst_dual,
                          std::abs(pucci_plus(fn, pc, x0, 1e-11) +
                                   pucci_minus(f, pc, x0, 1e-11)));
    worst_collapse = std::max(
        worst_collapse, std::abs(pucci_plus(f, pc1, x0, 1e-11) -
                                 fractional_laplacian(f, lin, x0, 1e-11)));
  }
  // temporal variant
  double worst_dual_t = 0.0;
  const auto ord = FractionalOrder::make(0.5);
  const auto ec = ExtremalConstants::make(0.5, 2.0);
  const auto grid = TimeGrid::make(0.0, 1.0, 48);
  for (int trial = 0; trial < 50; ++trial) {
    TimeSeries u, un;
    u.grid = un.grid = grid;
    u.values.resize(49);
    un.values.resize(49);
    for (int k = 0; k <= 48; ++k) {
      u.values[k] = U(rng);
      un.values[k] = -u.values[k];
    }
    worst_dual_t = std::max(worst_dual_t,
                            std::abs(pucci_time_plus(un, ord, ec, 1.0, 1e-11) +
                                     pucci_time_minus(u, ord, ec, 1.0, 1e-11)));
  }
  const bool ok = worst_dual <= 1e-12 && worst_dual_t <= 1e-12 &&
                  worst_collapse <= 1e-8;
  return {10, "Pucci duality and lambda=Lambda collapse", ok,
          "space dual " + num(worst_dual) + ", time dual " + num(worst_dual_t) +
              ", collapse " + num(worst_collapse)};
}

// 11. regularity diagnostics
CriterionResult c11_diagnostics() {
  int osc_viol = 0;
  for (double a : {0.5, 0.75}) {
    for (double s : {1.0, 1.5}) {
      const auto tg = TimeGrid::make(0.0, 0.5, 256);
      const auto xg = SpaceGrid::make(2.0, 257, {FarFieldKind::zero, 0.0});
      SolverConfig cfg;
      cfg.order = FractionalOrder::make(a);
      cfg.spatial =
          SpatialKernelSpec::make(1, s, 1.0, 1.0, calibrated_normalization(s));
      cfg.g = [](double, double) { return 0.0; };
      const ParabolicStepper st(cfg, tg, xg);
      std::vector<double> u0(257);
      for (int j = 0; j < 257; ++j) {
        const double x = xg.node(j);
        u0[j] = std::exp(-6.0 * x * x);
      }
      const auto res = st.solve(u0);
      const auto rep = oscillation_decay(res.field, 0.7, 2, 0.0, 0.5, s, a);
      for (size_t k = 1; k < rep.oscillations.size(); ++k) {
        if (rep.oscillations[k] > rep.oscillations[k - 1] * (1.0 + 1e-12)) {
          ++osc_viol;
        }
      }
    }
  }

  // synthetic Hoelder-1/2 profile
  double kappa_fit = 0.0;
  {
    const auto tg = TimeGrid::make(-1.0, 0.0, 256);
    const auto xg = SpaceGrid::make(1.0, 513, {FarFieldKind::constant, 0.0});
    SpaceTimeField f = SpaceTimeField::make(tg, xg);
    for (int k = 0; k <= 256; ++k) {
      for (int j = 0; j < 513; ++j) {
        f.at(k, j) = std::sqrt(std::abs(xg.node(j)));
      }
    }
    const auto rep = oscillation_decay(f, 0.5, 4, 0.0, 0.0, 0.5, 0.8);
    kappa_fit = rep.fitted_kappa;
  }

  PointEstimateConfig pc{FractionalOrder::make(0.5)};
  pc.kappa = 96;
  pc.n_points = 129;
  const auto pe = point_estimate_scenario(pc, 0.5);

  const bool ok = osc_viol == 0 && kappa_fit >= 0.4 && kappa_fit <= 0.6 &&
                  pe.theta_emp > 0.0 && pe.passed;
  return {11, "regularity diagnostics (oscillation, Hoelder fit, point estimate)",
          ok,
          "osc violations " + std::to_string(osc_viol) + ", fitted kappa " +
              num(kappa_fit) + ", theta_emp " + num(pe.theta_emp) + " (mu_emp " +
              num(pe.mu_emp) + ")"};
}

// 12. alpha -> 1 uniformity probe
CriterionResult c12_alpha_uniformity() {
  const double sigma = 1.0, L = 2.0;
  const int N = 129, kap = 96;
  const auto tg = TimeGrid::make(-1.0, 0.0, kap);
  const auto xg = SpaceGrid::make(L, N, {FarFieldKind::zero, 0.0});
  const auto spec =
      SpatialKernelSpec::make(1, sigma, 1.0, 1.0, calibrated_normalization(sigma));
  double kfit = 0.0;
  std::vector<double> semis;
  std::string vals;
  for (double a : {0.7, 0.8, 0.9, 0.95}) {
    SolverConfig cfg;
    cfg.order = FractionalOrder::make(a);
    cfg.spatial = spec;
    cfg.g = [](double, double) { return 0.0; };
    const ParabolicStepper st(cfg, tg, xg);
    std::vector<double> u0(N);
    for (int j = 0; j < N; ++j) {
      const double x = xg.node(j);
      u0[j] = std::exp(-3.0 * x * x);
    }
    const auto res = st.solve(u0);
    if (semis.empty()) {
      const auto osc = oscillation_decay(res.field, 0.7, 2, 0.0, 0.0, sigma, a);
      kfit = std::min(1.0, std::max(0.1, osc.fitted_kappa));
    }
    const double s =
        holder_seminorm(res.field, kfit, a, sigma, {-1.0, 1.0, -1.0, 0.0});
    semis.push_back(s);
    vals += " " + num(s);
  }
  double lo = 1e300, hi = 0.0;
  for (double s : semis) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  const bool ok = hi <= 2.0 * lo;
  return {12, "alpha -> 1 uniformity (seminorm spread <= 2x)", ok,
          "kappa " + num(kfit) + ", seminorms" + vals + ", ratio " +
              num(hi / lo)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::ostream& log) {
  std::vector<std::function<CriterionResult()>> criteria = {
      c1_special_functions, c2_operator_identities, c3_representation_equivalence,
      c4_kernel_class,      c5_discrete_consistency, c6_fode,
      c7_barrier,           c8_ibp,                  c9_solver,
      c10_pucci,            c11_diagnostics,         c12_alpha_uniformity};
  std::vector<CriterionResult> results;
  for (auto& fn : criteria) {
    CriterionResult r = fn();
    log << (r.passed ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.name
        << " -- " << r.detail << "\n";
    log.flush();
    results.push_back(std::move(r));
  }
  return results;
}

int acceptance_main(std::ostream& log) {
  const auto results = run_acceptance_suite(log);
  int failures = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
  }
  log << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                        : "ACCEPTANCE: " + std::to_string(failures) +
                              " criterion(s) failed\n");
  return failures;
}

}  // namespace fracml
