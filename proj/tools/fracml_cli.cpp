#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "fracml/acceptance_suite.hpp"
#include "fracml/diagnostics.hpp"
#include "fracml/errors.hpp"
#include "fracml/fode.hpp"
#include "fracml/interp.hpp"
#include "fracml/io.hpp"
#include "fracml/kernels.hpp"
#include "fracml/mittag_leffler.hpp"
#include "fracml/nonlocal_space.hpp"
#include "fracml/parabolic_solver.hpp"

using nlohmann::json;
using namespace fracml;

namespace {

struct GlobalOpts {
  int threads = 0;
  std::string log_level = "info";
  unsigned long long seed = 12345;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

ScalarFn parse_h_spec(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) {
    const double v = std::stod(spec.substr(6));
    return [v](double) { return v; };
  }
  if (spec.rfind("indicator:", 0) == 0) {
    const std::string body = spec.substr(10);
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("indicator spec needs two bounds: indicator:a,b");
    }
    const double lo = std::stod(body.substr(0, comma));
    const double hi = std::stod(body.substr(comma + 1));
    return [lo, hi](double t) { return (t >= lo && t <= hi) ? 1.0 : 0.0; };
  }
  if (spec.rfind("csv:", 0) == 0) {
    TimeSeries s = read_time_series_csv(spec.substr(4));
    std::vector<double> xs(s.values.size());
    for (int k = 0; k < (int)xs.size(); ++k) xs[k] = s.grid.node(k);
    auto interp = std::make_shared<PchipInterpolant>(std::move(xs), s.values);
    return [interp](double t) { return (*interp)(t); };
  }
  throw ConfigError("unknown h spec (use const:V, indicator:a,b or csv:path): " +
                    spec);
}

// profile specs shared by pde-solve's g and u0
std::function<double(double)> parse_profile(const json& spec,
                                            const std::string& where) {
  if (!spec.is_object()) throw ConfigError(where + " must be an object");
  const std::string kind = spec.value("kind", "");
  if (kind == "zero") {
    reject_unknown_keys(spec, {"kind"}, where);
    return [](double) { return 0.0; };
  }
  if (kind == "constant") {
    reject_unknown_keys(spec, {"kind", "value"}, where);
    const double v = spec.at("value").get<double>();
    return [v](double) { return v; };
  }
  if (kind == "bump") {
    reject_unknown_keys(spec, {"kind", "amplitude", "width", "center"}, where);
    const double a = spec.value("amplitude", 1.0);
    const double w = spec.value("width", 1.0);
    const double c = spec.value("center", 0.0);
    return [a, w, c](double x) { return a * std::exp(-w * (x - c) * (x - c)); };
  }
  if (kind == "dip") {
    reject_unknown_keys(spec, {"kind", "depth", "width", "level"}, where);
    const double d = spec.value("depth", 2.0);
    const double w = spec.value("width", 0.5);
    const double lvl = spec.value("level", 1.0);
    return [d, w, lvl](double x) {
      const double ax = std::abs(x);
      double s = 0.0;
      if (ax <= w) {
        s = 1.0;
      } else if (ax < w + 0.3) {
        s = 0.5 * (1.0 + std::cos(M_PI * (ax - w) / 0.3));
      }
      return lvl - d * s;
    };
  }
  throw ConfigError("unknown profile kind in " + where + ": '" + kind + "'");
}

int cmd_ml_eval(double alpha, double beta, double z, const std::string& grid,
                const std::string& csv) {
  const MLParams p{alpha, beta};
  if (grid.empty()) {
    const MLEval e = mittag_leffler_detailed(p, z);
    std::cout << fmt17(e.value) << "\n";
    return 0;
  }
  std::istringstream gs(grid);
  std::string a, b, c;
  if (!std::getline(gs, a, ':') || !std::getline(gs, b, ':') ||
      !std::getline(gs, c, ':')) {
    throw ConfigError("--grid expects start:stop:n");
  }
  const double start = std::stod(a), stop = std::stod(b);
  const int n = std::stoi(c);
  if (n < 2) throw ConfigError("--grid needs n >= 2");
  std::ostringstream out;
  out << "z,value,method,est_error\n";
  for (int i = 0; i < n; ++i) {
    const double zi = start + (stop - start) * i / (n - 1);
    const MLEval e = mittag_leffler_detailed(p, zi);
    out << fmt17(zi) << "," << fmt17(e.value) << "," << e.method << ","
        << fmt17(e.est_error) << "\n";
  }
  if (csv.empty()) {
    std::cout << out.str();
  } else {
    atomic_write_file(csv, out.str());
  }
  return 0;
}

int cmd_kernel_verify(const GlobalOpts& g, const std::string& kind, double alpha,
                      double horizon, int samples, const std::string& json_path) {
  const TimeKernelKind kk = kind == "ml" ? TimeKernelKind::mittag_leffler_kernel
                            : kind == "caputo"
                                ? TimeKernelKind::caputo_power_kernel
                                : throw ConfigError("--kind must be ml|caputo");
  const auto spec = TimeKernelSpec::make(FractionalOrder::make(alpha), horizon, kk);
  const auto rep = verify_time_kernel_envelope(spec, samples);
  std::mt19937_64 rng(g.seed);
  std::uniform_real_distribution<double> U(0.01 * horizon, 0.45 * horizon);
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < 100; ++i) pairs.emplace_back(U(rng), U(rng));
  const bool sym = verify_time_symmetry(spec, pairs);
  json out;
  out["kind"] = kind;
  out["alpha"] = alpha;
  out["horizon"] = horizon;
  out["lambda_emp"] = rep.lambda_emp;
  out["Lambda_emp"] = rep.Lambda_emp;
  out["holds"] = rep.holds;
  out["symmetry_ok"] = sym;
  out["grid"] = rep.grid;
  out["ratio"] = rep.ratio;
  const std::string text = out.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else {
    atomic_write_file(json_path, text);
  }
  return rep.holds && sym ? 0 : 2;
}

int cmd_ab_apply(const std::string& form, double alpha, const std::string& input,
                 const std::string& output, double quad_tol, double a_flag,
                 double b_flag, int kappa_flag) {
  const TimeSeries in = read_time_series_csv(input);
  // optional grid flags cross-check the input header
  if (!std::isnan(a_flag) && std::abs(a_flag - in.grid.a) > 1e-12) {
    throw ConfigError("--a does not match the input series header");
  }
  if (!std::isnan(b_flag) && std::abs(b_flag - in.grid.b) > 1e-12) {
    throw ConfigError("--b does not match the input series header");
  }
  if (kappa_flag >= 0 && kappa_flag != in.grid.kappa) {
    throw ConfigError("--kappa does not match the input series header");
  }
  const auto ord = FractionalOrder::make(alpha);
  std::vector<double> xs(in.values.size());
  for (int k = 0; k < (int)xs.size(); ++k) xs[k] = in.grid.node(k);
  auto interp = std::make_shared<PchipInterpolant>(xs, in.values);
  const ScalarFn u = [interp](double t) { return (*interp)(t); };
  const ScalarFn up = [interp](double t) { return interp->derivative(t); };

  TimeSeries out;
  out.grid = in.grid;
  out.values.assign(in.grid.kappa + 1, 0.0);
  for (int k = 0; k <= in.grid.kappa; ++k) {
    const double t = in.grid.node(k);
    if (form == "deriv") {
      out.values[k] = k == 0 ? 0.0 : ab_derivative(up, ord, in.grid.a, t, quad_tol);
    } else if (form == "caputo") {
      out.values[k] =
          k == 0 ? 0.0 : ab_caputo_form(u, ord, in.grid.a, t, quad_tol);
    } else if (form == "history") {
      out.values[k] = k == 0 ? 0.0 : l_operator(u, ord, in.grid.a, t, quad_tol);
    } else if (form == "integral") {
      out.values[k] = ab_integral(u, ord, in.grid.a, t, quad_tol);
    } else if (form == "discrete") {
      out.values[k] = discrete_l(in, ord, k);
    } else {
      throw ConfigError("--form must be deriv|caputo|history|integral|discrete");
    }
  }
  atomic_write_file(output, format_time_series_csv(out));
  return 0;
}

int cmd_fode_solve(double alpha, double c0, double c1, const std::string& hspec,
                   double u0, double start, double end, int kappa,
                   const std::string& out_path, const std::string& report_path) {
  const auto ord = FractionalOrder::make(alpha);
  const FodeProblem p{ord, c0, c1, parse_h_spec(hspec), u0, start, end};
  const auto grid = TimeGrid::make(start, end, kappa);
  json rep;
  TimeSeries solution;
  if (c1 == 0.0) {
    solution = solve_c1_zero(p, grid);
    rep["solver"] = "direct_integral";
  } else {
    const auto gr = solve_general(p, grid);
    solution = gr.solution;
    rep["solver"] = gr.chosen;
    rep["companion_residual_max"] = gr.companion_residual_max;
    rep["fallback_residual_max"] = gr.fallback_residual_max;
  }
  const auto r = fode_residual(solution, p, 1e-9);
  double rmax = 0.0;
  for (size_t k = 1; k < r.size(); ++k) rmax = std::max(rmax, std::abs(r[k]));
  rep["residual_max"] = rmax;
  rep["kappa"] = kappa;
  atomic_write_file(out_path, format_time_series_csv(solution));
  if (!report_path.empty()) atomic_write_file(report_path, rep.dump(2) + "\n");
  return 0;
}

int cmd_space_apply(const std::string& op, double sigma, double lambda,
                    double Lambda, const std::string& field_path,
                    const std::string& out_path, const std::string& measure_exp,
                    double normalization, double quad_tol) {
  const SampledField f = read_xfield_csv(field_path);
  std::vector<double> vals(f.grid().n_points);
  if (op == "lap") {
    const double C =
        normalization > 0.0 ? normalization : calibrated_normalization(sigma);
    const auto spec = SpatialKernelSpec::make(1, sigma, lambda, Lambda, C);
    for (int j = 0; j < f.grid().n_points; ++j) {
      vals[j] = fractional_laplacian(f, spec, f.grid().node(j), quad_tol);
    }
  } else if (op == "mplus" || op == "mminus") {
    PucciConfig pc{ExtremalConstants::make(lambda, Lambda), sigma,
                   measure_exp == "2sigma"};
    for (int j = 0; j < f.grid().n_points; ++j) {
      vals[j] = op == "mplus" ? pucci_plus(f, pc, f.grid().node(j), quad_tol)
                              : pucci_minus(f, pc, f.grid().node(j), quad_tol);
    }
  } else {
    throw ConfigError("--op must be lap|mplus|mminus");
  }
  SpaceGrid og = f.grid();
  const SampledField out(og, std::move(vals));
  atomic_write_file(out_path, format_xfield_csv(out));
  return 0;
}

int cmd_pde_solve(const GlobalOpts& g, const std::string& config_path,
                  const std::string& out_path, const std::string& diag_path) {
  const json cfg = json::parse(read_text_file(config_path));
  reject_unknown_keys(cfg,
                      {"alpha", "sigma", "lambda", "Lambda", "a", "b", "kappa",
                       "L", "N", "g", "u0", "far_field", "exterior_value",
                       "linear_solver_tol", "normalization", "max_history"},
                      "run config");
  const double alpha = cfg.at("alpha").get<double>();
  const double sigma = cfg.at("sigma").get<double>();
  const double lambda = cfg.value("lambda", 1.0);
  const double Lambda = cfg.value("Lambda", 1.0);
  const auto tg = TimeGrid::make(cfg.at("a").get<double>(),
                                 cfg.at("b").get<double>(),
                                 cfg.at("kappa").get<int>());
  const std::string ff = cfg.value("far_field", "zero");
  if (ff != "zero") {
    throw ConfigError("solver far_field supports 'zero' (with exterior_value)");
  }
  const auto xg = SpaceGrid::make(cfg.at("L").get<double>(),
                                  cfg.at("N").get<int>(),
                                  {FarFieldKind::zero, 0.0});
  SolverConfig scfg;
  scfg.order = FractionalOrder::make(alpha);
  const double C = cfg.value("normalization", 0.0) > 0.0
                       ? cfg["normalization"].get<double>()
                       : calibrated_normalization(sigma);
  scfg.spatial = SpatialKernelSpec::make(1, sigma, lambda, Lambda, C);
  const auto gfun = parse_profile(cfg.at("g"), "g");
  scfg.g = [gfun](double, double x) { return gfun(x); };
  scfg.exterior_value = cfg.value("exterior_value", 0.0);
  scfg.linear_solver_tol = cfg.value("linear_solver_tol", 1e-12);
  scfg.max_history = cfg.value("max_history", 0);
  scfg.parallel = g.threads != 1;

  const auto u0fun = parse_profile(cfg.at("u0"), "u0");
  std::vector<double> u0(xg.n_points);
  for (int j = 0; j < xg.n_points; ++j) u0[j] = u0fun(xg.node(j));

  const ParabolicStepper stepper(scfg, tg, xg);
  const SolveResult res = stepper.solve(u0);
  atomic_write_file(out_path, format_field_csv(res.field));
  if (!diag_path.empty()) {
    json d;
    d["config"] = cfg;
    json steps = json::array();
    for (const auto& s : res.diagnostics) {
      steps.push_back({{"W", s.W}, {"iterations", s.iterations},
                       {"residual", s.residual}});
    }
    d["steps"] = steps;
    atomic_write_file(diag_path, d.dump(2) + "\n");
  }
  return 0;
}

int cmd_diagnose(const std::string& field_path, const std::string& mode,
                 const std::string& params_path, const std::string& out_path) {
  const json params = params_path.empty()
                          ? json::object()
                          : json::parse(read_text_file(params_path));
  json out;
  if (mode == "osc") {
    reject_unknown_keys(params, {"r", "depth", "x0", "t0", "sigma", "alpha"},
                        "osc params");
    const SpaceTimeField f = read_field_csv(field_path);
    const auto rep = oscillation_decay(
        f, params.value("r", 0.5), params.value("depth", 3),
        params.value("x0", 0.0), params.value("t0", f.tgrid.b),
        params.at("sigma").get<double>(), params.at("alpha").get<double>());
    out["radii"] = rep.radii;
    out["oscillations"] = rep.oscillations;
    out["fitted_kappa"] = rep.kappa_defined ? json(rep.fitted_kappa) : json();
    std::vector<bool> bounds(rep.bound_ok.begin(), rep.bound_ok.end());
    out["bound_ok"] = bounds;
  } else if (mode == "holder") {
    reject_unknown_keys(params, {"kappa", "alpha", "sigma", "region"},
                        "holder params");
    const SpaceTimeField f = read_field_csv(field_path);
    Region reg{-1e300, 1e300, -1e300, 1e300};
    if (params.contains("region")) {
      const json& r = params["region"];
      reject_unknown_keys(r, {"x_min", "x_max", "t_min", "t_max"}, "region");
      reg = {r.value("x_min", -1e300), r.value("x_max", 1e300),
             r.value("t_min", -1e300), r.value("t_max", 1e300)};
    }
    out["seminorm"] =
        holder_seminorm(f, params.at("kappa").get<double>(),
                        params.at("alpha").get<double>(),
                        params.at("sigma").get<double>(), reg);
  } else if (mode == "point-estimate") {
    reject_unknown_keys(
        params, {"alpha", "sigma", "kappa", "n_points", "mu", "eps0"},
        "point-estimate params");
    PointEstimateConfig pc{FractionalOrder::make(params.at("alpha").get<double>())};
    pc.sigma = params.value("sigma", 1.0);
    pc.kappa = params.value("kappa", 96);
    pc.n_points = params.value("n_points", 129);
    pc.eps0 = params.value("eps0", 1e-3);
    const auto rep = point_estimate_scenario(pc, params.at("mu").get<double>());
    out["theta_emp"] = rep.theta_emp;
    out["mu_emp"] = rep.mu_emp;
    out["passed"] = rep.passed;
  } else {
    throw ConfigError("--mode must be osc|holder|point-estimate");
  }
  const std::string text = out.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    atomic_write_file(out_path, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracml: Mittag-Leffler fractional time calculus toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (0 = auto)");
  app.add_option("--log-level", g.log_level, "quiet|info");
  app.add_option("--seed", g.seed, "seed for randomized checks");

  // ml-eval
  double ml_alpha = 1.0, ml_beta = 1.0, ml_z = 0.0;
  std::string ml_grid, ml_csv;
  auto* ml = app.add_subcommand("ml-eval", "evaluate E_{alpha,beta}(z)");
  ml->add_option("--alpha", ml_alpha)->required();
  ml->add_option("--beta", ml_beta)->required();
  ml->add_option("--z", ml_z);
  ml->add_option("--grid", ml_grid, "start:stop:n");
  ml->add_option("--csv", ml_csv, "CSV output path");

  // kernel-verify
  std::string kv_kind = "ml", kv_json;
  double kv_alpha = 0.5, kv_horizon = 4.0;
  int kv_samples = 64;
  auto* kv = app.add_subcommand("kernel-verify",
                                "envelope and symmetry report for time kernels");
  kv->add_option("--kind", kv_kind, "ml|caputo")->required();
  kv->add_option("--alpha", kv_alpha)->required();
  kv->add_option("--horizon", kv_horizon);
  kv->add_option("--samples", kv_samples);
  kv->add_option("--json", kv_json, "JSON report path");

  // ab-apply
  std::string ab_form, ab_in, ab_out;
  double ab_alpha = 0.5, ab_tol = 1e-9;
  double ab_a = std::nan(""), ab_b = std::nan("");
  int ab_kappa = -1;
  auto* ab = app.add_subcommand("ab-apply", "apply a fractional time operator");
  ab->add_option("--form", ab_form, "deriv|caputo|history|integral|discrete")
      ->required();
  ab->add_option("--alpha", ab_alpha)->required();
  ab->add_option("--a", ab_a, "grid start (validated against the input)");
  ab->add_option("--b", ab_b, "grid end (validated against the input)");
  ab->add_option("--kappa", ab_kappa, "step count (validated against the input)");
  ab->add_option("--input", ab_in, "input series CSV")->required();
  ab->add_option("--output", ab_out, "output series CSV")->required();
  ab->add_option("--quad-tol", ab_tol);

  // fode-solve
  double fo_alpha = 0.5, fo_c0 = 1.0, fo_c1 = 0.0, fo_u0 = 0.0, fo_start = 0.0,
         fo_end = 1.0;
  int fo_kappa = 256;
  std::string fo_h = "const:1", fo_out, fo_report;
  auto* fo = app.add_subcommand("fode-solve", "solve L u = -c1 u + c0 h");
  fo->set_help_flag("--help", "print help");  // frees --h for the forcing spec
  fo->add_option("--alpha", fo_alpha)->required();
  fo->add_option("--c0", fo_c0);
  fo->add_option("--c1", fo_c1);
  fo->add_option("--h", fo_h, "const:V | indicator:a,b | csv:path");
  fo->add_option("--u0", fo_u0);
  fo->add_option("--start", fo_start);
  fo->add_option("--end", fo_end);
  fo->add_option("--kappa", fo_kappa);
  fo->add_option("--out", fo_out)->required();
  fo->add_option("--residual-report", fo_report);

  // space-apply
  std::string sp_op, sp_field, sp_out, sp_measure = "sigma";
  double sp_sigma = 1.0, sp_lambda = 1.0, sp_Lambda = 1.0, sp_norm = 0.0,
         sp_tol = 1e-9;
  auto* sp = app.add_subcommand("space-apply", "apply a spatial nonlocal operator");
  sp->add_option("--op", sp_op, "lap|mplus|mminus")->required();
  sp->add_option("--sigma", sp_sigma)->required();
  sp->add_option("--lambda", sp_lambda);
  sp->add_option("--Lambda", sp_Lambda);
  sp->add_option("--field", sp_field, "input xfield CSV")->required();
  sp->add_option("--out", sp_out)->required();
  sp->add_option("--measure-exp", sp_measure, "sigma|2sigma");
  sp->add_option("--normalization", sp_norm, "C(1,sigma); 0 = calibrate");
  sp->add_option("--quad-tol", sp_tol);

  // pde-solve
  std::string pd_cfg, pd_out, pd_diag;
  auto* pd = app.add_subcommand("pde-solve", "implicit solver for L u - J u = g");
  pd->add_option("--config", pd_cfg, "run.json")->required();
  pd->add_option("--out", pd_out, "field CSV")->required();
  pd->add_option("--diag", pd_diag, "diagnostics JSON");

  // diagnose
  std::string dg_field, dg_mode, dg_params, dg_out;
  auto* dg = app.add_subcommand("diagnose", "regularity diagnostics");
  dg->add_option("--field", dg_field, "field CSV (osc/holder modes)");
  dg->add_option("--mode", dg_mode, "osc|holder|point-estimate")->required();
  dg->add_option("--params", dg_params, "params JSON");
  dg->add_option("--out", dg_out, "report JSON");

  // acceptance
  std::string ac_json;
  auto* ac = app.add_subcommand("acceptance", "run the acceptance suite");
  ac->add_option("--json", ac_json, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err{{"error", "validation"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }

#ifdef _OPENMP
  if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

  try {
    if (*ml) return cmd_ml_eval(ml_alpha, ml_beta, ml_z, ml_grid, ml_csv);
    if (*kv) return cmd_kernel_verify(g, kv_kind, kv_alpha, kv_horizon,
                                      kv_samples, kv_json);
    if (*ab) return cmd_ab_apply(ab_form, ab_alpha, ab_in, ab_out, ab_tol,
                                 ab_a, ab_b, ab_kappa);
    if (*fo) return cmd_fode_solve(fo_alpha, fo_c0, fo_c1, fo_h, fo_u0, fo_start,
                                   fo_end, fo_kappa, fo_out, fo_report);
    if (*sp) return cmd_space_apply(sp_op, sp_sigma, sp_lambda, sp_Lambda,
                                    sp_field, sp_out, sp_measure, sp_norm,
                                    sp_tol);
    if (*pd) return cmd_pde_solve(g, pd_cfg, pd_out, pd_diag);
    if (*dg) return cmd_diagnose(dg_field, dg_mode, dg_params, dg_out);
    if (*ac) {
      std::ostringstream log;
      const auto results = run_acceptance_suite(log);
      std::cout << log.str();
      int failures = 0;
      for (const auto& r : results) {
        if (!r.passed) ++failures;
      }
      if (!ac_json.empty()) {
        json out = json::array();
        for (const auto& r : results) {
          out.push_back({{"index", r.index}, {"name", r.name},
                         {"passed", r.passed}, {"detail", r.detail}});
        }
        atomic_write_file(ac_json, out.dump(2) + "\n");
      }
      std::cout << (failures == 0 ? "all criteria passed\n"
                                  : std::to_string(failures) + " failed\n");
      return failures == 0 ? 0 : 2;
    }
  } catch (const DomainError& e) {
    std::cerr << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << json{{"error", "config"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << json{{"error", "data"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << json{{"error", "overflow"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const AccuracyError& e) {
    std::cerr << json{{"error", "accuracy"}, {"message", e.what()},
                      {"achieved", e.achieved}}
                     .dump()
              << "\n";
    return 2;
  } catch (const SolverError& e) {
    std::cerr << json{{"error", "solver"}, {"message", e.what()},
                      {"residual", e.residual}}
                     .dump()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump()
              << "\n";
    return 2;
  }
  return 1;
}
