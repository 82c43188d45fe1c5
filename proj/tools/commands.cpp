#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "spinbath/acceptance.hpp"
#include "spinbath/bath.hpp"
#include "spinbath/evolve.hpp"
#include "spinbath/fit.hpp"
#include "spinbath/pointer.hpp"
#include "spinbath/random.hpp"
#include "spinbath/report.hpp"

namespace spinbath::cli {
namespace {

std::string out_path(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return (std::filesystem::path(config.out_dir) / name).string();
}

void write_json(const RunConfig& config, const std::string& name, Json body) {
  Json report = config_to_json(config);
  for (auto& [key, value] : body.items()) report[key] = std::move(value);
  write_text_file(out_path(config, name), report.dump(2) + "\n");
}

}  // namespace

int run_coefficients(const RunConfig& config) {
  const SpectralFunctions spec = config.spectral();
  const BathCoefficients a_closed = coefficient_a(spec, AMethod::kClosedForm);
  const BathCoefficients a_num = coefficient_a(spec, AMethod::kNumerical);
  const BathCoefficients b_quad = coefficient_b(spec, BMethod::kQuadrature);
  const double horizon =
      config.t_max > 0.0 ? config.t_max : default_time_horizon(spec, config.quad_tol);
  const CorrelationIntegral ci = integrate_correlation(spec, horizon, config.quad_tol);

  const double residual_re = std::abs(ci.value.real() - 0.5 * a_closed.a);
  const double residual_im = std::abs(ci.value.imag() - b_quad.b);
  constexpr double kIdentityTol = 1e-3;
  const bool identity_pass = residual_re <= kIdentityTol && residual_im <= kIdentityTol;

  std::string csv = csv_row({"name", "value", "error"});
  auto row = [&csv](const std::string& name, double value, double error) {
    csv += csv_row({name, format_g17(value), format_g17(error)});
  };
  row("a_closed_form", a_closed.a, a_closed.a_error);
  row("a_numerical", a_num.a, a_num.a_error);
  row("b_quadrature", b_quad.b, b_quad.b_error);
  row("b_correlation_integral", ci.value.imag(), ci.tail_bound + ci.quad_error);
  row("correlation_integral_re", ci.value.real(), ci.quad_error);
  row("correlation_integral_tail_bound", ci.tail_bound, 0.0);
  row("identity_residual_re", residual_re, 0.0);
  row("identity_residual_im", residual_im, 0.0);
  csv += csv_row({"identity_check", identity_pass ? "PASS" : "FAIL", format_g17(kIdentityTol)});
  write_text_file(out_path(config, "coefficients.csv"), csv);

  Json body;
  body["t_max"] = horizon;
  body["a"] = {{"closed_form", a_closed.a},
               {"numerical", a_num.a},
               {"numerical_error", a_num.a_error}};
  body["b"] = {{"quadrature", b_quad.b},
               {"quadrature_error", b_quad.b_error},
               {"correlation_integral", ci.value.imag()},
               {"correlation_error", ci.tail_bound + ci.quad_error}};
  body["identity"] = {{"residual_re", residual_re},
                      {"residual_im", residual_im},
                      {"tolerance", kIdentityTol},
                      {"pass", identity_pass}};
  write_json(config, "coefficients.json", body);

  std::printf("a: closed %.10g | numerical %.10g (err %.2g)\n", a_closed.a, a_num.a,
              a_num.a_error);
  std::printf("b: quadrature %.10g (err %.2g) | correlation %.10g (err %.2g)\n",
              b_quad.b, b_quad.b_error, ci.value.imag(), ci.tail_bound + ci.quad_error);
  std::printf("identity residuals: re %.3g, im %.3g -> %s\n", residual_re, residual_im,
              identity_pass ? "PASS" : "FAIL");
  return identity_pass ? 0 : 2;
}

int run_decoherence_map(const RunConfig& config) {
  const SpinChainModel model = config.model();
  const GeneratorCoefficients coeffs = config.coefficients();
  const auto dim = static_cast<Eigen::Index>(model.dim());
  const double scale = static_cast<double>(1ULL << (2 * (model.n_sites() - 1)));

  std::string csv = csv_row(
      {"gap", "analytic_rate", "fitted_rate", "relative_deviation", "crossing_time"});
  double worst_dev = 0.0;
  // one column of the all-ones observable is enough to track entry (0, gap)
  const Eigen::VectorXcd ones_column = Eigen::VectorXcd::Ones(dim);
  Eigen::VectorXcd evolved(dim);
  for (Eigen::Index gap = 1; gap < dim; ++gap) {
    const double analytic =
        coeffs.gamma * static_cast<double>(gap) * static_cast<double>(gap) / scale;
    // eight samples spanning one decay time of this gap
    std::vector<double> ts, logs;
    for (int k = 0; k <= 7; ++k) {
      const double t = static_cast<double>(k) / (7.0 * analytic);
      const ColumnEvolver ev(model, coeffs, t);
      ev.apply(ones_column.data(), evolved.data(), static_cast<std::size_t>(gap));
      ts.push_back(t);
      logs.push_back(std::log(std::abs(evolved[0])));
    }
    const double fitted = -fit_line(ts, logs).slope;
    const double dev = std::abs(fitted - analytic) / analytic;
    worst_dev = std::max(worst_dev, dev);
    const double crossing =
        decoherence_time(0, static_cast<std::size_t>(gap), config.epsilon, model, coeffs);
    csv += csv_row({format_g17(static_cast<double>(gap)), format_g17(analytic),
                    format_g17(fitted), format_g17(dev), format_g17(crossing)});
  }
  write_text_file(out_path(config, "decoherence_map.csv"), csv);

  Json body;
  body["gamma"] = coeffs.gamma;
  body["epsilon"] = config.epsilon;
  body["max_relative_deviation"] = worst_dev;
  write_json(config, "decoherence_map.json", body);
  std::printf("decoherence map over %lld gaps, max fitted/analytic deviation %.3g\n",
              static_cast<long long>(dim - 1), worst_dev);
  return 0;
}

int run_theorem(const RunConfig& config) {
  const SpinChainModel model = config.model();
  const GeneratorCoefficients coeffs = config.coefficients();
  std::mt19937_64 rng(config.seed);
  const DensityMatrix lambda = random_density(model.dim(), rng);
  const Observable x = random_hermitian(model.dim(), rng);
  const std::vector<double> times = config.time_grid();

  LimitTheoremResult res;
  try {
    res = verify_limit_theorem(lambda, x, model, coeffs, config.theorem_tol, times);
  } catch (const HorizonError& err) {
    Json body;
    body["status"] = "horizon_exceeded";
    body["achieved_distance"] = err.achieved();
    body["tolerance"] = config.theorem_tol;
    write_json(config, "theorem.json", body);
    std::fprintf(stderr, "theorem: %s\n", err.what());
    return 2;
  }

  std::string csv = csv_row({"t", "distance", "envelope"});
  for (std::size_t k = 0; k < res.times.size(); ++k)
    csv += csv_row({format_g17(res.times[k]), format_g17(res.distances[k]),
                    format_g17(res.envelope[k])});
  write_text_file(out_path(config, "theorem.csv"), csv);

  // fitted decay slope over the late, strictly positive samples
  std::vector<double> ft, fl;
  for (std::size_t k = res.times.size() / 2; k < res.times.size(); ++k)
    if (res.distances[k] > 1e-300) {
      ft.push_back(res.times[k]);
      fl.push_back(std::log(res.distances[k]));
    }
  Json body;
  body["status"] = "ok";
  body["t_tol"] = res.t_tol;
  body["tolerance"] = config.theorem_tol;
  body["envelope_coefficient"] = res.envelope_coefficient;
  body["envelope_slope"] = -res.slowest_rate;
  if (ft.size() >= 2) body["fitted_slope"] = fit_line(ft, fl).slope;
  write_json(config, "theorem.json", body);
  std::printf("theorem: distance <= %.3g first reached at t = %.6g\n",
              config.theorem_tol, res.t_tol);
  return 0;
}

int run_pointer(const RunConfig& config) {
  std::vector<double> s_values = config.s_values;
  if (s_values.empty())
    s_values = {0.0, 0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0};
  const GeneratorCoefficients coeffs = config.coefficients();

  std::string csv = csv_row(
      {"n", "s", "subset_size", "achieved_trace", "abs_error", "bound", "invariant"});
  double worst_error = 0.0;
  bool all_invariant = true;
  for (int n = 1; n <= config.n_sites; ++n) {
    const SpinChainModel model(n, config.lambda, config.beta);
    for (double s : s_values) {
      const PointerProjection proj = projection_with_trace(s, model);
      const double achieved = proj.normalized_trace();
      const double error = std::abs(achieved - s);
      const double bound = std::ldexp(1.0, -n - 1);
      worst_error = std::max(worst_error, error - bound);
      bool invariant = true;
      for (double t : {0.7, 3.1})
        invariant = invariant &&
                    diagonal_invariant_under_evolution(proj.to_diagonal(), t, model, coeffs);
      all_invariant = all_invariant && invariant;
      csv += csv_row({std::to_string(n), format_g17(s),
                      std::to_string(proj.subset.size()), format_g17(achieved),
                      format_g17(error), format_g17(bound), invariant ? "1" : "0"});
    }
  }
  write_text_file(out_path(config, "pointer.csv"), csv);

  Json body;
  body["s_values"] = s_values;
  body["all_within_bound"] = worst_error <= 0.0;
  body["all_invariant"] = all_invariant;
  write_json(config, "pointer.json", body);
  std::printf("pointer sweep over n = 1..%d: bounds %s, invariance %s\n", config.n_sites,
              worst_error <= 0.0 ? "hold" : "VIOLATED",
              all_invariant ? "exact" : "VIOLATED");
  return 0;
}

int run_verify(const RunConfig& config) {
  const auto results = acceptance::run_acceptance({config.seed});
  Json criteria = Json::array();
  for (const auto& r : results) {
    std::printf("%s  %d  %s — %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.elapsed_seconds);
    Json item;
    item["id"] = r.id;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["detail"] = r.detail;
    criteria.push_back(item);
  }
  const bool ok = acceptance::all_passed(results);
  Json body;
  body["criteria"] = criteria;
  body["all_pass"] = ok;
  write_json(config, "verify.json", body);
  std::printf("%s\n", ok ? "all criteria passed" : "ACCEPTANCE FAILURE");
  return ok ? 0 : 3;
}

}  // namespace spinbath::cli
