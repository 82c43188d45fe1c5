// spinbath CLI — dephasing dynamics of a spin chain coupled to a thermal
// phonon bath. Subcommands: coefficients, decoherence-map, theorem, pointer,
// verify. Flags override config-file values, which override defaults.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "spinbath/kernels/kernels.hpp"
#include "spinbath/types.hpp"

namespace {

using spinbath::RunConfig;

struct FlagValues {
  std::optional<std::string> config_path;
  std::optional<int> n_sites;
  std::optional<double> lambda, beta, k0, p, t_max, b;
  std::optional<std::string> cutoff, source, kernels, out_dir, spacing;
  std::optional<double> tol, theorem_tol, ode_step, t_start, t_end, epsilon;
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  std::vector<double> s_values;
};

RunConfig resolve(const FlagValues& flags) {
  RunConfig config;
  if (flags.config_path) config.load_file(*flags.config_path);
  if (flags.n_sites) config.n_sites = *flags.n_sites;
  if (flags.lambda) config.lambda = *flags.lambda;
  if (flags.beta) config.beta = *flags.beta;
  if (flags.cutoff) config.cutoff = spinbath::parse_family(*flags.cutoff);
  if (flags.k0) config.k0 = *flags.k0;
  if (flags.p) config.p = *flags.p;
  if (flags.t_max) config.t_max = *flags.t_max;
  if (flags.b) config.b_override = *flags.b;
  if (flags.source) {
    if (*flags.source == "closed_form")
      config.coeff_source = spinbath::CoefficientSource::kClosedForm;
    else if (*flags.source == "bath_numerical")
      config.coeff_source = spinbath::CoefficientSource::kBathNumerical;
    else
      throw spinbath::ConfigError("--coeff-source must be closed_form or bath_numerical");
  }
  if (flags.tol) config.quad_tol = *flags.tol;
  if (flags.theorem_tol) config.theorem_tol = *flags.theorem_tol;
  if (flags.ode_step) config.ode_step = *flags.ode_step;
  if (flags.t_start) config.t_start = *flags.t_start;
  if (flags.t_end) config.t_end = *flags.t_end;
  if (flags.points) config.grid_points = *flags.points;
  if (flags.spacing) {
    if (*flags.spacing == "linear") config.log_spacing = false;
    else if (*flags.spacing == "log") config.log_spacing = true;
    else throw spinbath::ConfigError("--spacing must be linear or log");
  }
  if (flags.seed) config.seed = *flags.seed;
  if (flags.out_dir) config.out_dir = *flags.out_dir;
  if (flags.kernels) config.kernels = *flags.kernels;
  if (!flags.s_values.empty()) config.s_values = flags.s_values;
  if (flags.epsilon) config.epsilon = *flags.epsilon;
  config.validate();
  return config;
}

void apply_kernel_choice(const RunConfig& config) {
  using spinbath::kernels::Backend;
  if (config.kernels == "scalar")
    spinbath::kernels::set_backend(Backend::kScalar);
  else if (config.kernels == "avx2")
    spinbath::kernels::set_backend(Backend::kAvx2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinbath — dephasing of a spin chain in a thermal phonon bath"};
  app.require_subcommand(1);

  FlagValues flags;
  app.add_option("--config", flags.config_path, "config file (key = value lines)");
  app.add_option("--out", flags.out_dir, "output directory (default ./out)");
  app.add_option("--seed", flags.seed, "seed for random states and observables");
  app.add_option("--n-sites", flags.n_sites, "number of spin sites (1..12)");
  app.add_option("--lambda", flags.lambda, "coupling constant lambda > 0");
  app.add_option("--beta", flags.beta, "inverse temperature beta > 0");
  app.add_option("--cutoff", flags.cutoff, "cutoff family: gaussian|exponential|algebraic");
  app.add_option("--k0", flags.k0, "cutoff scale k0 > 0");
  app.add_option("--p", flags.p, "algebraic cutoff exponent p > 2");
  app.add_option("--tol", flags.tol, "quadrature tolerance");
  app.add_option("--theorem-tol", flags.theorem_tol, "limit-theorem distance tolerance");
  app.add_option("--ode-step", flags.ode_step, "fixed RK4 step");
  app.add_option("--b", flags.b, "override the Hamiltonian coefficient b (0 allowed)");
  app.add_option("--coeff-source", flags.source, "closed_form|bath_numerical");
  app.add_option("--t-max", flags.t_max, "horizon for the correlation time integral");
  app.add_option("--t-start", flags.t_start, "time grid start");
  app.add_option("--t-end", flags.t_end, "time grid end");
  app.add_option("--points", flags.points, "time grid size");
  app.add_option("--spacing", flags.spacing, "time grid spacing: linear|log");
  app.add_option("--kernels", flags.kernels, "kernel backend: auto|scalar|avx2");
  app.add_option("--s", flags.s_values, "target traces for the pointer sweep");
  app.add_option("--epsilon", flags.epsilon, "crossing threshold for decoherence times");

  auto* cmd_coefficients =
      app.add_subcommand("coefficients", "bath coefficients a, b by every route");
  auto* cmd_map =
      app.add_subcommand("decoherence-map", "per-gap dephasing rates and crossing times");
  auto* cmd_theorem =
      app.add_subcommand("theorem", "distance to the pointer limit over time");
  auto* cmd_pointer =
      app.add_subcommand("pointer", "projections with prescribed normalized trace");
  auto* cmd_verify = app.add_subcommand("verify", "run the full acceptance suite");
  for (auto* sub : {cmd_coefficients, cmd_map, cmd_theorem, cmd_pointer, cmd_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const RunConfig config = resolve(flags);
    apply_kernel_choice(config);
    if (cmd_coefficients->parsed()) return spinbath::cli::run_coefficients(config);
    if (cmd_map->parsed()) return spinbath::cli::run_decoherence_map(config);
    if (cmd_theorem->parsed()) return spinbath::cli::run_theorem(config);
    if (cmd_pointer->parsed()) return spinbath::cli::run_pointer(config);
    if (cmd_verify->parsed()) return spinbath::cli::run_verify(config);
    std::fprintf(stderr, "no subcommand selected\n");
    return 1;
  } catch (const spinbath::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return 1;
  } catch (const spinbath::QuadratureError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const spinbath::TailBoundError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const spinbath::HorizonError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
