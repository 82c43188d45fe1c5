// config.hpp — run configuration: defaults, config-file ingestion, and
// validation. Flags (handled by the CLI) override file values, which
// override defaults.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinbath/cutoff.hpp"
#include "spinbath/generator.hpp"
#include "spinbath/model.hpp"
#include "spinbath/spectral.hpp"

namespace spinbath {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // model
  int n_sites = 4;
  double lambda = 1.0;
  double beta = 1.0;
  // bath
  CutoffFamily cutoff = CutoffFamily::kGaussian;
  double k0 = 1.0;
  double p = 3.0;
  double t_max = 0.0;  // 0 = automatic horizon
  // generator coefficients
  CoefficientSource coeff_source = CoefficientSource::kBathNumerical;
  std::optional<double> b_override;  // forces source = closed_form
  // tolerances
  double quad_tol = 1e-6;
  double theorem_tol = 1e-6;
  double ode_step = 1e-3;
  // time grid (default horizon comfortably past the n = 4 slowest mode)
  double t_start = 0.0;
  double t_end = 400.0;
  int grid_points = 101;
  bool log_spacing = false;
  // run control
  std::uint64_t seed = 12345;
  std::string out_dir = "./out";
  std::string kernels = "auto";  // auto | scalar | avx2
  std::vector<double> s_values;  // pointer sweep; empty = default set
  double epsilon = 0.36787944117144233;  // 1/e crossing threshold

  // Read `key = value` lines (dotted section names, '#' comments) into this
  // config. Unknown keys and malformed values raise ConfigError.
  void load_file(const std::string& path);

  // Throws ConfigError when any invariant fails.
  void validate() const;

  SpinChainModel model() const { return SpinChainModel(n_sites, lambda, beta); }
  CutoffFunction cutoff_function() const { return CutoffFunction::make(cutoff, k0, p); }
  SpectralFunctions spectral() const { return SpectralFunctions(beta, cutoff_function()); }
  GeneratorCoefficients coefficients() const;
  std::vector<double> time_grid() const;
};

}  // namespace spinbath
