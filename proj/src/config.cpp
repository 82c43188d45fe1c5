#include "spinbath/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace spinbath {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("value for " + key + " is not a number: '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError("trailing characters in value for " + key + ": '" + value + "'");
  return parsed;
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long parsed = 0;
  try {
    parsed = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("value for " + key + " is not an integer: '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError("trailing characters in value for " + key + ": '" + value + "'");
  return parsed;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(key, item));
  }
  return out;
}

}  // namespace

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "model.n_sites") n_sites = static_cast<int>(parse_int(key, value));
    else if (key == "model.lambda") lambda = parse_double(key, value);
    else if (key == "model.beta") beta = parse_double(key, value);
    else if (key == "bath.cutoff") cutoff = parse_family(value);
    else if (key == "bath.k0") k0 = parse_double(key, value);
    else if (key == "bath.p") p = parse_double(key, value);
    else if (key == "bath.t_max") t_max = parse_double(key, value);
    else if (key == "coeffs.source") {
      if (value == "closed_form") coeff_source = CoefficientSource::kClosedForm;
      else if (value == "bath_numerical") coeff_source = CoefficientSource::kBathNumerical;
      else throw ConfigError("coeffs.source must be closed_form or bath_numerical");
    } else if (key == "coeffs.b") b_override = parse_double(key, value);
    else if (key == "tol.quadrature") quad_tol = parse_double(key, value);
    else if (key == "tol.theorem") theorem_tol = parse_double(key, value);
    else if (key == "ode.step") ode_step = parse_double(key, value);
    else if (key == "grid.t_start") t_start = parse_double(key, value);
    else if (key == "grid.t_end") t_end = parse_double(key, value);
    else if (key == "grid.points") grid_points = static_cast<int>(parse_int(key, value));
    else if (key == "grid.spacing") {
      if (value == "linear") log_spacing = false;
      else if (value == "log") log_spacing = true;
      else throw ConfigError("grid.spacing must be linear or log");
    } else if (key == "run.seed") seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "run.out_dir") out_dir = value;
    else if (key == "run.kernels") kernels = value;
    else if (key == "pointer.s") s_values = parse_list(key, value);
    else if (key == "map.epsilon") epsilon = parse_double(key, value);
    else throw ConfigError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (n_sites < 1) throw ConfigError("model.n_sites must be at least 1");
  if (n_sites > kMaxDenseSites)
    throw ConfigError("model.n_sites is limited to " + std::to_string(kMaxDenseSites));
  if (!(lambda > 0.0)) throw ConfigError("model.lambda must be positive");
  if (!(beta > 0.0)) throw ConfigError("model.beta must be positive");
  if (!(k0 > 0.0)) throw ConfigError("bath.k0 must be positive");
  if (cutoff == CutoffFamily::kAlgebraic && !(p > 2.0))
    throw ConfigError("bath.p must exceed 2 for the algebraic cutoff");
  if (t_max < 0.0) throw ConfigError("bath.t_max must be nonnegative (0 = auto)");
  if (!(quad_tol > 0.0)) throw ConfigError("tol.quadrature must be positive");
  if (!(theorem_tol > 0.0)) throw ConfigError("tol.theorem must be positive");
  if (!(ode_step > 0.0)) throw ConfigError("ode.step must be positive");
  if (grid_points < 1) throw ConfigError("grid.points must be at least 1");
  if (t_start < 0.0) throw ConfigError("grid.t_start must be nonnegative");
  if (t_end < t_start) throw ConfigError("grid.t_end must not precede grid.t_start");
  if (log_spacing && !(t_start > 0.0))
    throw ConfigError("log spacing needs grid.t_start > 0");
  if (kernels != "auto" && kernels != "scalar" && kernels != "avx2")
    throw ConfigError("run.kernels must be auto, scalar, or avx2");
  for (double s : s_values)
    if (!(s >= 0.0 && s <= 1.0)) throw ConfigError("pointer.s values must lie in [0, 1]");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ConfigError("map.epsilon must lie in (0, 1)");
}

GeneratorCoefficients RunConfig::coefficients() const {
  const SpinChainModel m = model();
  if (b_override.has_value()) return GeneratorCoefficients::closed_form(m, *b_override);
  if (coeff_source == CoefficientSource::kClosedForm)
    return GeneratorCoefficients::closed_form(m, 0.0);
  return GeneratorCoefficients::from_bath(m, spectral());
}

std::vector<double> RunConfig::time_grid() const {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(grid_points));
  if (grid_points == 1) {
    grid.push_back(t_start);
    return grid;
  }
  if (log_spacing) {
    const double ratio = std::log(t_end / t_start) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i)
      grid.push_back(t_start * std::exp(ratio * i));
  } else {
    const double step = (t_end - t_start) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) grid.push_back(t_start + step * i);
  }
  grid.back() = t_end;
  return grid;
}

}  // namespace spinbath
