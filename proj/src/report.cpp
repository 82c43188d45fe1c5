#include "spinbath/report.hpp"

#include <cstdio>
#include <fstream>

#include "spinbath/kernels/kernels.hpp"

namespace spinbath {

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  row += '\n';
  return row;
}

Json config_to_json(const RunConfig& config) {
  Json j;
  j["version"] = kVersion;
  j["kernels_active"] = kernels::backend_name(kernels::active_backend());
  Json c;
  c["model.n_sites"] = config.n_sites;
  c["model.lambda"] = config.lambda;
  c["model.beta"] = config.beta;
  c["bath.cutoff"] = family_name(config.cutoff);
  c["bath.k0"] = config.k0;
  c["bath.p"] = config.p;
  c["bath.t_max"] = config.t_max;
  c["coeffs.source"] = source_name(config.coeff_source);
  if (config.b_override.has_value()) c["coeffs.b"] = *config.b_override;
  c["tol.quadrature"] = config.quad_tol;
  c["tol.theorem"] = config.theorem_tol;
  c["ode.step"] = config.ode_step;
  c["grid.t_start"] = config.t_start;
  c["grid.t_end"] = config.t_end;
  c["grid.points"] = config.grid_points;
  c["grid.spacing"] = config.log_spacing ? "log" : "linear";
  c["run.seed"] = config.seed;
  c["run.out_dir"] = config.out_dir;
  c["run.kernels"] = config.kernels;
  c["pointer.s"] = config.s_values;
  c["map.epsilon"] = config.epsilon;
  j["config"] = c;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace spinbath
