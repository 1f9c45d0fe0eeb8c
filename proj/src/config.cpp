#include "fracbvp/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fracbvp {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for '" + key + "': " + v);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  double x = parse_real(key, v);
  if (x != std::floor(x)) throw ConfigError("config: '" + key + "' must be an integer");
  return static_cast<int>(x);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

FileConfig parse_config(std::istream& in) {
  FileConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("config: line " + std::to_string(lineno) + " has empty key or value");

    if (key == "k") c.k = parse_int(key, val);
    else if (key == "m") c.m = parse_real(key, val);
    else if (key == "alpha") c.alpha = parse_real(key, val);
    else if (key == "beta") c.beta = parse_real(key, val);
    else if (key == "a") c.a = parse_real(key, val);
    else if (key == "b") c.b = parse_real(key, val);
    else if (key == "phi_family") {
      if (val != "poly" && val != "eigenmode")
        throw ConfigError("config: phi_family must be 'poly' or 'eigenmode'");
      c.phi_family = val;
    } else if (key == "phi_coefficients") {
      c.phi_coefficients.clear();
      std::istringstream iss(val);
      std::string tok;
      while (iss >> tok) c.phi_coefficients.push_back(parse_real(key, tok));
      if (c.phi_coefficients.empty())
        throw ConfigError("config: phi_coefficients needs at least one value");
    } else if (key == "phi_index") c.phi_index = parse_int(key, val);
    else if (key == "modes") c.modes = parse_int(key, val);
    else if (key == "quad_order") c.quad_order = parse_int(key, val);
    else if (key == "grid_nx") c.grid_nx = parse_int(key, val);
    else if (key == "grid_ny") c.grid_ny = parse_int(key, val);
    else if (key == "resonance_tol") c.resonance_tol = parse_real(key, val);
    else if (key == "strict_interface_tol") c.strict_interface_tol = parse_real(key, val);
    else if (key == "strict_nonlocal_tol") c.strict_nonlocal_tol = parse_real(key, val);
    else if (key == "strict_pde_tol") c.strict_pde_tol = parse_real(key, val);
    else if (key == "strict_closure_tol") c.strict_closure_tol = parse_real(key, val);
    else throw ConfigError("config: unknown key '" + key + "' on line " + std::to_string(lineno));
  }
  return c;
}

FileConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const FileConfig& c) {
  std::ostringstream out;
  out << "k = " << c.k << '\n';
  out << "m = " << format_real(c.m) << '\n';
  out << "alpha = " << format_real(c.alpha) << '\n';
  out << "beta = " << format_real(c.beta) << '\n';
  out << "a = " << format_real(c.a) << '\n';
  out << "b = " << format_real(c.b) << '\n';
  out << "phi_family = " << c.phi_family << '\n';
  if (c.phi_family == "poly") {
    out << "phi_coefficients =";
    for (double v : c.phi_coefficients) out << ' ' << format_real(v);
    out << '\n';
  } else {
    out << "phi_index = " << c.phi_index << '\n';
  }
  out << "modes = " << c.modes << '\n';
  out << "quad_order = " << c.quad_order << '\n';
  out << "grid_nx = " << c.grid_nx << '\n';
  out << "grid_ny = " << c.grid_ny << '\n';
  out << "resonance_tol = " << format_real(c.resonance_tol) << '\n';
  out << "strict_interface_tol = " << format_real(c.strict_interface_tol) << '\n';
  out << "strict_nonlocal_tol = " << format_real(c.strict_nonlocal_tol) << '\n';
  out << "strict_pde_tol = " << format_real(c.strict_pde_tol) << '\n';
  out << "strict_closure_tol = " << format_real(c.strict_closure_tol) << '\n';
  return out.str();
}

ProblemConfig resolve_config(const FileConfig& c) {
  ProblemConfig p;
  p.spec = {c.k, c.m};
  p.temporal = {c.alpha, c.beta, c.a, c.b};
  if (c.phi_family == "poly") {
    p.phi.family = PhiSpec::Family::poly;
    p.phi.coefficients = c.phi_coefficients;
  } else {
    p.phi.family = PhiSpec::Family::eigenmode;
    p.phi.index = c.phi_index;
  }
  p.modes = c.modes;
  p.quad_order = c.quad_order;
  p.grid_nx = c.grid_nx;
  p.grid_ny = c.grid_ny;
  p.resonance_tol = c.resonance_tol;
  try {
    p.validate();
    if (p.quad_order < 8 || p.quad_order > 1024)
      throw std::domain_error("quad_order must lie in [8, 1024]");
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return p;
}

}  // namespace fracbvp
