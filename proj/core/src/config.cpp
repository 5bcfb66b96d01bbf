#include "uavtrack/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "uavtrack/errors.hpp"

namespace uavtrack {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' has non-numeric value '" + v +
                      "'");
  }
}

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

void EnvConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
  if (!(alpha > 0.0 && alpha <= 2.0 * M_PI)) fail("alpha must be in (0, 2pi]");
  if (!(sigma_d > 0.0)) fail("sigma_d must be > 0");
  if (!(sigma_theta > 0.0)) fail("sigma_theta must be > 0");
  if (!(k > 1.0)) fail("k must be > 1");
  if (!(s_max > 0.0)) fail("s_max must be > 0");
  if (!(d_max > 0.0)) fail("d_max must be > 0");
  if (!(t_max > 0.0)) fail("t_max must be > 0");
  if (!(tau > 0.0)) fail("tau must be > 0");
  if (!(gamma > 0.0 && gamma <= 1.0)) fail("gamma must be in (0, 1]");
  if (!(omega_min_observer < omega_max_observer))
    fail("observer omega_min must be < omega_max");
  if (!(omega_min_target < omega_max_target))
    fail("target omega_min must be < omega_max");
  if (!(v_observer > 0.0 && v_target > 0.0)) fail("speeds must be > 0");
  if (!(sigma_a > 0.0)) fail("sigma_a must be > 0");
  if (!(init_vel_std > 0.0)) fail("init_vel_std must be > 0");
  if (!(r_init_min > 0.0 && r_init_min <= r_init_max))
    fail("init range must satisfy 0 < r_init_min <= r_init_max");
  if (r_init_max >= d_max)
    fail("r_init_max must be < d_max (episodes would terminate immediately)");
}

std::string EnvConfig::serialize() const {
  std::ostringstream out;
  auto put = [&](const char* key, double v) {
    out << key << " = " << fmt_double(v) << "\n";
  };
  put("alpha", alpha);
  put("sigma_d", sigma_d);
  put("sigma_theta", sigma_theta);
  put("k", k);
  put("s_max", s_max);
  put("d_max", d_max);
  put("t_max", t_max);
  put("tau", tau);
  put("gamma", gamma);
  put("omega_min_observer", omega_min_observer);
  put("omega_max_observer", omega_max_observer);
  put("v_observer", v_observer);
  put("omega_min_target", omega_min_target);
  put("omega_max_target", omega_max_target);
  put("v_target", v_target);
  put("k_observer", k_observer);
  put("k_target", k_target);
  put("sigma_a", sigma_a);
  put("init_vel_std", init_vel_std);
  put("r_init_min", r_init_min);
  put("r_init_max", r_init_max);
  out << "bearing_convention = "
      << (bearing_convention == BearingConvention::kBoresightZero
              ? "boresight_zero"
              : "paper_literal")
      << "\n";
  return out.str();
}

std::uint64_t EnvConfig::hash() const {
  std::string s = serialize();
  return fnv1a(s.data(), s.size());
}

void EnvConfig::apply(const std::map<std::string, std::string>& table) {
  for (const auto& [key, value] : table) {
    if (key == "alpha") alpha = parse_double(key, value);
    else if (key == "sigma_d") sigma_d = parse_double(key, value);
    else if (key == "sigma_theta") sigma_theta = parse_double(key, value);
    else if (key == "k") k = parse_double(key, value);
    else if (key == "s_max") s_max = parse_double(key, value);
    else if (key == "d_max") d_max = parse_double(key, value);
    else if (key == "t_max") t_max = parse_double(key, value);
    else if (key == "tau") tau = parse_double(key, value);
    else if (key == "gamma") gamma = parse_double(key, value);
    else if (key == "omega_min_observer") omega_min_observer = parse_double(key, value);
    else if (key == "omega_max_observer") omega_max_observer = parse_double(key, value);
    else if (key == "v_observer") v_observer = parse_double(key, value);
    else if (key == "omega_min_target") omega_min_target = parse_double(key, value);
    else if (key == "omega_max_target") omega_max_target = parse_double(key, value);
    else if (key == "v_target") v_target = parse_double(key, value);
    else if (key == "k_observer") k_observer = parse_double(key, value);
    else if (key == "k_target") k_target = parse_double(key, value);
    else if (key == "sigma_a") sigma_a = parse_double(key, value);
    else if (key == "init_vel_std") init_vel_std = parse_double(key, value);
    else if (key == "r_init_min") r_init_min = parse_double(key, value);
    else if (key == "r_init_max") r_init_max = parse_double(key, value);
    else if (key == "bearing_convention") {
      if (value == "boresight_zero")
        bearing_convention = BearingConvention::kBoresightZero;
      else if (value == "paper_literal")
        bearing_convention = BearingConvention::kPaperLiteral;
      else
        throw ConfigError("config: bearing_convention must be "
                          "'boresight_zero' or 'paper_literal', got '" +
                          value + "'");
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
}

EnvConfig EnvConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  EnvConfig cfg;
  cfg.apply(parse_flat_table(buf.str()));
  cfg.validate();
  return cfg;
}

std::map<std::string, std::string> parse_flat_table(const std::string& text) {
  std::map<std::string, std::string> table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " is not 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " has empty key or value");
    table[key] = value;
  }
  return table;
}

}  // namespace uavtrack
