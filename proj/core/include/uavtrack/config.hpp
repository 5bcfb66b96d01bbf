#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace uavtrack {

// How bearings are measured. BoresightZero is the working convention: the
// bearing of a point dead ahead of a platform is 0 and a positive bearing
// means a positive turn rate steers toward it. PaperLiteral reproduces the
// published equations verbatim (observer-minus-target difference vector,
// standard atan2) for fidelity experiments; under it the sensor effectively
// faces backwards.
enum class BearingConvention { kBoresightZero, kPaperLiteral };

// Full environment parameterization. Defaults are the evaluation setup.
struct EnvConfig {
  // Sensor.
  double alpha = 1.4;          // FOV opening, rad
  double sigma_d = 40.0;       // range noise std, m
  double sigma_theta = 0.005;  // bearing noise std, rad

  // Observation shaping.
  double k = 1.05;    // decay base for time-since-measurement
  double s_max = 50;  // entropy normalizer
  double d_max = 5000.0;

  // Episode clock.
  double t_max = 1200.0;  // s (20 min)
  double tau = 0.5;       // simulation frequency, Hz; one step = 1/tau s
  double gamma = 0.99;    // discount (training only)

  // Platforms.
  double omega_min_observer = -0.25;
  double omega_max_observer = 0.25;
  double v_observer = 50.0;
  double omega_min_target = -0.75;
  double omega_max_target = 0.75;
  double v_target = 20.0;

  // Baseline controller gains.
  double k_observer = 1.0;
  double k_target = 0.2;

  // Tracker (module-level decisions, not fixed by the evaluation setup).
  double sigma_a = 5.0;        // process noise intensity, m/s^2
  double init_vel_std = 30.0;  // track-birth velocity std, m/s

  // Initial conditions.
  double r_init_min = 500.0;
  double r_init_max = 2000.0;

  BearingConvention bearing_convention = BearingConvention::kBoresightZero;

  double step_time() const { return 1.0 / tau; }
  int max_steps() const { return static_cast<int>(std::llround(t_max * tau)); }

  void validate() const;  // throws ConfigError

  // Canonical flat-table form; parse(serialize(c)) == c.
  std::string serialize() const;
  // 64-bit content hash of the canonical form.
  std::uint64_t hash() const;

  // Apply key = value overrides on top of *this. Unknown keys throw.
  void apply(const std::map<std::string, std::string>& table);

  static EnvConfig from_file(const std::filesystem::path& path);
};

// key = value lines, '#' comments. Throws ConfigError on malformed lines.
std::map<std::string, std::string> parse_flat_table(const std::string& text);

// FNV-1a over raw bytes; used for config hashes and artifact digests.
std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace uavtrack
