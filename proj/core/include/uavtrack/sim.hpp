#pragma once

#include <optional>

#include "uavtrack/config.hpp"
#include "uavtrack/geometry.hpp"
#include "uavtrack/rng.hpp"

namespace uavtrack {

struct PlatformState {
  Vec2 position = Vec2::Zero();  // m
  double heading = 0.0;          // rad, wrapped to [-pi, pi]
  double forward_speed = 0.0;    // m/s, constant over an episode
  double rot_speed = 0.0;        // rad/s, current commanded rate
};

struct SensorSpec {
  double fov_opening = 1.4;     // alpha, rad
  double sigma_range = 40.0;    // m
  double sigma_bearing = 0.005; // rad
  BearingConvention convention = BearingConvention::kBoresightZero;
};

struct Measurement {
  double range = 0.0;    // m
  double bearing = 0.0;  // rad, relative to observer heading
  int step_index = 0;
};

struct WorldState {
  PlatformState observer;
  PlatformState target;
  int step = 0;
  int steps_since_measurement = 0;
  Rng rng;
};

struct InitSpec {
  double r_init_min = 500.0;
  double r_init_max = 2000.0;
  double fov_opening = 1.4;
  double d_max = 5000.0;
  double v_observer = 50.0;
  double v_target = 20.0;
  BearingConvention convention = BearingConvention::kBoresightZero;
};

// Advance one platform by step_time seconds: straight move along the current
// heading, then turn. Total function; heading stays wrapped.
PlatformState step_platform(const PlatformState& state, double step_time);

struct RelativePolar {
  double distance = 0.0;
  double bearing = 0.0;
  bool degenerate = false;  // coincident positions; bearing defined as 0
};

// Distance and body-frame bearing of a point as seen from a platform.
// Boresight is bearing 0 and a positive bearing is removed by a positive
// turn rate.
RelativePolar relative_polar(const PlatformState& from, const Vec2& to_position);

// Same geometry under an explicit convention (kPaperLiteral reproduces the
// published observer-minus-target equations).
RelativePolar relative_polar(const PlatformState& from, const Vec2& to_position,
                             BearingConvention convention);

// Range-bearing sensor with FOV gating on the true (pre-noise) bearing.
// Registers a measurement iff |true bearing| < alpha/2, resetting
// steps_since_measurement; otherwise increments it.
std::optional<Measurement> sense(WorldState& world, const SensorSpec& spec);

// Observer at the origin heading 0; target at uniform range in
// [r_init_min, r_init_max], uniform bearing inside the FOV, uniform heading.
// Identical seeds give identical worlds. Throws ConfigError if
// r_init_max >= d_max.
WorldState reset(std::uint64_t seed, const InitSpec& init);

inline InitSpec init_spec_from(const EnvConfig& cfg) {
  return {cfg.r_init_min, cfg.r_init_max, cfg.alpha,      cfg.d_max,
          cfg.v_observer, cfg.v_target,   cfg.bearing_convention};
}

inline SensorSpec sensor_spec_from(const EnvConfig& cfg) {
  return {cfg.alpha, cfg.sigma_d, cfg.sigma_theta, cfg.bearing_convention};
}

}  // namespace uavtrack
