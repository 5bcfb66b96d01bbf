#include "uavtrack/sim.hpp"

#include "uavtrack/errors.hpp"

namespace uavtrack {

PlatformState step_platform(const PlatformState& state, double step_time) {
  PlatformState next = state;
  next.position += step_time * state.forward_speed * heading_direction(state.heading);
  next.heading = wrap_angle(state.heading + step_time * state.rot_speed);
  return next;
}

RelativePolar relative_polar(const PlatformState& from, const Vec2& to_position) {
  return relative_polar(from, to_position, BearingConvention::kBoresightZero);
}

RelativePolar relative_polar(const PlatformState& from, const Vec2& to_position,
                             BearingConvention convention) {
  RelativePolar out;
  const Vec2 delta = to_position - from.position;
  out.distance = delta.norm();
  if (out.distance == 0.0) {
    out.degenerate = true;
    out.bearing = 0.0;
    return out;
  }
  if (convention == BearingConvention::kBoresightZero) {
    out.bearing = wrap_angle(vector_angle(delta) - from.heading);
  } else {
    // Published form: difference vector from the observed point back to the
    // platform, standard atan2.
    const Vec2 rev = -delta;
    out.bearing = wrap_angle(std::atan2(rev.y(), rev.x()) - from.heading);
  }
  return out;
}

std::optional<Measurement> sense(WorldState& world, const SensorSpec& spec) {
  const RelativePolar truth =
      relative_polar(world.observer, world.target.position, spec.convention);
  if (std::abs(truth.bearing) >= 0.5 * spec.fov_opening) {
    ++world.steps_since_measurement;
    return std::nullopt;
  }
  Measurement m;
  m.range = truth.distance + spec.sigma_range * world.rng.gaussian();
  m.bearing = truth.bearing + spec.sigma_bearing * world.rng.gaussian();
  m.step_index = world.step;
  world.steps_since_measurement = 0;
  return m;
}

WorldState reset(std::uint64_t seed, const InitSpec& init) {
  if (init.r_init_max >= init.d_max)
    throw ConfigError("reset: r_init_max must be < d_max");
  if (!(init.r_init_min > 0.0 && init.r_init_min <= init.r_init_max))
    throw ConfigError("reset: need 0 < r_init_min <= r_init_max");

  WorldState world;
  world.rng = Rng(seed);
  world.observer.position = Vec2::Zero();
  world.observer.heading = 0.0;
  world.observer.forward_speed = init.v_observer;

  const double range = world.rng.uniform(init.r_init_min, init.r_init_max);
  const double bearing =
      world.rng.uniform(-0.5 * init.fov_opening, 0.5 * init.fov_opening);
  // Place the target so the sampled bearing holds under the active
  // convention; the first sense() is then guaranteed to register.
  if (init.convention == BearingConvention::kBoresightZero) {
    world.target.position = range * heading_direction(bearing);
  } else {
    world.target.position = -range * Vec2(std::cos(bearing), std::sin(bearing));
  }
  world.target.heading = world.rng.uniform(-M_PI, M_PI);
  world.target.forward_speed = init.v_target;
  return world;
}

}  // namespace uavtrack
