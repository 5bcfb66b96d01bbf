#pragma once

#include <Eigen/Core>
#include <cmath>

namespace uavtrack {

using Vec2 = Eigen::Vector2d;

// Wrap an angle to [-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a < 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

// The world is drawn y-down: a platform with heading phi moves along
// (cos phi, -sin phi). heading_direction and vector_angle are exact
// inverses of each other.
inline Vec2 heading_direction(double heading) {
  return {std::cos(heading), -std::sin(heading)};
}

// World angle of a direction vector, consistent with heading_direction.
inline double vector_angle(const Vec2& v) { return std::atan2(-v.y(), v.x()); }

}  // namespace uavtrack
