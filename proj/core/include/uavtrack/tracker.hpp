#pragma once

#include <Eigen/Dense>

#include "uavtrack/sim.hpp"

namespace uavtrack {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

// Gaussian target track over (x, y, vx, vy) in the global frame.
struct Track {
  Vec4 mean = Vec4::Zero();
  Mat4 covariance = Mat4::Identity();
  bool initialized = false;
};

// Piecewise-constant white-acceleration motion model.
struct DwpaModel {
  double accel_std = 5.0;  // m/s^2
  double step_time = 2.0;  // s

  Mat4 transition() const;
  Mat4 process_noise() const;
};

// Constant-velocity propagation of the mean, F P F^T + Q for the covariance.
// Throws NumericError if the result is non-finite.
Track predict(const Track& track, const DwpaModel& model);

// Range-bearing EKF update with the Jacobian evaluated at the predicted mean
// and the innovation bearing wrapped to [-pi, pi]. Joseph-form covariance.
// Throws NumericError on a singular innovation covariance.
Track update(const Track& track, const Measurement& meas,
             const PlatformState& observer, const SensorSpec& spec);

// Track birth from the first measurement: position from the polar-to-
// Cartesian map with linearized measurement covariance, zero velocity with
// init_vel_std^2 variance.
Track initialize(const Measurement& meas, const PlatformState& observer,
                 const SensorSpec& spec, double init_vel_std);

// Differential entropy 0.5 * ln det(2 pi e P), nats. Throws NumericError if
// the covariance is not positive definite.
double entropy(const Track& track);

// Measurement function h(x): range and bearing of a track position relative
// to the observer pose. Exposed for Jacobian tests.
Eigen::Vector2d measurement_function(const Vec4& state,
                                     const PlatformState& observer,
                                     BearingConvention convention);

// Analytic Jacobian of measurement_function with respect to the state.
Eigen::Matrix<double, 2, 4> measurement_jacobian(const Vec4& state,
                                                 const PlatformState& observer,
                                                 BearingConvention convention);

// Same geometry as relative_polar applied to the track mean position.
RelativePolar track_relative(const Track& track, const PlatformState& observer,
                             BearingConvention convention =
                                 BearingConvention::kBoresightZero);

}  // namespace uavtrack
