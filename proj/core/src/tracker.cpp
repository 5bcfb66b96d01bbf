#include "uavtrack/tracker.hpp"

#include "uavtrack/errors.hpp"

namespace uavtrack {

namespace {

void symmetrize(Mat4& p) { p = 0.5 * (p + p.transpose()).eval(); }

void require_finite(const Track& track, const char* where) {
  if (!track.mean.allFinite() || !track.covariance.allFinite())
    throw NumericError(std::string("tracker: non-finite track after ") + where);
}

}  // namespace

Mat4 DwpaModel::transition() const {
  Mat4 f = Mat4::Identity();
  f(0, 2) = step_time;
  f(1, 3) = step_time;
  return f;
}

Mat4 DwpaModel::process_noise() const {
  const double t = step_time;
  const double var = accel_std * accel_std;
  const double q_pp = 0.25 * t * t * t * t * var;
  const double q_pv = 0.5 * t * t * t * var;
  const double q_vv = t * t * var;
  Mat4 q = Mat4::Zero();
  for (int axis = 0; axis < 2; ++axis) {
    q(axis, axis) = q_pp;
    q(axis, axis + 2) = q_pv;
    q(axis + 2, axis) = q_pv;
    q(axis + 2, axis + 2) = q_vv;
  }
  return q;
}

Track predict(const Track& track, const DwpaModel& model) {
  const Mat4 f = model.transition();
  Track next = track;
  next.mean = f * track.mean;
  next.covariance = f * track.covariance * f.transpose() + model.process_noise();
  symmetrize(next.covariance);
  require_finite(next, "predict");
  return next;
}

Eigen::Vector2d measurement_function(const Vec4& state,
                                     const PlatformState& observer,
                                     BearingConvention convention) {
  const RelativePolar rp =
      relative_polar(observer, state.head<2>(), convention);
  return {rp.distance, rp.bearing};
}

Eigen::Matrix<double, 2, 4> measurement_jacobian(
    const Vec4& state, const PlatformState& observer,
    BearingConvention convention) {
  const Vec2 delta = state.head<2>() - observer.position;
  const double d2 = delta.squaredNorm();
  const double d = std::sqrt(d2);
  if (d2 == 0.0)
    throw NumericError("tracker: measurement Jacobian at zero range");
  Eigen::Matrix<double, 2, 4> h = Eigen::Matrix<double, 2, 4>::Zero();
  h(0, 0) = delta.x() / d;
  h(0, 1) = delta.y() / d;
  if (convention == BearingConvention::kBoresightZero) {
    // bearing = atan2(-dy, dx) - heading
    h(1, 0) = delta.y() / d2;
    h(1, 1) = -delta.x() / d2;
  } else {
    // bearing = atan2(-dy, -dx) - heading (reversed difference vector)
    h(1, 0) = -delta.y() / d2;
    h(1, 1) = delta.x() / d2;
  }
  return h;
}

Track update(const Track& track, const Measurement& meas,
             const PlatformState& observer, const SensorSpec& spec) {
  using Mat24 = Eigen::Matrix<double, 2, 4>;
  const Mat24 h = measurement_jacobian(track.mean, observer, spec.convention);
  const Eigen::Vector2d predicted =
      measurement_function(track.mean, observer, spec.convention);

  Eigen::Vector2d innovation(meas.range - predicted(0),
                             wrap_angle(meas.bearing - predicted(1)));

  Eigen::Matrix2d r = Eigen::Matrix2d::Zero();
  r(0, 0) = spec.sigma_range * spec.sigma_range;
  r(1, 1) = spec.sigma_bearing * spec.sigma_bearing;

  const Eigen::Matrix2d s = h * track.covariance * h.transpose() + r;
  const double det = s.determinant();
  if (!std::isfinite(det) || det <= 0.0)
    throw NumericError("tracker: singular innovation covariance");

  const Eigen::Matrix<double, 4, 2> gain =
      track.covariance * h.transpose() * s.inverse();

  Track next = track;
  next.mean = track.mean + gain * innovation;
  const Mat4 ikh = Mat4::Identity() - gain * h;
  next.covariance =
      ikh * track.covariance * ikh.transpose() + gain * r * gain.transpose();
  symmetrize(next.covariance);
  require_finite(next, "update");
  return next;
}

Track initialize(const Measurement& meas, const PlatformState& observer,
                 const SensorSpec& spec, double init_vel_std) {
  Track track;
  track.initialized = true;

  // Invert the bearing convention to a world angle, then place the position.
  double world_angle;
  Vec2 dir;
  if (spec.convention == BearingConvention::kBoresightZero) {
    world_angle = meas.bearing + observer.heading;
    dir = heading_direction(world_angle);
  } else {
    world_angle = meas.bearing + observer.heading;
    dir = -Vec2(std::cos(world_angle), std::sin(world_angle));
  }
  track.mean.head<2>() = observer.position + meas.range * dir;
  track.mean.tail<2>().setZero();

  // Linearized transform of diag(sigma_d^2, sigma_theta^2) through the
  // polar-to-Cartesian map: J = [dir, d * ddir/dtheta].
  Vec2 ddir;
  if (spec.convention == BearingConvention::kBoresightZero) {
    ddir = Vec2(-std::sin(world_angle), -std::cos(world_angle));
  } else {
    ddir = -Vec2(-std::sin(world_angle), std::cos(world_angle));
  }
  Eigen::Matrix2d jac;
  jac.col(0) = dir;
  jac.col(1) = meas.range * ddir;
  Eigen::Matrix2d meas_cov = Eigen::Matrix2d::Zero();
  meas_cov(0, 0) = spec.sigma_range * spec.sigma_range;
  meas_cov(1, 1) = spec.sigma_bearing * spec.sigma_bearing;

  track.covariance.setZero();
  track.covariance.topLeftCorner<2, 2>() = jac * meas_cov * jac.transpose();
  track.covariance.bottomRightCorner<2, 2>() =
      init_vel_std * init_vel_std * Eigen::Matrix2d::Identity();
  symmetrize(track.covariance);
  return track;
}

double entropy(const Track& track) {
  Eigen::LLT<Mat4> llt(track.covariance);
  if (llt.info() != Eigen::Success)
    throw NumericError("tracker: covariance not positive definite");
  // ln det P from the Cholesky factor.
  double log_det = 0.0;
  for (int i = 0; i < 4; ++i) log_det += std::log(llt.matrixL()(i, i));
  log_det *= 2.0;
  return 2.0 * std::log(2.0 * M_PI * M_E) + 0.5 * log_det;
}

RelativePolar track_relative(const Track& track, const PlatformState& observer,
                             BearingConvention convention) {
  return relative_polar(observer, track.mean.head<2>(), convention);
}

}  // namespace uavtrack
