#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mttsp/model.hpp"
#include "mttsp/sample_graph.hpp"

namespace mttsp {

struct GenParams {
  Variant variant = Variant::CloseEnough;
  int n_tar = 200;
  double window_len = 108.0;
  Vec2 arena_lo{-50.0, -50.0};
  Vec2 arena_hi{50.0, 50.0};
  double target_speed_lo = 0.5;
  double target_speed_hi = 1.0;
  double radius = 12.0;
  double v_max = 5.0;
  double v_min = 2.0;       // Dubins only
  double omega_max = 0.25;  // Dubins only
  std::uint64_t seed = 0;

  static GenParams defaults(Variant variant);
};

struct GeneratedInstance {
  Instance instance;
  /// Construction tour (depot first): a replayable feasibility witness.
  std::vector<SamplePoint> witness;
  std::uint64_t seed = 0;
};

/// Feasible-by-construction instance: a random kinematically valid agent tour
/// is drawn first, then each target's path is laid through its interception
/// point as two linear segments smoothed by a cubic B-spline.
GeneratedInstance generateInstance(const GenParams& params);

/// Single-segment constant-velocity targets (no spline), radius 0.
GeneratedInstance generateLinearInstance(GenParams params);

/// Clamped cubic B-spline interpolating every (position, time) point.
/// Natural end conditions; needs >= 2 points with strictly increasing times.
BSpline2 fitCubicSpline(const std::vector<std::pair<Vec2, double>>& through_points);

/// Certified upper bound on the target's speed: exact for linear motion, the
/// maximum derivative-control-point norm for splines.
double maxSpeedBound(const TargetTrajectory& traj);

}  // namespace mttsp
