#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "mttsp/bspline.hpp"
#include "mttsp/dubins.hpp"
#include "mttsp/geometry.hpp"

namespace mttsp {

using Rng = std::mt19937_64;

enum class Variant { CloseEnough, Linear, VariableSpeedDubins };

/// Agent configuration. heading is only meaningful for the Dubins variant.
struct AgentConfig {
  Vec2 position;
  std::optional<double> heading;

  bool operator==(const AgentConfig& o) const {
    return position == o.position && heading == o.heading;
  }
  SE2Config toSE2() const { return {position, heading.value_or(0.0)}; }
};

struct AgentModel {
  Variant variant = Variant::CloseEnough;
  double v_max = 5.0;
  double v_min = 0.0;      // Dubins only
  double omega_max = 0.0;  // Dubins only
  std::vector<double> speed_set;  // Dubins only, sorted ascending
  AgentConfig q0;

  static std::vector<double> defaultSpeedSet(double v_min, double v_max) {
    return {v_min, (2.0 / 3.0) * v_min + (1.0 / 3.0) * v_max,
            (1.0 / 3.0) * v_min + (2.0 / 3.0) * v_max, v_max};
  }
};

struct LinearTrajectory {
  Vec2 p0;
  Vec2 vel;
};

using TargetTrajectory = std::variant<LinearTrajectory, BSpline2>;

struct Target {
  int id = 0;  // 1..n_tar
  TargetTrajectory traj;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double radius = 0.0;
};

struct Instance {
  AgentModel agent;
  std::vector<Target> targets;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

/// One trajectory leg between two tour points. Close-enough and linear legs
/// are constant-velocity lines; Dubins legs follow a constant-curvature path
/// sequence at a fixed speed.
struct TrajectoryLeg {
  AgentConfig from;
  double t_from = 0.0;
  AgentConfig to;
  double t_to = 0.0;
  std::optional<PathSE2> dubins_path;  // present iff Dubins variant
  double speed = 0.0;                  // Dubins fixed speed along the path

  AgentConfig at(double t) const;
  double length() const;
};

struct Trajectory {
  std::vector<TrajectoryLeg> legs;

  double cost() const;
  double startTime() const { return legs.empty() ? 0.0 : legs.front().t_from; }
  double endTime() const { return legs.empty() ? 0.0 : legs.back().t_to; }
};

Vec2 evalTarget(const Target& target, double t);

/// Random interception configuration at time t (uniform boundary point for
/// close-enough, uniform heading for Dubins). Never fails for the in-scope
/// variants.
AgentConfig randConfig(const AgentModel& agent, const Target& target, double t, Rng& rng);

bool trajExists(const AgentModel& agent, const AgentConfig& q, double t, const AgentConfig& q2,
                double t2);

std::optional<TrajectoryLeg> getTraj(const AgentModel& agent, const AgentConfig& q, double t,
                                     const AgentConfig& q2, double t2);

bool interceptionCheck(const AgentModel& agent, const Target& target, const AgentConfig& q,
                       double t);

/// Raw edge cost between two timed configurations; nullopt marks an
/// infeasible pair.
std::optional<double> edgeCostRaw(const AgentModel& agent, const AgentConfig& q, double t,
                                  const AgentConfig& q2, double t2);

/// Smallest speed in speed_set admitting a Dubins path of the required
/// length, if any.
std::optional<double> minFeasibleDubinsSpeed(const AgentModel& agent, const AgentConfig& q,
                                             const AgentConfig& q2, double dt);

}  // namespace mttsp
