#include "mttsp/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mttsp {

namespace {
constexpr double kPosTol = 1e-9;
}

void Instance::validate() const {
  if (agent.v_max <= 0.0) throw std::invalid_argument("agent v_max must be > 0");
  if (agent.variant == Variant::VariableSpeedDubins) {
    if (agent.v_min <= 0.0 || agent.v_min > agent.v_max)
      throw std::invalid_argument("Dubins agent requires 0 < v_min <= v_max");
    if (agent.omega_max <= 0.0) throw std::invalid_argument("Dubins agent requires omega_max > 0");
    if (agent.speed_set.empty()) throw std::invalid_argument("Dubins speed_set must be nonempty");
    if (!std::is_sorted(agent.speed_set.begin(), agent.speed_set.end()))
      throw std::invalid_argument("speed_set must be sorted ascending");
    for (double v : agent.speed_set)
      if (v < agent.v_min - kPosTol || v > agent.v_max + kPosTol)
        throw std::invalid_argument("speed_set values must lie in [v_min, v_max]");
    if (!agent.q0.heading) throw std::invalid_argument("Dubins agent q0 needs a heading");
  } else if (agent.q0.heading) {
    throw std::invalid_argument("heading only valid for the Dubins variant");
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const Target& tgt = targets[k];
    if (tgt.id != static_cast<int>(k) + 1)
      throw std::invalid_argument("target ids must be 1..n_tar in order");
    if (tgt.window_lo < 0.0 || tgt.window_hi < tgt.window_lo)
      throw std::invalid_argument("target window must satisfy 0 <= t_lo <= t_hi");
    if (tgt.radius < 0.0) throw std::invalid_argument("target radius must be >= 0");
    if (agent.variant != Variant::CloseEnough && tgt.radius != 0.0)
      throw std::invalid_argument("radius must be 0 outside the close-enough variant");
    if (const auto* spline = std::get_if<BSpline2>(&tgt.traj)) {
      if (spline->domainStart() > tgt.window_lo + kPosTol ||
          spline->domainEnd() < tgt.window_hi - kPosTol)
        throw std::invalid_argument("spline not evaluable on the full time window");
    }
  }
}

Vec2 evalTarget(const Target& target, double t) {
  if (const auto* lin = std::get_if<LinearTrajectory>(&target.traj))
    return lin->p0 + lin->vel * t;
  return std::get<BSpline2>(target.traj).evaluate(t);
}

AgentConfig randConfig(const AgentModel& agent, const Target& target, double t, Rng& rng) {
  if (t < target.window_lo - kPosTol || t > target.window_hi + kPosTol)
    throw std::domain_error("randConfig: t outside target window");
  const Vec2 center = evalTarget(target, t);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  AgentConfig q;
  switch (agent.variant) {
    case Variant::CloseEnough: {
      const double theta = target.radius > 0.0 ? angle(rng) : 0.0;
      q.position = center + Vec2{std::cos(theta), std::sin(theta)} * target.radius;
      break;
    }
    case Variant::Linear:
      q.position = center;
      break;
    case Variant::VariableSpeedDubins:
      q.position = center;
      q.heading = normalizeAngle(angle(rng));
      break;
  }
  return q;
}

std::optional<double> minFeasibleDubinsSpeed(const AgentModel& agent, const AgentConfig& q,
                                             const AgentConfig& q2, double dt) {
  for (double v : agent.speed_set) {
    if (dubinsLengthFeasible(q.toSE2(), q2.toSE2(), v / agent.omega_max, v * dt)) return v;
  }
  return std::nullopt;
}

bool trajExists(const AgentModel& agent, const AgentConfig& q, double t, const AgentConfig& q2,
                double t2) {
  if (t2 < t) throw std::invalid_argument("trajExists: t2 < t");
  if (agent.variant == Variant::VariableSpeedDubins)
    return minFeasibleDubinsSpeed(agent, q, q2, t2 - t).has_value();
  return distance(q.position, q2.position) <= agent.v_max * (t2 - t);
}

std::optional<TrajectoryLeg> getTraj(const AgentModel& agent, const AgentConfig& q, double t,
                                     const AgentConfig& q2, double t2) {
  TrajectoryLeg leg;
  leg.from = q;
  leg.t_from = t;
  leg.to = q2;
  leg.t_to = t2;
  if (agent.variant != Variant::VariableSpeedDubins) {
    if (!trajExists(agent, q, t, q2, t2)) return std::nullopt;
    return leg;
  }
  const auto v = minFeasibleDubinsSpeed(agent, q, q2, t2 - t);
  if (!v) return std::nullopt;
  auto path = dubinsPathWithLength(q.toSE2(), q2.toSE2(), *v / agent.omega_max, *v * (t2 - t));
  if (!path) return std::nullopt;
  leg.speed = *v;
  leg.dubins_path = std::move(*path);
  return leg;
}

bool interceptionCheck(const AgentModel& agent, const Target& target, const AgentConfig& q,
                       double t) {
  if (t < target.window_lo - kPosTol || t > target.window_hi + kPosTol) return false;
  const double dist = distance(q.position, evalTarget(target, t));
  if (agent.variant == Variant::CloseEnough) return dist <= target.radius + kPosTol;
  return dist <= kPosTol;
}

std::optional<double> edgeCostRaw(const AgentModel& agent, const AgentConfig& q, double t,
                                  const AgentConfig& q2, double t2) {
  if (t2 < t) return std::nullopt;
  if (t2 == t) {
    if (q == q2) return 0.0;
    return std::nullopt;
  }
  if (agent.variant == Variant::VariableSpeedDubins) {
    const auto v = minFeasibleDubinsSpeed(agent, q, q2, t2 - t);
    if (!v) return std::nullopt;
    return *v * (t2 - t);
  }
  const double dist = distance(q.position, q2.position);
  if (dist > agent.v_max * (t2 - t)) return std::nullopt;
  return dist;
}

AgentConfig TrajectoryLeg::at(double t) const {
  t = std::clamp(t, t_from, t_to);
  if (!dubins_path) {
    const double denom = t_to - t_from;
    const double u = denom > 0.0 ? (t - t_from) / denom : 0.0;
    AgentConfig q;
    q.position = from.position + (to.position - from.position) * u;
    return q;
  }
  const SE2Config se2 = dubins_path->at(speed * (t - t_from));
  return AgentConfig{se2.position, se2.heading};
}

double TrajectoryLeg::length() const {
  if (dubins_path) return dubins_path->totalLength();
  return distance(from.position, to.position);
}

double Trajectory::cost() const {
  double total = 0.0;
  for (const auto& leg : legs) total += leg.length();
  return total;
}

}  // namespace mttsp
