#include "mttsp/instance_gen.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mttsp {

GenParams GenParams::defaults(Variant variant) {
  GenParams p;
  p.variant = variant;
  if (variant == Variant::Linear) {
    p.window_len = 54.0;
    p.radius = 0.0;
  } else if (variant == Variant::VariableSpeedDubins) {
    p.radius = 0.0;  // interception is exact-position for the Dubins variant
  }
  return p;
}

namespace {

// All basis values N_{j,degree}^{(deriv)}(t), j = 0..n_ctrl-1, by the Cox-de
// Boor recurrence with derivative steps applied on top. Zero-width spans
// contribute zero.
std::vector<double> basisRow(const std::vector<double>& knots, int degree, int n_ctrl, double t,
                             int deriv) {
  const int n0 = static_cast<int>(knots.size()) - 1;  // number of degree-0 functions
  std::vector<double> N(n0, 0.0);
  // Closed right end: the last nonempty span absorbs t == domain end.
  const double t_end = knots[knots.size() - degree - 1];
  if (t >= t_end) {
    for (int j = n0 - 1; j >= 0; --j) {
      if (knots[j] < knots[j + 1]) {
        N[j] = 1.0;
        break;
      }
    }
  } else {
    for (int j = 0; j < n0; ++j)
      if (knots[j] <= t && t < knots[j + 1]) {
        N[j] = 1.0;
        break;
      }
  }
  auto span = [&](int j, int p) { return knots[j + p] - knots[j]; };
  for (int p = 1; p <= degree; ++p) {
    const bool derivative_step = p > degree - deriv;
    std::vector<double> next(n0 - p, 0.0);
    for (int j = 0; j < n0 - p; ++j) {
      const double left = span(j, p) > 0.0 ? N[j] / span(j, p) : 0.0;
      const double right = span(j + 1, p) > 0.0 ? N[j + 1] / span(j + 1, p) : 0.0;
      next[j] = derivative_step ? p * (left - right) : (t - knots[j]) * left + (knots[j + 1 + p] - t) * right;
    }
    N = std::move(next);
  }
  N.resize(n_ctrl);
  return N;
}

}  // namespace

BSpline2 fitCubicSpline(const std::vector<std::pair<Vec2, double>>& through_points) {
  const int m = static_cast<int>(through_points.size());
  if (m < 2) throw std::invalid_argument("fitCubicSpline: need at least 2 points");
  for (int i = 1; i < m; ++i)
    if (through_points[i].second <= through_points[i - 1].second)
      throw std::invalid_argument("fitCubicSpline: times must be strictly increasing");

  constexpr int kDegree = 3;
  const int n_ctrl = m + 2;
  std::vector<double> knots;
  for (int k = 0; k <= kDegree; ++k) knots.push_back(through_points.front().second);
  for (int i = 1; i + 1 < m; ++i) knots.push_back(through_points[i].second);
  for (int k = 0; k <= kDegree; ++k) knots.push_back(through_points.back().second);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_ctrl, n_ctrl);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n_ctrl, 2);
  for (int i = 0; i < m; ++i) {
    const auto row = basisRow(knots, kDegree, n_ctrl, through_points[i].second, 0);
    for (int j = 0; j < n_ctrl; ++j) A(i, j) = row[j];
    b(i, 0) = through_points[i].first.x;
    b(i, 1) = through_points[i].first.y;
  }
  // Natural end conditions close the system.
  const auto dd0 = basisRow(knots, kDegree, n_ctrl, through_points.front().second, 2);
  const auto dd1 = basisRow(knots, kDegree, n_ctrl, through_points.back().second, 2);
  for (int j = 0; j < n_ctrl; ++j) {
    A(m, j) = dd0[j];
    A(m + 1, j) = dd1[j];
  }

  const Eigen::MatrixXd c = A.colPivHouseholderQr().solve(b);
  std::vector<Vec2> ctrl(n_ctrl);
  for (int j = 0; j < n_ctrl; ++j) ctrl[j] = Vec2{c(j, 0), c(j, 1)};
  return BSpline2(kDegree, std::move(knots), std::move(ctrl));
}

double maxSpeedBound(const TargetTrajectory& traj) {
  if (const auto* lin = std::get_if<LinearTrajectory>(&traj)) return lin->vel.norm();
  const BSpline2 d = std::get<BSpline2>(traj).derivative();
  double bound = 0.0;
  for (const Vec2& p : d.controlPoints()) bound = std::max(bound, p.norm());
  return bound;
}

namespace {

double earliestDelta(const AgentModel& agent, const AgentConfig& a, const AgentConfig& b) {
  if (agent.variant != Variant::VariableSpeedDubins)
    return distance(a.position, b.position) / agent.v_max;
  double best = std::numeric_limits<double>::infinity();
  for (double v : agent.speed_set) {
    if (v <= 0.0) continue;
    const double len = dubinsShortest(a.toSE2(), b.toSE2(), v / agent.omega_max).length();
    best = std::min(best, len / v);
  }
  return best;
}

Vec2 uniformInArena(const GenParams& params, Rng& rng) {
  std::uniform_real_distribution<double> ux(params.arena_lo.x, params.arena_hi.x);
  std::uniform_real_distribution<double> uy(params.arena_lo.y, params.arena_hi.y);
  return Vec2{ux(rng), uy(rng)};
}

struct TargetBuild {
  TargetTrajectory traj;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

// Two linear segments meeting at (q_i, t_i), spline-smoothed for the curved
// variants, with the window positioned to contain t_i.
TargetBuild buildTargetPath(const GenParams& params, const Vec2& q_i, double t_i, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> speed(params.target_speed_lo, params.target_speed_hi);
  std::uniform_real_distribution<double> frac(0.1, 0.9);

  TargetBuild out;
  out.window_lo = std::max(0.0, t_i - frac(rng) * params.window_len);
  out.window_hi = out.window_lo + params.window_len;

  const double a1 = angle(rng);
  const double a2 = angle(rng);
  const Vec2 v1 = Vec2{std::cos(a1), std::sin(a1)} * speed(rng);
  const Vec2 v2 = Vec2{std::cos(a2), std::sin(a2)} * speed(rng);

  if (params.variant == Variant::Linear) {
    // One constant-velocity segment through (q_i, t_i).
    out.traj = LinearTrajectory{q_i - v1 * t_i, v1};
    return out;
  }

  auto onSegments = [&](double t) {
    return t <= t_i ? q_i - v1 * (t_i - t) : q_i + v2 * (t - t_i);
  };
  std::vector<std::pair<Vec2, double>> through;
  std::vector<double> times = {out.window_lo, 0.5 * (out.window_lo + t_i), t_i,
                               0.5 * (t_i + out.window_hi), out.window_hi};
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return b - a < 1e-9; }),
              times.end());
  for (double t : times) through.emplace_back(onSegments(t), t);
  out.traj = fitCubicSpline(through);
  return out;
}

}  // namespace

GeneratedInstance generateInstance(const GenParams& params) {
  Rng rng(params.seed);
  const bool dubins = params.variant == Variant::VariableSpeedDubins;

  GeneratedInstance gen;
  gen.seed = params.seed;
  Instance& inst = gen.instance;
  inst.agent.variant = params.variant;
  inst.agent.v_max = params.v_max;
  if (dubins) {
    inst.agent.v_min = params.v_min;
    inst.agent.omega_max = params.omega_max;
    inst.agent.speed_set = AgentModel::defaultSpeedSet(params.v_min, params.v_max);
  }
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  inst.agent.q0.position = uniformInArena(params, rng);
  if (dubins) inst.agent.q0.heading = normalizeAngle(angle(rng));

  gen.witness.push_back(SamplePoint{kDepotOwner, inst.agent.q0, 0.0});
  AgentConfig prev = inst.agent.q0;
  double t_prev = 0.0;
  std::uniform_real_distribution<double> slack(0.0, 0.2 * params.window_len);

  for (int i = 1; i <= params.n_tar; ++i) {
    AgentConfig q;
    double t_i = 0.0;
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      q.position = uniformInArena(params, rng);
      if (dubins) q.heading = normalizeAngle(angle(rng));
      double dt_min = earliestDelta(inst.agent, prev, q);
      if (!std::isfinite(dt_min) || dt_min <= 0.0) continue;
      // The Dubins feasibility notion needs a full circle of path slack, so
      // space arrivals by at least one circle period; otherwise only the
      // exact-length witness edge would ever be feasible.
      if (dubins) dt_min += kTwoPi / params.omega_max;
      for (int s = 0; s < 16 && !placed; ++s) {
        t_i = t_prev + dt_min + slack(rng);
        placed = trajExists(inst.agent, prev, t_prev, q, t_i);
      }
      if (!placed) {  // fall back to the exact earliest arrival
        t_i = t_prev + dt_min;
        placed = trajExists(inst.agent, prev, t_prev, q, t_i);
      }
    }
    if (!placed)
      throw std::runtime_error("generateInstance: tour construction failed (seed " +
                               std::to_string(params.seed) + ")");

    Target target;
    target.id = i;
    target.radius = params.variant == Variant::CloseEnough ? params.radius : 0.0;
    bool built = false;
    for (int attempt = 0; attempt < 64 && !built; ++attempt) {
      TargetBuild tb = buildTargetPath(params, q.position, t_i, rng);
      if (maxSpeedBound(tb.traj) > inst.agent.v_max) continue;  // spline overshoot: redraw
      target.traj = std::move(tb.traj);
      target.window_lo = tb.window_lo;
      target.window_hi = tb.window_hi;
      built = true;
    }
    if (!built)
      throw std::runtime_error("generateInstance: target path speed bound unreachable (seed " +
                               std::to_string(params.seed) + ")");

    if (!interceptionCheck(inst.agent, target, q, t_i))
      throw std::logic_error("generateInstance: witness point misses its target");
    inst.targets.push_back(std::move(target));
    gen.witness.push_back(SamplePoint{i, q, t_i});
    prev = q;
    t_prev = t_i;
  }

  inst.validate();
  return gen;
}

GeneratedInstance generateLinearInstance(GenParams params) {
  params.variant = Variant::Linear;
  params.radius = 0.0;
  return generateInstance(params);
}

}  // namespace mttsp
