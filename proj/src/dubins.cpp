#include "mttsp/dubins.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mttsp {

double PathSE2::totalLength() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length;
  return total;
}

SE2Config PathSE2::at(double s) const {
  SE2Config q = start;
  s = std::max(0.0, std::min(s, totalLength()));
  for (const auto& seg : segments) {
    const double ds = std::min(s, seg.length);
    if (seg.curvature == 0.0) {
      q.position += Vec2{std::cos(q.heading), std::sin(q.heading)} * ds;
    } else {
      const double k = seg.curvature;
      const double phi2 = q.heading + k * ds;
      q.position.x += (std::sin(phi2) - std::sin(q.heading)) / k;
      q.position.y -= (std::cos(phi2) - std::cos(q.heading)) / k;
      q.heading = normalizeAngle(phi2);
    }
    s -= ds;
    if (s <= 0.0) break;
  }
  return q;
}

double PathSE2::maxAbsCurvature() const {
  double m = 0.0;
  for (const auto& seg : segments)
    if (seg.length > 0.0) m = std::max(m, std::abs(seg.curvature));
  return m;
}

PathSE2 DubinsPath::toPath() const {
  static constexpr char kTurns[6][3] = {
      {'L', 'S', 'L'}, {'R', 'S', 'R'}, {'L', 'S', 'R'},
      {'R', 'S', 'L'}, {'R', 'L', 'R'}, {'L', 'R', 'L'}};
  const char* w = kTurns[static_cast<int>(word)];
  PathSE2 path;
  path.start = start;
  for (int i = 0; i < 3; ++i) {
    PathSegment seg;
    seg.length = params[i] * turn_radius;
    if (w[i] == 'L')
      seg.curvature = 1.0 / turn_radius;
    else if (w[i] == 'R')
      seg.curvature = -1.0 / turn_radius;
    if (seg.length > 0.0) path.segments.push_back(seg);
  }
  return path;
}

namespace {

struct WordParams {
  bool valid = false;
  std::array<double, 3> p{};
};

// Shkel-Lumelsky closed forms in normalized coordinates: d is the endpoint
// distance over r, alpha/beta the start/goal headings relative to the
// endpoint direction.
WordParams lsl(double d, double a, double b) {
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double p2 = 2.0 + d * d - 2.0 * std::cos(a - b) + 2.0 * d * (sa - sb);
  if (p2 < 0.0) return {};
  const double tmp = std::atan2(cb - ca, d + sa - sb);
  return {true, {normalizeAngle(-a + tmp), std::sqrt(p2), normalizeAngle(b - tmp)}};
}

WordParams rsr(double d, double a, double b) {
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double p2 = 2.0 + d * d - 2.0 * std::cos(a - b) + 2.0 * d * (sb - sa);
  if (p2 < 0.0) return {};
  const double tmp = std::atan2(ca - cb, d - sa + sb);
  return {true, {normalizeAngle(a - tmp), std::sqrt(p2), normalizeAngle(-b + tmp)}};
}

WordParams lsr(double d, double a, double b) {
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double p2 = -2.0 + d * d + 2.0 * std::cos(a - b) + 2.0 * d * (sa + sb);
  if (p2 < 0.0) return {};
  const double p = std::sqrt(p2);
  const double tmp = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
  return {true, {normalizeAngle(-a + tmp), p, normalizeAngle(-normalizeAngle(b) + tmp)}};
}

WordParams rsl(double d, double a, double b) {
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double p2 = -2.0 + d * d + 2.0 * std::cos(a - b) - 2.0 * d * (sa + sb);
  if (p2 < 0.0) return {};
  const double p = std::sqrt(p2);
  const double tmp = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
  return {true, {normalizeAngle(a - tmp), p, normalizeAngle(b - tmp)}};
}

WordParams rlr(double d, double a, double b) {
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double tmp = (6.0 - d * d + 2.0 * std::cos(a - b) + 2.0 * d * (sa - sb)) / 8.0;
  if (std::abs(tmp) > 1.0) return {};
  const double p = normalizeAngle(kTwoPi - std::acos(tmp));
  const double t = normalizeAngle(a - std::atan2(ca - cb, d - sa + sb) + normalizeAngle(p / 2.0));
  return {true, {t, p, normalizeAngle(a - b - t + normalizeAngle(p))}};
}

WordParams lrl(double d, double a, double b) {
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double tmp = (6.0 - d * d + 2.0 * std::cos(a - b) + 2.0 * d * (sb - sa)) / 8.0;
  if (std::abs(tmp) > 1.0) return {};
  const double p = normalizeAngle(kTwoPi - std::acos(tmp));
  const double t = normalizeAngle(-a - std::atan2(ca - cb, d + sa - sb) + p / 2.0);
  return {true, {t, p, normalizeAngle(normalizeAngle(b) - a - t + normalizeAngle(p))}};
}

}  // namespace

DubinsPath dubinsShortest(const SE2Config& from, const SE2Config& to, double turn_radius) {
  if (turn_radius <= 0.0) throw std::invalid_argument("dubinsShortest: turn_radius must be > 0");
  const Vec2 delta = to.position - from.position;
  const double d = delta.norm() / turn_radius;
  const double theta = d > 0.0 ? std::atan2(delta.y, delta.x) : 0.0;
  const double alpha = normalizeAngle(from.heading - theta);
  const double beta = normalizeAngle(to.heading - theta);

  using Fn = WordParams (*)(double, double, double);
  static constexpr Fn kFns[6] = {lsl, rsr, lsr, rsl, rlr, lrl};

  DubinsPath best;
  best.start = from;
  best.turn_radius = turn_radius;
  double best_len = std::numeric_limits<double>::infinity();
  for (int w = 0; w < 6; ++w) {
    const WordParams wp = kFns[w](d, alpha, beta);
    if (!wp.valid) continue;
    const double len = wp.p[0] + wp.p[1] + wp.p[2];
    if (len < best_len) {
      best_len = len;
      best.word = static_cast<DubinsWord>(w);
      best.params = wp.p;
    }
  }
  if (!std::isfinite(best_len)) throw std::runtime_error("dubinsShortest: no word valid");
  return best;
}

bool dubinsLengthFeasible(const SE2Config& from, const SE2Config& to, double turn_radius,
                          double target_length) {
  if (target_length < 0.0) return false;
  const double shortest = dubinsShortest(from, to, turn_radius).length();
  if (std::abs(target_length - shortest) <= 1e-9) return true;
  return target_length >= shortest + kTwoPi * turn_radius;
}

std::optional<PathSE2> dubinsPathWithLength(const SE2Config& from, const SE2Config& to,
                                            double turn_radius, double target_length) {
  const DubinsPath shortest = dubinsShortest(from, to, turn_radius);
  const double d = shortest.length();
  if (std::abs(target_length - d) <= 1e-9) return shortest.toPath();
  if (target_length < d + kTwoPi * turn_radius) return std::nullopt;

  // Absorb the slack with a full circle at the start: radius (L - D) / 2*pi
  // is at least turn_radius, so the curvature bound still holds and the
  // resulting length is exact.
  const double circle_radius = (target_length - d) / kTwoPi;
  PathSE2 path = shortest.toPath();
  path.segments.insert(path.segments.begin(),
                       PathSegment{1.0 / circle_radius, kTwoPi * circle_radius});
  return path;
}

}  // namespace mttsp
