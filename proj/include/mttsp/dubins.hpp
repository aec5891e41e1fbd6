#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mttsp/geometry.hpp"

namespace mttsp {

struct SE2Config {
  Vec2 position;
  double heading = 0.0;  // [0, 2*pi)

  bool operator==(const SE2Config& o) const {
    return position == o.position && heading == o.heading;
  }
};

enum class DubinsWord { LSL, RSR, LSR, RSL, RLR, LRL };

/// One constant-curvature piece of a planar path. curvature > 0 turns left,
/// < 0 turns right, == 0 is a straight segment. length is arc length in meters.
struct PathSegment {
  double curvature = 0.0;
  double length = 0.0;
};

/// Piecewise constant-curvature path anchored at a start configuration.
struct PathSE2 {
  SE2Config start;
  std::vector<PathSegment> segments;

  double totalLength() const;
  /// Configuration after traveling arc length s from the start (s clamped
  /// to [0, totalLength]).
  SE2Config at(double s) const;
  SE2Config end() const { return at(totalLength()); }
  double maxAbsCurvature() const;
};

struct DubinsPath {
  SE2Config start;
  double turn_radius = 1.0;
  DubinsWord word = DubinsWord::LSL;
  std::array<double, 3> params{};  // normalized: angles for turns, length/r for S

  double length() const { return (params[0] + params[1] + params[2]) * turn_radius; }
  PathSE2 toPath() const;
};

/// Shortest curvature-bounded path between two configurations, minimized over
/// the six Dubins words. A path always exists for r > 0.
DubinsPath dubinsShortest(const SE2Config& from, const SE2Config& to, double turn_radius);

/// Sufficient condition for a curvature-bounded path of length exactly
/// target_length: the shortest path itself, or anything with at least one
/// full circle of slack (absorbed by widening the inserted circle).
bool dubinsLengthFeasible(const SE2Config& from, const SE2Config& to, double turn_radius,
                          double target_length);

/// Path of length exactly target_length (within 1e-6 relative), curvature
/// bounded by 1/turn_radius. Requires dubinsLengthFeasible to hold; returns
/// nullopt otherwise. Slack is absorbed by prepending a full circle whose
/// radius grows with the slack, so the length match is exact.
std::optional<PathSE2> dubinsPathWithLength(const SE2Config& from, const SE2Config& to,
                                            double turn_radius, double target_length);

}  // namespace mttsp
