#pragma once

#include <vector>

#include "mttsp/geometry.hpp"

namespace mttsp {

/// Clamped B-spline curve in the plane, evaluated with de Boor's algorithm.
/// Knots are nondecreasing with the first and last knot repeated degree+1
/// times, and #knots == #control_points + degree + 1.
class BSpline2 {
 public:
  BSpline2() = default;
  BSpline2(int degree, std::vector<double> knots, std::vector<Vec2> control_points);

  Vec2 evaluate(double t) const;

  /// Derivative curve (one degree lower). Control points of the derivative
  /// bound the curve's velocity via the convex hull property.
  BSpline2 derivative() const;

  int degree() const { return degree_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<Vec2>& controlPoints() const { return ctrl_; }
  double domainStart() const { return knots_[degree_]; }
  double domainEnd() const { return knots_[knots_.size() - degree_ - 1]; }

 private:
  int degree_ = 3;
  std::vector<double> knots_;
  std::vector<Vec2> ctrl_;
};

}  // namespace mttsp
