#include "mttsp/bspline.hpp"

#include <algorithm>
#include <stdexcept>

namespace mttsp {

BSpline2::BSpline2(int degree, std::vector<double> knots, std::vector<Vec2> control_points)
    : degree_(degree), knots_(std::move(knots)), ctrl_(std::move(control_points)) {
  if (degree_ < 0) throw std::invalid_argument("BSpline2: negative degree");
  if (knots_.size() != ctrl_.size() + degree_ + 1)
    throw std::invalid_argument("BSpline2: knot/control point count mismatch");
  if (!std::is_sorted(knots_.begin(), knots_.end()))
    throw std::invalid_argument("BSpline2: knots must be nondecreasing");
}

Vec2 BSpline2::evaluate(double t) const {
  const double lo = domainStart();
  const double hi = domainEnd();
  if (t < lo - 1e-12 || t > hi + 1e-12)
    throw std::domain_error("BSpline2: evaluation outside knot domain");
  t = std::clamp(t, lo, hi);

  // Knot span index k with knots_[k] <= t < knots_[k+1]; the last span is
  // treated as closed so t == hi evaluates to the final control point.
  int k;
  if (t >= hi) {
    k = static_cast<int>(knots_.size()) - degree_ - 2;
    while (k > degree_ && knots_[k] == knots_[k + 1]) --k;
  } else {
    k = static_cast<int>(std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin()) - 1;
  }

  std::vector<Vec2> d(degree_ + 1);
  for (int j = 0; j <= degree_; ++j) d[j] = ctrl_[j + k - degree_];
  for (int r = 1; r <= degree_; ++r) {
    for (int j = degree_; j >= r; --j) {
      const double denom = knots_[j + 1 + k - r] - knots_[j + k - degree_];
      const double alpha = denom > 0.0 ? (t - knots_[j + k - degree_]) / denom : 0.0;
      d[j] = d[j - 1] * (1.0 - alpha) + d[j] * alpha;
    }
  }
  return d[degree_];
}

BSpline2 BSpline2::derivative() const {
  if (degree_ == 0) {
    // Derivative of a piecewise constant is zero; keep a valid degenerate curve.
    std::vector<Vec2> zeros(ctrl_.size(), Vec2{0, 0});
    return BSpline2(0, knots_, zeros);
  }
  std::vector<Vec2> dctrl(ctrl_.size() - 1);
  for (std::size_t j = 0; j + 1 < ctrl_.size(); ++j) {
    const double denom = knots_[j + degree_ + 1] - knots_[j + 1];
    dctrl[j] = denom > 0.0 ? (ctrl_[j + 1] - ctrl_[j]) * (degree_ / denom) : Vec2{0, 0};
  }
  std::vector<double> dknots(knots_.begin() + 1, knots_.end() - 1);
  return BSpline2(degree_ - 1, std::move(dknots), std::move(dctrl));
}

}  // namespace mttsp
