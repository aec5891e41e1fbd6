#pragma once

#include <string>
#include <vector>

#include "mttsp/solve_log.hpp"

namespace mttsp {

struct PlotSeries {
  std::string name;
  SolveLog log;
};

/// Static step-plot of incumbent cost vs wall time. Output is deterministic:
/// fixed-precision coordinates, series drawn in input order. Each polyline
/// carries a data-raw attribute with the source "t:cost" pairs.
std::string renderStepPlot(const std::vector<PlotSeries>& series, double budget_s,
                           const std::string& title = "cost vs time");

}  // namespace mttsp
