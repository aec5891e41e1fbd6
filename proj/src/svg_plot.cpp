#include "mttsp/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mttsp {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string renderStepPlot(const std::vector<PlotSeries>& series, double budget_s,
                           const std::string& title) {
  if (series.empty()) throw std::invalid_argument("renderStepPlot: no series");
  double cost_lo = std::numeric_limits<double>::infinity();
  double cost_hi = -cost_lo;
  for (const auto& s : series)
    for (const auto& e : s.log.events()) {
      cost_lo = std::min(cost_lo, e.raw_cost);
      cost_hi = std::max(cost_hi, e.raw_cost);
    }
  if (!std::isfinite(cost_lo)) {
    cost_lo = 0.0;
    cost_hi = 1.0;
  }
  if (cost_hi <= cost_lo) cost_hi = cost_lo + 1.0;

  auto px = [&](double t) { return kMargin + (t / budget_s) * (kWidth - 2 * kMargin); };
  auto py = [&](double c) {
    return kHeight - kMargin - (c - cost_lo) / (cost_hi - cost_lo) * (kHeight - 2 * kMargin);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\">" << title
      << "</text>\n";
  svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kHeight - kMargin) << "\" x2=\""
      << fmt(kWidth - kMargin) << "\" y2=\"" << fmt(kHeight - kMargin)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kMargin) << "\" x2=\"" << fmt(kMargin)
      << "\" y2=\"" << fmt(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kHeight - 12)
      << "\" text-anchor=\"middle\">wall time [s]</text>\n";
  svg << "<text x=\"16\" y=\"" << fmt(kHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fmt(kHeight / 2) << ")\">incumbent cost</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& ev = series[i].log.events();
    if (ev.empty()) continue;
    std::ostringstream pts;
    std::ostringstream raw;
    for (std::size_t k = 0; k < ev.size(); ++k) {
      if (k > 0) {
        // Step: horizontal to the new time, then vertical to the new cost.
        pts << " " << fmt(px(ev[k].t_wall)) << "," << fmt(py(ev[k - 1].raw_cost));
        raw << " ";
      }
      pts << (k == 0 ? "" : " ") << fmt(px(ev[k].t_wall)) << "," << fmt(py(ev[k].raw_cost));
      raw << fmt(ev[k].t_wall) << ":" << fmt(ev[k].raw_cost);
    }
    pts << " " << fmt(px(std::max(budget_s, ev.back().t_wall))) << ","
        << fmt(py(ev.back().raw_cost));
    svg << "<polyline fill=\"none\" stroke=\"" << kColors[i % 8] << "\" data-name=\""
        << series[i].name << "\" data-raw=\"" << raw.str() << "\" points=\"" << pts.str()
        << "\"/>\n";
    svg << "<text x=\"" << fmt(kWidth - kMargin - 4) << "\" y=\"" << fmt(kMargin + 16.0 * (i + 1))
        << "\" text-anchor=\"end\" fill=\"" << kColors[i % 8] << "\">" << series[i].name
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mttsp
