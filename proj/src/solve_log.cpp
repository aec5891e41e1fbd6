#include "mttsp/solve_log.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

namespace mttsp {

Stopwatch Stopwatch::counting(double tick) {
  auto counter = std::make_shared<long>(0);
  return Stopwatch([counter, tick] { return tick * static_cast<double>((*counter)++); });
}

void SolveLog::record(double t_wall, double raw_cost, EventKind kind) {
  if (!events_.empty()) {
    // Timestamps are strictly increasing; coincident clock reads get nudged.
    if (t_wall <= events_.back().t_wall) t_wall = events_.back().t_wall + 1e-9;
    if (kind != EventKind::Initial && raw_cost > events_.back().raw_cost)
      throw std::logic_error("SolveLog: incumbent cost must not increase");
  }
  events_.push_back(SolveEvent{t_wall, raw_cost, kind});
}

double computeAUC(const SolveLog& log, double budget_s) {
  const auto& ev = log.events();
  if (ev.empty() || ev.front().t_wall >= budget_s) return 0.0;
  double auc = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double t0 = ev[i].t_wall;
    const double t1 = i + 1 < ev.size() ? std::min(ev[i + 1].t_wall, budget_s) : budget_s;
    if (t1 <= t0) continue;
    auc += ev[i].raw_cost * (t1 - t0);
  }
  return auc;
}

SolveLog mergeLogs(const std::vector<SolveLog>& logs) {
  std::vector<SolveEvent> all;
  for (const auto& log : logs)
    all.insert(all.end(), log.events().begin(), log.events().end());
  std::stable_sort(all.begin(), all.end(),
                   [](const SolveEvent& a, const SolveEvent& b) { return a.t_wall < b.t_wall; });
  SolveLog merged;
  double best = std::numeric_limits<double>::infinity();
  for (const SolveEvent& e : all) {
    if (e.raw_cost < best) {
      best = e.raw_cost;
      merged.record(e.t_wall, e.raw_cost, merged.empty() ? EventKind::Initial : e.kind);
    }
  }
  return merged;
}

std::string kindName(EventKind kind) {
  switch (kind) {
    case EventKind::Initial: return "initial";
    case EventKind::Improved: return "improved";
    case EventKind::Final: return "final";
  }
  return "?";
}

}  // namespace mttsp
