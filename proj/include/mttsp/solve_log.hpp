#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace mttsp {

/// Elapsed-seconds source. The default reads the steady clock; a synthetic
/// source makes runs reproducible down to the logged timestamps.
class Stopwatch {
 public:
  using Source = std::function<double()>;

  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  explicit Stopwatch(Source source) : source_(std::move(source)) {}

  /// Counter clock: each query advances time by `tick` seconds.
  static Stopwatch counting(double tick = 1e-3);

  double elapsed() const {
    if (source_) return source_();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Source source_;
  std::chrono::steady_clock::time_point start_;
};

enum class EventKind { Initial, Improved, Final };

struct SolveEvent {
  double t_wall = 0.0;   // seconds since solve start
  double raw_cost = 0.0;
  EventKind kind = EventKind::Improved;
};

/// Incumbent history of a solve. Times are non-decreasing and the incumbent
/// cost never increases after the initial event.
class SolveLog {
 public:
  void record(double t_wall, double raw_cost, EventKind kind);
  const std::vector<SolveEvent>& events() const { return events_; }
  bool empty() const { return events_.empty(); }
  double finalCost() const { return events_.back().raw_cost; }

 private:
  std::vector<SolveEvent> events_;
};

/// Area under the piecewise-constant incumbent-cost curve from the first
/// event to the budget. Zero when the log is empty or the first event lands
/// at or past the budget.
double computeAUC(const SolveLog& log, double budget_s);

/// Min-so-far merge of several logs into one incumbent history.
SolveLog mergeLogs(const std::vector<SolveLog>& logs);

std::string kindName(EventKind kind);

}  // namespace mttsp
