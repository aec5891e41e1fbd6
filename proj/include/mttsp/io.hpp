#pragma once

#include <string>

#include "mttsp/instance_gen.hpp"
#include "mttsp/irg.hpp"
#include "mttsp/model.hpp"
#include "mttsp/solve_log.hpp"

namespace mttsp {

/// JSON serialization of instances (with optional witness), solve logs, and
/// trajectories. Schemas are versioned; unknown versions are rejected.

std::string instanceToJson(const GeneratedInstance& gen);
GeneratedInstance instanceFromJson(const std::string& text);

void saveInstance(const GeneratedInstance& gen, const std::string& path);
GeneratedInstance loadInstance(const std::string& path);

/// FNV-1a hash of the canonical instance serialization, as fixed-width hex.
std::string instanceHash(const GeneratedInstance& gen);

struct LogMetadata {
  std::string algo;
  double budget_s = 0.0;
  std::uint64_t seed = 0;
  std::string instance_hash;
  int n_rand = 0;
  double alpha_term = 0.0;
  int n_proc = 0;
};

std::string logToJson(const SolveLog& log, const LogMetadata& meta);
SolveLog logFromJson(const std::string& text, LogMetadata* meta = nullptr);

/// Trajectory as an array of timed configurations (the leg endpoints).
std::string trajectoryToJson(const Trajectory& traj);

void writeFile(const std::string& path, const std::string& content);
std::string readFile(const std::string& path);

}  // namespace mttsp
