#pragma once

#include <optional>
#include <vector>

#include "mttsp/sample_graph.hpp"

namespace mttsp {

struct OracleResult {
  std::vector<int> order;  // depot-first node sequence
  double raw_cost = 0.0;
};

/// Exact open-path GTSP optimum by dynamic programming over
/// (visited-target subset, last node) on raw costs. Throws when the state
/// space n_nodes * 2^n_targets exceeds 2^24. Ties break toward the
/// lexicographically smaller node sequence.
std::optional<OracleResult> exactGtspDp(const SamplePointGraph& graph);

/// All feasible depot-first tours with their raw costs, cheapest first
/// (ties: lexicographic order). Guarded to <= 7 targets and <= 4 sample
/// points per cluster.
std::vector<OracleResult> enumerateTours(const SamplePointGraph& graph);

}  // namespace mttsp
