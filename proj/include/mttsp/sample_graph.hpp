#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mttsp/model.hpp"

namespace mttsp {

constexpr int kDepotOwner = 0;  // owner id for the depot node

struct SamplePoint {
  int owner = kDepotOwner;  // target id, or kDepotOwner
  AgentConfig config;
  double time = 0.0;

  bool operator==(const SamplePoint& o) const {
    return owner == o.owner && config == o.config && time == o.time;
  }
};

/// Clustered graph over sampled interception points. Node 0 is the depot
/// (q0, 0); cluster c holds the nodes of target c (cluster 0 is the depot
/// singleton). raw_cost is dense, row-major, with NaN marking infeasible
/// edges. Immutable once built except through addSamples.
class SamplePointGraph {
 public:
  /// sets[i] holds target (i+1)'s sample points; every set must be nonempty.
  /// Edge evaluation is split across n_workers row blocks.
  static SamplePointGraph build(const Instance& instance,
                                const std::vector<std::vector<SamplePoint>>& sets,
                                int n_workers = 1);

  /// Appends points and evaluates only edges incident to the new nodes.
  void addSamples(const Instance& instance, const std::vector<std::vector<SamplePoint>>& sets,
                  int n_workers = 1);

  int nodeCount() const { return static_cast<int>(nodes_.size()); }
  int clusterCount() const { return static_cast<int>(clusters_.size()); }
  const SamplePoint& node(int i) const { return nodes_[i]; }
  const std::vector<SamplePoint>& nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& clusters() const { return clusters_; }

  bool feasible(int a, int b) const { return !std::isnan(raw_cost_[a * stride_ + b]); }
  double rawCost(int a, int b) const { return raw_cost_[a * stride_ + b]; }

  /// Node index holding an identical sample point, or -1.
  int findNode(const SamplePoint& p) const;

 private:
  void evaluateEdges(const Instance& instance, int first_new_node, int n_workers);

  std::vector<SamplePoint> nodes_;
  std::vector<std::vector<int>> clusters_;
  std::vector<double> raw_cost_;
  int stride_ = 0;
};

struct ScaledCostMatrix {
  std::vector<std::int64_t> cost;  // dense, row-major, n x n
  int n = 0;
  std::int64_t big_cost = 0;

  std::int64_t at(int a, int b) const { return cost[a * n + b]; }
};

/// Scale raw costs by 100 (rounding half away from zero) and price infeasible
/// edges at incumbent_scaled_cost + 1, or (n_tar + 1) * max_scaled_cost when
/// no incumbent exists.
ScaledCostMatrix scaledMatrix(const SamplePointGraph& graph,
                              std::optional<std::int64_t> incumbent_scaled_cost);

/// Scaled cost that matches the matrix entry for one raw edge cost.
std::int64_t scaleCost(double raw);

/// Sum of raw edge costs along a depot-first tour; nullopt if any edge is
/// infeasible. Throws on malformed tours (wrong length, missing clusters).
std::optional<double> tourRawCost(const SamplePointGraph& graph, const std::vector<int>& order);

/// GTSPLIB-format export (clusters + full integer matrix) for cross-checks
/// against external GTSP tooling.
std::string toGtspLib(const ScaledCostMatrix& matrix, const std::vector<std::vector<int>>& clusters,
                      const std::string& name);

struct GtspLibInstance {
  std::vector<std::vector<int>> clusters;
  ScaledCostMatrix matrix;
};

GtspLibInstance parseGtspLib(const std::string& text);

}  // namespace mttsp
