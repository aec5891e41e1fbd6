#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "mttsp/sample_graph.hpp"

namespace mttsp {

using Clock = std::chrono::steady_clock;
using Deadline = Clock::time_point;

/// Open GTSP tour: depot-first node sequence, one node per cluster, costed
/// on the scaled integer matrix (no closing edge back to the depot).
struct GtspTour {
  std::vector<int> order;
  std::int64_t scaled_cost = 0;
};

std::int64_t computeScaledCost(const ScaledCostMatrix& matrix, const std::vector<int>& order);

enum class RemovalHeuristic { Segment, Distance, Worst, Random };
enum class InsertionHeuristic { Cheapest, Nearest, Farthest, Random };

struct LnsParams {
  int n_warm = 3;
  int n_term = 60;  // termination counter budget, alpha_term * n_cluster
  double max_removal_fraction = 0.1;
  double noise_lambda = 0.25;
  bool adaptive_weights = true;
  // Annealing: initial acceptance band as a fraction of the seed cost,
  // halved every warm trial; final band reached after n_term steps.
  double beta_init = 0.05;
  double beta_final = 0.0005;
  double beta_decay = 0.5;
  // Literal shared-temperature cooling: every worker iteration multiplies
  // theta by r_cool. Off = only worker 0 cools.
  bool cool_per_worker_iteration = true;
  // Early stop once the best tour reaches this scaled cost (for time-to-target
  // measurements). Default: never.
  std::int64_t stop_at_cost = std::numeric_limits<std::int64_t>::min();
};

struct AnnealState {
  double theta = 1.0;
  double r_cool = 0.99;
};

AnnealState setTempAndCooling(int i_warm, int n_term, std::int64_t seed_cost,
                              const LnsParams& params);

/// Metropolis acceptance on scaled cost.
bool accept(std::int64_t candidate_cost, std::int64_t current_cost, double theta, Rng& rng);

struct RemovalResult {
  std::vector<int> order;            // partial tour, depot kept
  std::vector<int> removed_clusters;
};

RemovalResult removeNodes(const std::vector<int>& order, const ScaledCostMatrix& matrix,
                          const std::vector<std::vector<int>>& clusters, int k,
                          RemovalHeuristic heuristic, Rng& rng);

std::vector<int> insertNodes(std::vector<int> order, std::vector<int> missing_clusters,
                             const ScaledCostMatrix& matrix,
                             const std::vector<std::vector<int>>& clusters,
                             InsertionHeuristic heuristic, double noise_lambda, Rng& rng);

/// Per-position best-node-in-cluster swaps iterated to a fixpoint; cost never
/// increases.
GtspTour localReopt(const GtspTour& tour, const ScaledCostMatrix& matrix,
                    const std::vector<std::vector<int>>& clusters);

/// Insert clusters in random order, each at its cheapest (node, position).
GtspTour makeRandomInsertionTour(const ScaledCostMatrix& matrix,
                                 const std::vector<std::vector<int>>& clusters, Rng& rng);

GtspTour glnsSolve(const ScaledCostMatrix& matrix, const std::vector<std::vector<int>>& clusters,
                   const GtspTour& seed_tour, const LnsParams& params, Rng& rng,
                   std::optional<Deadline> deadline = std::nullopt);

/// Parallel large neighborhood search with a shared current tour, incumbent,
/// termination counter, and annealing temperature, each under its own lock.
GtspTour pglnsSolve(const ScaledCostMatrix& matrix, const std::vector<std::vector<int>>& clusters,
                    const GtspTour& seed_tour, const LnsParams& params, int n_workers,
                    std::vector<Rng>& rng_streams, std::optional<Deadline> deadline = std::nullopt);

}  // namespace mttsp
