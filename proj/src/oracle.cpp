#include "mttsp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mttsp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::optional<OracleResult> exactGtspDp(const SamplePointGraph& graph) {
  const int n_tar = graph.clusterCount() - 1;
  const int n_nodes = graph.nodeCount();
  if (n_tar >= 63 ||
      static_cast<std::uint64_t>(n_nodes) << n_tar > (1ULL << 24))
    throw std::invalid_argument("exactGtspDp: state space exceeds 2^24");

  const std::uint64_t n_masks = 1ULL << n_tar;
  // dp[mask * n_nodes + s]: cheapest cost of a depot-first path visiting
  // exactly the targets in mask and ending at node s.
  std::vector<double> dp(n_masks * n_nodes, kInf);
  std::vector<int> parent(n_masks * n_nodes, -1);
  dp[0] = 0.0;  // mask 0, depot

  for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
    for (int s = 0; s < n_nodes; ++s) {
      const double base = dp[mask * n_nodes + s];
      if (base == kInf) continue;
      for (int t = 1; t <= n_tar; ++t) {
        if (mask & (1ULL << (t - 1))) continue;
        const std::uint64_t next_mask = mask | (1ULL << (t - 1));
        for (int s2 : graph.clusters()[t]) {
          if (!graph.feasible(s, s2)) continue;
          const double cost = base + graph.rawCost(s, s2);
          double& slot = dp[next_mask * n_nodes + s2];
          if (cost < slot) {
            slot = cost;
            parent[next_mask * n_nodes + s2] = s;
          }
        }
      }
    }
  }

  const std::uint64_t full = n_masks - 1;
  double best_cost = kInf;
  int best_end = -1;
  for (int s = 1; s < n_nodes; ++s) {
    const double c = dp[full * n_nodes + s];
    if (c < best_cost) {
      best_cost = c;
      best_end = s;
    }
  }
  if (best_end < 0) return std::nullopt;

  OracleResult res;
  res.raw_cost = best_cost;
  std::uint64_t mask = full;
  int s = best_end;
  while (s != 0 || mask != 0) {
    res.order.push_back(s);
    const int prev = parent[mask * n_nodes + s];
    mask &= ~(1ULL << (graph.node(s).owner - 1));
    s = prev;
  }
  res.order.push_back(0);
  std::reverse(res.order.begin(), res.order.end());
  return res;
}

namespace {

void enumerateRec(const SamplePointGraph& graph, std::vector<bool>& used_target,
                  std::vector<int>& order, double cost, std::vector<OracleResult>& out) {
  const int n_tar = graph.clusterCount() - 1;
  if (static_cast<int>(order.size()) == n_tar + 1) {
    out.push_back(OracleResult{order, cost});
    return;
  }
  const int last = order.back();
  for (int t = 1; t <= n_tar; ++t) {
    if (used_target[t]) continue;
    for (int s2 : graph.clusters()[t]) {
      if (!graph.feasible(last, s2)) continue;
      used_target[t] = true;
      order.push_back(s2);
      enumerateRec(graph, used_target, order, cost + graph.rawCost(last, s2), out);
      order.pop_back();
      used_target[t] = false;
    }
  }
}

}  // namespace

std::vector<OracleResult> enumerateTours(const SamplePointGraph& graph) {
  const int n_tar = graph.clusterCount() - 1;
  if (n_tar > 7) throw std::invalid_argument("enumerateTours: too many targets");
  for (int c = 1; c <= n_tar; ++c)
    if (graph.clusters()[c].size() > 4)
      throw std::invalid_argument("enumerateTours: cluster too large");

  std::vector<OracleResult> out;
  std::vector<bool> used(n_tar + 1, false);
  std::vector<int> order{0};
  enumerateRec(graph, used, order, 0.0, out);
  std::sort(out.begin(), out.end(), [](const OracleResult& a, const OracleResult& b) {
    return a.raw_cost != b.raw_cost ? a.raw_cost < b.raw_cost : a.order < b.order;
  });
  return out;
}

}  // namespace mttsp
