#include "mttsp/dag_dfs.hpp"

#include <algorithm>
#include <unordered_set>

namespace mttsp {

int TargetMask::count() const {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

std::size_t TargetMask::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
  return h;
}

BeforeSets computeBefore(const SamplePointGraph& graph) {
  const int n_tar = graph.clusterCount() - 1;
  BeforeSets before(graph.nodeCount(), TargetMask(n_tar));
  for (int s = 0; s < graph.nodeCount(); ++s) {
    const int owner = graph.node(s).owner;
    for (int i = 1; i <= n_tar; ++i) {
      if (i == owner) continue;
      bool reachable = false;
      for (int s2 : graph.clusters()[i]) {
        if (graph.feasible(s, s2)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) before[s].set(i);
    }
  }
  return before;
}

namespace {

struct SearchNode {
  TargetMask visited;
  int node = 0;
  int parent = -1;  // arena index of the expanded predecessor
};

struct ClosedKey {
  TargetMask mask;
  int node;
  bool operator==(const ClosedKey& o) const { return node == o.node && mask == o.mask; }
};

struct ClosedHash {
  std::size_t operator()(const ClosedKey& k) const {
    return k.mask.hash() * 31 + static_cast<std::size_t>(k.node);
  }
};

}  // namespace

std::optional<std::vector<int>> dfsSearch(const SamplePointGraph& graph, bool use_pruning,
                                          DfsStats* stats, std::int64_t max_expansions) {
  std::int64_t expansions = 0;
  const int n_tar = graph.clusterCount() - 1;
  const BeforeSets before = use_pruning ? computeBefore(graph) : BeforeSets{};
  const TargetMask empty_mask(n_tar);

  std::vector<SearchNode> arena;
  arena.push_back(SearchNode{empty_mask, 0, -1});
  std::vector<int> stack{0};
  std::unordered_set<ClosedKey, ClosedHash> closed;

  struct Cand {
    double cost;
    int node;
  };
  std::vector<Cand> cands;

  while (!stack.empty()) {
    const int u_idx = stack.back();
    stack.pop_back();
    // Arena entries are immutable once pushed; copy to survive reallocation.
    const SearchNode u = arena[u_idx];
    if (!closed.insert(ClosedKey{u.visited, u.node}).second) continue;
    ++expansions;
    if (stats) ++stats->expansions;
    if (max_expansions > 0 && expansions > max_expansions) {
      if (stats) stats->gave_up = true;
      return std::nullopt;
    }

    if (u.visited.count() == n_tar) {
      std::vector<int> order;
      for (int k = u_idx; k != -1; k = arena[k].parent) order.push_back(arena[k].node);
      std::reverse(order.begin(), order.end());
      return order;
    }

    cands.clear();
    for (int s2 = 1; s2 < graph.nodeCount(); ++s2) {
      if (!graph.feasible(u.node, s2)) continue;
      const int owner = graph.node(s2).owner;
      if (u.visited.test(owner)) continue;
      if (use_pruning && !u.visited.containsAll(before[s2])) continue;
      cands.push_back({graph.rawCost(u.node, s2), s2});
    }
    // Decreasing cost push order so the cheapest successor pops first; equal
    // costs break toward the lower node index for determinism.
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.cost != b.cost ? a.cost > b.cost : a.node > b.node;
    });
    for (const Cand& c : cands) {
      TargetMask next = u.visited;
      next.set(graph.node(c.node).owner);
      if (closed.count(ClosedKey{next, c.node})) continue;
      arena.push_back(SearchNode{std::move(next), c.node, u_idx});
      stack.push_back(static_cast<int>(arena.size()) - 1);
      if (stats) ++stats->pushes;
    }
    // The arena dominates memory; treat the expansion cap as a push cap too.
    if (max_expansions > 0 && static_cast<std::int64_t>(arena.size()) > 8 * max_expansions) {
      if (stats) stats->gave_up = true;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace mttsp
