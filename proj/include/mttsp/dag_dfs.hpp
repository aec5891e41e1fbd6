#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mttsp/sample_graph.hpp"

namespace mttsp {

/// Visited-target set as a multiword bitmask (bit i-1 for target id i).
class TargetMask {
 public:
  TargetMask() = default;
  explicit TargetMask(int n_targets) : words_((n_targets + 63) / 64, 0) {}

  void set(int target_id) { words_[(target_id - 1) >> 6] |= 1ULL << ((target_id - 1) & 63); }
  bool test(int target_id) const {
    return words_[(target_id - 1) >> 6] & (1ULL << ((target_id - 1) & 63));
  }
  bool containsAll(const TargetMask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (other.words_[w] & ~words_[w]) return false;
    return true;
  }
  int count() const;
  bool operator==(const TargetMask& o) const { return words_ == o.words_; }
  std::size_t hash() const;

 private:
  std::vector<std::uint64_t> words_;
};

/// BEFORE[s]: targets with no sample point reachable from s; they must all be
/// visited before s can appear in a tour.
using BeforeSets = std::vector<TargetMask>;

BeforeSets computeBefore(const SamplePointGraph& graph);

struct DfsStats {
  std::int64_t expansions = 0;
  std::int64_t pushes = 0;
  bool gave_up = false;  // hit max_expansions before resolving feasibility
};

/// Depth-first search over (visited set, last node) states for a first
/// feasible depot-first tour; nullopt when none exists. BEFORE pruning can be
/// disabled for the ablation comparison. A positive max_expansions bounds the
/// search; hitting it returns nullopt with stats->gave_up set.
std::optional<std::vector<int>> dfsSearch(const SamplePointGraph& graph, bool use_pruning = true,
                                          DfsStats* stats = nullptr,
                                          std::int64_t max_expansions = 0);

}  // namespace mttsp
