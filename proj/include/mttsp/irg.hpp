#pragma once

#include <optional>
#include <vector>

#include "mttsp/dag_dfs.hpp"
#include "mttsp/gtsp_lns.hpp"
#include "mttsp/model.hpp"
#include "mttsp/sample_graph.hpp"
#include "mttsp/solve_log.hpp"

namespace mttsp {

enum class Algo { IrgPglns, IrgGlns, Pdg, Pcg };

struct IrgParams {
  Algo algo = Algo::IrgPglns;
  int n_rand = 16;       // fresh samples per target per outer iteration
  int n_rand_init = 8;   // samples per target per initial-tour pass
  int n_proc = 1;        // PGLNS workers, or PDG/PCG child count
  double budget_s = 30.0;
  double alpha_term = 4.0;  // n_term = alpha_term * n_cluster
  LnsParams lns;
  int max_outer_iters = 0;     // 0: run to budget
  bool wall_deadlines = true;  // off: only n_term/iteration caps (reproducible)

  /// Tuned per-mode defaults for a variant.
  static IrgParams defaults(Algo algo, Variant variant);
};

/// Best tour found so far, kept as timed interception points so it survives
/// graph rebuilds across outer iterations. points[0] is the depot.
struct Incumbent {
  std::vector<SamplePoint> points;
  double raw_cost = 0.0;
};

/// n interception points of `target`, times uniform on its window.
std::vector<SamplePoint> randomSamples(const AgentModel& agent, const Target& target, int n,
                                       Rng& rng);

/// Incumbent for a depot-first node order of `graph`; nullopt if any
/// consecutive edge is infeasible.
std::optional<Incumbent> incumbentFromOrder(const SamplePointGraph& graph,
                                            const std::vector<int>& order);

/// Grows every sample set by n_rand_init per pass and searches the graph for
/// a first feasible tour; nullopt once the deadline passes.
std::optional<Incumbent> generateInitialTour(const Instance& instance, const IrgParams& params,
                                             const Stopwatch& watch, Rng& rng,
                                             std::vector<int>* final_set_sizes = nullptr);

/// Uniform random target permutation with a uniform node per cluster;
/// nullopt when the assembled tour crosses an infeasible edge.
std::optional<Incumbent> randomTour(const SamplePointGraph& graph, Rng& rng);

/// One improvement attempt on the given sample sets: graph build, scaled
/// matrix, seeded LNS (or a cold DFS), and the random-tour guard. Never
/// returns a tour costlier than the seed.
std::optional<Incumbent> tourViaGTSP(const std::vector<std::vector<SamplePoint>>& sets,
                                     const std::optional<Incumbent>& seed,
                                     const Instance& instance, const IrgParams& params,
                                     std::optional<Deadline> deadline,
                                     std::vector<Rng>& rng_streams);

struct IrgResult {
  std::optional<Trajectory> trajectory;
  std::optional<Incumbent> incumbent;
  SolveLog log;
  long outer_iterations = 0;
};

/// Anytime outer loop for IrgPglns / IrgGlns.
IrgResult irgRun(const Instance& instance, const IrgParams& params, Rng& rng,
                 const Stopwatch& watch);

/// Independent children sharing only the initial tour; best child wins.
IrgResult pdgRun(const Instance& instance, const IrgParams& params,
                 std::vector<Rng>& rng_streams, const Stopwatch& watch);

/// Round-synchronized children exchanging informed sets between rounds.
IrgResult pcgRun(const Instance& instance, const IrgParams& params,
                 std::vector<Rng>& rng_streams, const Stopwatch& watch);

/// Dispatch on params.algo; streams[0] drives single-stream modes.
IrgResult solve(const Instance& instance, const IrgParams& params, std::vector<Rng>& rng_streams,
                const Stopwatch& watch);

/// Connects consecutive incumbent points with kinematic legs.
Trajectory trajectoryFromIncumbent(const AgentModel& agent, const Incumbent& incumbent);

}  // namespace mttsp
