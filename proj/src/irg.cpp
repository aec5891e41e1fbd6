#include "mttsp/irg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mttsp {

IrgParams IrgParams::defaults(Algo algo, Variant variant) {
  const bool dubins = variant == Variant::VariableSpeedDubins;
  IrgParams p;
  p.algo = algo;
  p.n_rand_init = dubins ? 42 : 8;
  p.budget_s = dubins ? 60.0 : 30.0;
  switch (algo) {
    case Algo::IrgGlns:
      p.n_rand = 32;
      p.alpha_term = dubins ? 16.0 : 4.0;
      p.n_proc = 1;
      break;
    case Algo::Pdg:
      p.n_rand = dubins ? 2 : 8;
      p.alpha_term = dubins ? 4.0 : 1.0;
      p.n_proc = 8;
      break;
    case Algo::IrgPglns:
      p.n_rand = dubins ? 32 : 16;
      p.alpha_term = dubins ? 64.0 : 4.0;
      p.n_proc = 8;
      break;
    case Algo::Pcg:
      p.n_rand = dubins ? 4 : 16;
      p.alpha_term = dubins ? 8.0 : 4.0;
      p.n_proc = 8;
      break;
  }
  return p;
}

std::vector<SamplePoint> randomSamples(const AgentModel& agent, const Target& target, int n,
                                       Rng& rng) {
  std::vector<SamplePoint> out;
  out.reserve(n);
  std::uniform_real_distribution<double> time_dist(target.window_lo, target.window_hi);
  for (int k = 0; k < n; ++k) {
    const double t = time_dist(rng);
    out.push_back(SamplePoint{target.id, randConfig(agent, target, t, rng), t});
  }
  return out;
}

std::optional<Incumbent> incumbentFromOrder(const SamplePointGraph& graph,
                                            const std::vector<int>& order) {
  const auto cost = tourRawCost(graph, order);
  if (!cost) return std::nullopt;
  Incumbent inc;
  inc.raw_cost = *cost;
  for (int idx : order) inc.points.push_back(graph.node(idx));
  return inc;
}

namespace {

const SamplePoint& pointForTarget(const Incumbent& inc, int target_id) {
  for (const SamplePoint& p : inc.points)
    if (p.owner == target_id) return p;
  throw std::logic_error("incumbent misses a target point");
}

int graphWorkers(const IrgParams& params) {
  return params.algo == Algo::IrgPglns ? params.n_proc : 1;
}

std::optional<Deadline> remainingDeadline(const IrgParams& params, const Stopwatch& watch) {
  if (!params.wall_deadlines) return std::nullopt;
  const double left = params.budget_s - watch.elapsed();
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(std::max(left, 0.0)));
}

}  // namespace

std::optional<Incumbent> generateInitialTour(const Instance& instance, const IrgParams& params,
                                             const Stopwatch& watch, Rng& rng,
                                             std::vector<int>* final_set_sizes) {
  const int n_tar = static_cast<int>(instance.targets.size());
  std::vector<std::vector<SamplePoint>> fresh(n_tar);
  std::optional<SamplePointGraph> graph;
  std::vector<int> set_sizes(n_tar, 0);
  while (watch.elapsed() < params.budget_s) {
    for (int i = 0; i < n_tar; ++i) {
      fresh[i] = randomSamples(instance.agent, instance.targets[i], params.n_rand_init, rng);
      set_sizes[i] += params.n_rand_init;
    }
    if (!graph) {
      graph = SamplePointGraph::build(instance, fresh, graphWorkers(params));
    } else {
      graph->addSamples(instance, fresh, graphWorkers(params));
    }
    if (auto order = dfsSearch(*graph)) {
      if (final_set_sizes) *final_set_sizes = set_sizes;
      return incumbentFromOrder(*graph, *order);
    }
  }
  if (final_set_sizes) *final_set_sizes = set_sizes;
  return std::nullopt;
}

std::optional<Incumbent> randomTour(const SamplePointGraph& graph, Rng& rng) {
  const int n_tar = graph.clusterCount() - 1;
  std::vector<int> perm(n_tar);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> order{0};
  for (int c : perm) {
    const auto& cluster = graph.clusters()[c];
    order.push_back(cluster[std::uniform_int_distribution<std::size_t>(0, cluster.size() - 1)(rng)]);
  }
  for (std::size_t k = 0; k + 1 < order.size(); ++k)
    if (!graph.feasible(order[k], order[k + 1])) return std::nullopt;
  return incumbentFromOrder(graph, order);
}

std::optional<Incumbent> tourViaGTSP(const std::vector<std::vector<SamplePoint>>& sets,
                                     const std::optional<Incumbent>& seed,
                                     const Instance& instance, const IrgParams& params,
                                     std::optional<Deadline> deadline,
                                     std::vector<Rng>& rng_streams) {
  SamplePointGraph graph = SamplePointGraph::build(instance, sets, graphWorkers(params));
  const int n_cluster = graph.clusterCount();

  std::optional<Incumbent> best = seed;
  std::optional<std::int64_t> seed_scaled;
  std::vector<int> seed_order;
  if (seed) {
    for (const SamplePoint& p : seed->points) {
      const int idx = graph.findNode(p);
      if (idx < 0) throw std::logic_error("tourViaGTSP: seed point missing from sample sets");
      seed_order.push_back(idx);
    }
    std::int64_t scaled = 0;
    for (std::size_t k = 0; k + 1 < seed_order.size(); ++k)
      scaled += scaleCost(graph.rawCost(seed_order[k], seed_order[k + 1]));
    seed_scaled = scaled;
  }

  const ScaledCostMatrix matrix = scaledMatrix(graph, seed_scaled);

  std::optional<std::vector<int>> solver_order;
  if (seed) {
    LnsParams lns = params.lns;
    lns.n_term = std::max(1, static_cast<int>(std::lround(params.alpha_term * n_cluster)));
    GtspTour seed_tour{seed_order, computeScaledCost(matrix, seed_order)};
    GtspTour out;
    if (params.algo == Algo::IrgPglns) {
      out = pglnsSolve(matrix, graph.clusters(), seed_tour, lns, params.n_proc, rng_streams,
                       deadline);
    } else {
      out = glnsSolve(matrix, graph.clusters(), seed_tour, lns, rng_streams[0], deadline);
    }
    solver_order = out.order;
  } else {
    solver_order = dfsSearch(graph);
  }

  auto consider = [&](const std::optional<Incumbent>& cand) {
    if (cand && (!best || cand->raw_cost < best->raw_cost)) best = cand;
  };
  if (solver_order) consider(incumbentFromOrder(graph, *solver_order));
  consider(randomTour(graph, rng_streams[0]));
  return best;
}

Trajectory trajectoryFromIncumbent(const AgentModel& agent, const Incumbent& incumbent) {
  Trajectory traj;
  for (std::size_t k = 0; k + 1 < incumbent.points.size(); ++k) {
    const SamplePoint& a = incumbent.points[k];
    const SamplePoint& b = incumbent.points[k + 1];
    auto leg = getTraj(agent, a.config, a.time, b.config, b.time);
    if (!leg) throw std::logic_error("incumbent contains an infeasible edge");
    traj.legs.push_back(std::move(*leg));
  }
  return traj;
}

namespace {

// The shared anytime outer loop: resample around the incumbent, attempt an
// improvement, log strict improvements. Mutates `incumbent` in place.
long outerLoop(const Instance& instance, const IrgParams& params, Incumbent& incumbent,
               std::vector<Rng>& rng_streams, const Stopwatch& watch, SolveLog& log) {
  const int n_tar = static_cast<int>(instance.targets.size());
  long iters = 0;
  while (watch.elapsed() < params.budget_s &&
         (params.max_outer_iters == 0 || iters < params.max_outer_iters)) {
    ++iters;
    std::vector<std::vector<SamplePoint>> sets(n_tar);
    for (int i = 0; i < n_tar; ++i) {
      const Target& target = instance.targets[i];
      sets[i].push_back(pointForTarget(incumbent, target.id));
      auto fresh = randomSamples(instance.agent, target, params.n_rand, rng_streams[0]);
      sets[i].insert(sets[i].end(), fresh.begin(), fresh.end());
    }
    auto result = tourViaGTSP(sets, incumbent, instance, params,
                              remainingDeadline(params, watch), rng_streams);
    assert(result && result->raw_cost <= incumbent.raw_cost);
    if (result && result->raw_cost < incumbent.raw_cost) {
      incumbent = *result;
      log.record(watch.elapsed(), incumbent.raw_cost, EventKind::Improved);
    }
  }
  return iters;
}

IrgResult finishRun(const Instance& instance, std::optional<Incumbent> incumbent, SolveLog log,
                    const Stopwatch& watch, long iters) {
  IrgResult res;
  res.outer_iterations = iters;
  res.log = std::move(log);
  if (incumbent) {
    res.log.record(watch.elapsed(), incumbent->raw_cost, EventKind::Final);
    res.trajectory = trajectoryFromIncumbent(instance.agent, *incumbent);
    res.incumbent = std::move(incumbent);
  }
  return res;
}

}  // namespace

IrgResult irgRun(const Instance& instance, const IrgParams& params, Rng& rng,
                 const Stopwatch& watch) {
  if (params.algo != Algo::IrgPglns && params.algo != Algo::IrgGlns)
    throw std::invalid_argument("irgRun: algo must be IrgPglns or IrgGlns");
  SolveLog log;
  auto incumbent = generateInitialTour(instance, params, watch, rng);
  if (!incumbent) return finishRun(instance, std::nullopt, std::move(log), watch, 0);
  log.record(watch.elapsed(), incumbent->raw_cost, EventKind::Initial);

  std::vector<Rng> streams;
  if (params.algo == Algo::IrgPglns) {
    for (int w = 0; w < params.n_proc; ++w) streams.emplace_back(rng());
  } else {
    streams.push_back(rng);  // serial mode continues the caller's stream
  }
  const long iters = outerLoop(instance, params, *incumbent, streams, watch, log);
  if (params.algo != Algo::IrgPglns) rng = streams[0];
  return finishRun(instance, std::move(incumbent), std::move(log), watch, iters);
}

IrgResult pdgRun(const Instance& instance, const IrgParams& params,
                 std::vector<Rng>& rng_streams, const Stopwatch& watch) {
  if (params.algo != Algo::Pdg) throw std::invalid_argument("pdgRun: algo must be Pdg");
  if (static_cast<int>(rng_streams.size()) < params.n_proc)
    throw std::invalid_argument("pdgRun: one rng stream per child required");
  SolveLog init_log;
  auto initial = generateInitialTour(instance, params, watch, rng_streams[0]);
  if (!initial) return finishRun(instance, std::nullopt, std::move(init_log), watch, 0);
  init_log.record(watch.elapsed(), initial->raw_cost, EventKind::Initial);

  IrgParams child_params = params;
  child_params.algo = Algo::IrgGlns;  // serial LNS inside every child
  child_params.n_proc = 1;

  std::vector<Incumbent> child_best(params.n_proc, *initial);
  std::vector<SolveLog> child_logs(params.n_proc);
  std::vector<long> child_iters(params.n_proc, 0);
  auto runChild = [&](int j) {
    std::vector<Rng> one{rng_streams[j]};
    child_iters[j] =
        outerLoop(instance, child_params, child_best[j], one, watch, child_logs[j]);
    rng_streams[j] = one[0];
  };
  if (params.n_proc == 1) {
    runChild(0);
  } else {
    std::vector<std::thread> children;
    for (int j = 0; j < params.n_proc; ++j) children.emplace_back(runChild, j);
    for (auto& t : children) t.join();
  }

  child_logs.push_back(std::move(init_log));
  SolveLog merged = mergeLogs(child_logs);
  const auto best = std::min_element(
      child_best.begin(), child_best.end(),
      [](const Incumbent& a, const Incumbent& b) { return a.raw_cost < b.raw_cost; });
  const long iters = std::accumulate(child_iters.begin(), child_iters.end(), 0L);
  return finishRun(instance, *best, std::move(merged), watch, iters);
}

IrgResult pcgRun(const Instance& instance, const IrgParams& params,
                 std::vector<Rng>& rng_streams, const Stopwatch& watch) {
  if (params.algo != Algo::Pcg) throw std::invalid_argument("pcgRun: algo must be Pcg");
  if (static_cast<int>(rng_streams.size()) < params.n_proc)
    throw std::invalid_argument("pcgRun: one rng stream per worker required");
  SolveLog log;
  auto incumbent = generateInitialTour(instance, params, watch, rng_streams[0]);
  if (!incumbent) return finishRun(instance, std::nullopt, std::move(log), watch, 0);
  log.record(watch.elapsed(), incumbent->raw_cost, EventKind::Initial);

  const int n_tar = static_cast<int>(instance.targets.size());
  std::vector<std::vector<SamplePoint>> informed(n_tar);
  for (int i = 0; i < n_tar; ++i)
    informed[i].push_back(pointForTarget(*incumbent, instance.targets[i].id));

  IrgParams worker_params = params;
  worker_params.algo = Algo::IrgGlns;  // serial LNS inside every worker
  worker_params.n_proc = 1;

  long rounds = 0;
  while (watch.elapsed() < params.budget_s &&
         (params.max_outer_iters == 0 || rounds < params.max_outer_iters)) {
    ++rounds;
    std::vector<std::optional<Incumbent>> results(params.n_proc);
    auto runWorker = [&](int j) {
      std::vector<std::vector<SamplePoint>> sets = informed;
      for (int i = 0; i < n_tar; ++i) {
        auto fresh =
            randomSamples(instance.agent, instance.targets[i], params.n_rand, rng_streams[j]);
        sets[i].insert(sets[i].end(), fresh.begin(), fresh.end());
      }
      std::vector<Rng> one{rng_streams[j]};
      results[j] = tourViaGTSP(sets, incumbent, instance, worker_params,
                               remainingDeadline(params, watch), one);
      rng_streams[j] = one[0];
    };
    if (params.n_proc == 1) {
      runWorker(0);
    } else {
      std::vector<std::thread> workers;
      for (int j = 0; j < params.n_proc; ++j) workers.emplace_back(runWorker, j);
      for (auto& t : workers) t.join();  // round barrier
    }

    for (int i = 0; i < n_tar; ++i) informed[i].clear();
    int cheapest = -1;
    for (int j = 0; j < params.n_proc; ++j) {
      if (!results[j]) continue;
      for (int i = 0; i < n_tar; ++i) {
        const SamplePoint& p = pointForTarget(*results[j], instance.targets[i].id);
        if (std::find(informed[i].begin(), informed[i].end(), p) == informed[i].end())
          informed[i].push_back(p);
      }
      if (cheapest < 0 || results[j]->raw_cost < results[cheapest]->raw_cost) cheapest = j;
    }
    if (cheapest >= 0) {
      // The incumbent becomes the round's cheapest tour even on cost ties, so
      // its points are always members of the rebuilt informed sets.
      if (results[cheapest]->raw_cost < incumbent->raw_cost)
        log.record(watch.elapsed(), results[cheapest]->raw_cost, EventKind::Improved);
      incumbent = results[cheapest];
    }
    for (int i = 0; i < n_tar; ++i) {
      const SamplePoint& p = pointForTarget(*incumbent, instance.targets[i].id);
      assert(std::find(informed[i].begin(), informed[i].end(), p) != informed[i].end());
      (void)p;
    }
  }
  return finishRun(instance, std::move(incumbent), std::move(log), watch, rounds);
}

IrgResult solve(const Instance& instance, const IrgParams& params, std::vector<Rng>& rng_streams,
                const Stopwatch& watch) {
  switch (params.algo) {
    case Algo::IrgPglns:
    case Algo::IrgGlns:
      return irgRun(instance, params, rng_streams[0], watch);
    case Algo::Pdg:
      return pdgRun(instance, params, rng_streams, watch);
    case Algo::Pcg:
      return pcgRun(instance, params, rng_streams, watch);
  }
  throw std::invalid_argument("solve: unknown algo");
}

}  // namespace mttsp
