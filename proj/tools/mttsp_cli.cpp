#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>

#include "mttsp/io.hpp"
#include "mttsp/oracle.hpp"
#include "mttsp/svg_plot.hpp"

namespace {

using namespace mttsp;

int defaultWorkers() {
  if (const char* env = std::getenv("MTTSP_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

Algo algoFromName(const std::string& name) {
  if (name == "irg-pglns") return Algo::IrgPglns;
  if (name == "irg-glns") return Algo::IrgGlns;
  if (name == "pdg") return Algo::Pdg;
  if (name == "pcg") return Algo::Pcg;
  throw CLI::ValidationError("--algo", "unknown algorithm: " + name);
}

std::vector<Rng> makeStreams(std::uint64_t seed, int n) {
  Rng master(seed);
  std::vector<Rng> streams;
  for (int i = 0; i < n; ++i) streams.emplace_back(master());
  return streams;
}

SamplePointGraph gridGraph(const Instance& instance, int samples_per_target, Rng& rng,
                           bool uniform_grid) {
  std::vector<std::vector<SamplePoint>> sets(instance.targets.size());
  for (std::size_t i = 0; i < instance.targets.size(); ++i) {
    const Target& t = instance.targets[i];
    if (uniform_grid) {
      for (int k = 0; k < samples_per_target; ++k) {
        const double frac = samples_per_target == 1 ? 0.5 : double(k) / (samples_per_target - 1);
        const double tm = t.window_lo + frac * (t.window_hi - t.window_lo);
        sets[i].push_back(SamplePoint{t.id, randConfig(instance.agent, t, tm, rng), tm});
      }
    } else {
      sets[i] = randomSamples(instance.agent, t, samples_per_target, rng);
    }
  }
  return SamplePointGraph::build(instance, sets);
}

int cmdGenerate(const GenParams& params, const std::string& out) {
  GeneratedInstance gen =
      params.variant == Variant::Linear ? generateLinearInstance(params) : generateInstance(params);
  saveInstance(gen, out);
  std::cout << "wrote " << out << " (" << gen.instance.targets.size()
            << " targets, seed " << gen.seed << ", hash " << instanceHash(gen) << ")\n";
  return 0;
}

struct SolveFlags {
  std::string instance_path, algo = "irg-pglns", out;
  double budget_s = -1.0;
  int workers = 0, n_rand = -1, n_rand_init = -1, max_iters = 0;
  double alpha_term = -1.0;
  std::uint64_t seed = 0;
  bool deterministic = false;
};

int cmdSolve(const SolveFlags& f) {
  GeneratedInstance gen = loadInstance(f.instance_path);
  IrgParams params = IrgParams::defaults(algoFromName(f.algo), gen.instance.agent.variant);
  if (f.budget_s > 0) params.budget_s = f.budget_s;
  if (f.workers > 0) params.n_proc = f.workers;
  if (f.n_rand > 0) params.n_rand = f.n_rand;
  if (f.n_rand_init > 0) params.n_rand_init = f.n_rand_init;
  if (f.alpha_term > 0) params.alpha_term = f.alpha_term;
  params.max_outer_iters = f.max_iters;
  if (f.deterministic) {
    params.wall_deadlines = false;
    if (params.max_outer_iters == 0) params.max_outer_iters = 8;
  }

  Stopwatch watch = f.deterministic ? Stopwatch::counting() : Stopwatch();
  auto streams = makeStreams(f.seed, std::max(params.n_proc, 1));
  const IrgResult result = solve(gen.instance, params, streams, watch);

  LogMetadata meta;
  meta.algo = f.algo;
  meta.budget_s = params.budget_s;
  meta.seed = f.seed;
  meta.instance_hash = instanceHash(gen);
  meta.n_rand = params.n_rand;
  meta.alpha_term = params.alpha_term;
  meta.n_proc = params.n_proc;
  const std::string base = f.out.empty() ? "solve" : f.out;
  writeFile(base + ".log.json", logToJson(result.log, meta));
  if (!result.incumbent) {
    std::cout << "no feasible tour found within budget\n";
    return 2;
  }
  writeFile(base + ".traj.json", trajectoryToJson(*result.trajectory));
  std::cout << "cost " << result.incumbent->raw_cost << " after " << result.outer_iterations
            << " outer iterations; auc " << computeAUC(result.log, params.budget_s) << "\n";
  return 0;
}

int cmdOracle(const std::string& instance_path, int samples_per_target, std::uint64_t seed,
              bool uniform_grid) {
  GeneratedInstance gen = loadInstance(instance_path);
  Rng rng(seed);
  const SamplePointGraph graph = gridGraph(gen.instance, samples_per_target, rng, uniform_grid);
  const auto opt = exactGtspDp(graph);
  if (!opt) {
    std::cout << "no feasible tour on this sample graph\n";
    return 2;
  }
  std::cout << "optimal cost " << opt->raw_cost << "\norder:";
  for (int idx : opt->order) std::cout << " " << graph.node(idx).owner;
  std::cout << "\n";
  return 0;
}

int cmdTune(const std::vector<std::string>& instance_paths, const std::string& mode,
            double budget_s, std::uint64_t seed, const std::string& algo_name) {
  if (mode == "init") {
    // Report the largest final |S_1| needed by initial-tour generation when
    // sets grow by 2 per pass.
    int max_s1 = 0;
    for (const auto& path : instance_paths) {
      GeneratedInstance gen = loadInstance(path);
      IrgParams params = IrgParams::defaults(Algo::IrgGlns, gen.instance.agent.variant);
      params.n_rand_init = 2;
      params.budget_s = budget_s;
      Rng rng(seed);
      std::vector<int> sizes;
      Stopwatch watch;
      const auto inc = generateInitialTour(gen.instance, params, watch, rng, &sizes);
      const int s1 = sizes.empty() ? 0 : sizes[0];
      std::cout << path << ": |S_1| = " << s1 << (inc ? "" : " (no tour found)") << "\n";
      max_s1 = std::max(max_s1, s1);
    }
    std::cout << "max final |S_1| = " << max_s1 << "\n";
    return 0;
  }
  // Grid mode: median AUC per (n_rand, alpha_term) cell.
  const std::vector<int> grid = {1, 2, 4, 8, 16, 32, 64};
  double best_auc = std::numeric_limits<double>::infinity();
  int best_nr = 0, best_at = 0;
  std::cout << "n_rand alpha_term median_auc\n";
  for (int nr : grid) {
    for (int at : grid) {
      std::vector<double> aucs;
      for (const auto& path : instance_paths) {
        GeneratedInstance gen = loadInstance(path);
        IrgParams params =
            IrgParams::defaults(algoFromName(algo_name), gen.instance.agent.variant);
        params.n_rand = nr;
        params.alpha_term = at;
        params.budget_s = budget_s;
        auto streams = makeStreams(seed, std::max(params.n_proc, 1));
        Stopwatch watch;
        const IrgResult result = solve(gen.instance, params, streams, watch);
        aucs.push_back(result.incumbent ? computeAUC(result.log, params.budget_s)
                                        : std::numeric_limits<double>::infinity());
      }
      std::sort(aucs.begin(), aucs.end());
      const double median = aucs[aucs.size() / 2];
      std::cout << nr << " " << at << " " << median << "\n";
      if (median < best_auc) {
        best_auc = median;
        best_nr = nr;
        best_at = at;
      }
    }
  }
  std::cout << "argmin cell: n_rand=" << best_nr << " alpha_term=" << best_at
            << " median_auc=" << best_auc << "\n";
  return 0;
}

int cmdInitCompare(const std::vector<std::string>& instance_paths, double budget_s,
                   std::uint64_t seed, int samples_per_target, int workers,
                   const std::string& svg_out) {
  const std::vector<std::string> methods = {"dag-dfs", "dag-dfs-no-prune", "glns-coldstart",
                                            "pglns-coldstart"};
  std::map<std::string, SolveLog> curves;
  std::cout << "instance method time_s feasible\n";
  for (const auto& path : instance_paths) {
    GeneratedInstance gen = loadInstance(path);
    Rng rng(seed);
    const SamplePointGraph graph = gridGraph(gen.instance, samples_per_target, rng, false);
    const ScaledCostMatrix matrix = scaledMatrix(graph, std::nullopt);
    for (const auto& method : methods) {
      Stopwatch watch;
      bool feasible = false;
      double cost = 0.0;
      if (method == "dag-dfs" || method == "dag-dfs-no-prune") {
        const auto order = dfsSearch(graph, method == "dag-dfs");
        if (order) {
          feasible = true;
          cost = *tourRawCost(graph, *order);
        }
      } else {
        LnsParams lns;
        lns.n_term = 4 * graph.clusterCount();
        Rng lrng(seed);
        GtspTour cold = makeRandomInsertionTour(matrix, graph.clusters(), lrng);
        const auto deadline =
            Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(budget_s));
        GtspTour out;
        if (method == "glns-coldstart") {
          out = glnsSolve(matrix, graph.clusters(), cold, lns, lrng, deadline);
        } else {
          auto streams = makeStreams(seed, workers);
          out = pglnsSolve(matrix, graph.clusters(), cold, lns, workers, streams, deadline);
        }
        const auto raw = tourRawCost(graph, out.order);
        if (raw) {
          feasible = true;
          cost = *raw;
        }
      }
      const double elapsed = watch.elapsed();
      const double recorded = feasible ? elapsed : budget_s;  // censored at budget
      std::cout << path << " " << method << " " << recorded << " " << (feasible ? 1 : 0) << "\n";
      if (feasible) curves[method].record(recorded, cost, EventKind::Initial);
    }
  }
  if (!svg_out.empty()) {
    std::vector<PlotSeries> series;
    for (const auto& method : methods)
      if (curves.count(method)) series.push_back(PlotSeries{method, curves[method]});
    if (!series.empty()) writeFile(svg_out, renderStepPlot(series, budget_s, "time to first feasible"));
  }
  return 0;
}

int cmdPlot(const std::vector<std::string>& log_paths, double budget_s, const std::string& out) {
  std::vector<PlotSeries> series;
  for (const auto& path : log_paths) {
    LogMetadata meta;
    SolveLog log = logFromJson(readFile(path), &meta);
    if (budget_s <= 0) budget_s = meta.budget_s;
    series.push_back(PlotSeries{meta.algo.empty() ? path : meta.algo, std::move(log)});
  }
  writeFile(out, renderStepPlot(series, budget_s > 0 ? budget_s : 30.0));
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moving-target TSP solver suite"};
  app.require_subcommand(1);

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "generate a feasible instance");
  GenParams gp = GenParams::defaults(Variant::CloseEnough);
  std::string gen_variant = "close-enough";
  std::string gen_out = "instance.json";
  bool have_window = false, have_radius = false;
  gen_cmd->add_option("--variant", gen_variant)
      ->check(CLI::IsMember({"close-enough", "linear", "dubins"}));
  gen_cmd->add_option("--n-targets", gp.n_tar);
  auto* wopt = gen_cmd->add_option("--window-len", gp.window_len);
  auto* ropt = gen_cmd->add_option("--radius", gp.radius);
  gen_cmd->add_option("--v-max", gp.v_max);
  gen_cmd->add_option("--v-min", gp.v_min);
  gen_cmd->add_option("--omega-max", gp.omega_max);
  gen_cmd->add_option("--seed", gp.seed);
  gen_cmd->add_option("--out", gen_out);
  gen_cmd->callback([&] {
    have_window = wopt->count() > 0;
    have_radius = ropt->count() > 0;
  });

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run an anytime solver on an instance");
  SolveFlags sf;
  sf.workers = defaultWorkers();
  solve_cmd->add_option("--instance", sf.instance_path)->required();
  solve_cmd->add_option("--algo", sf.algo)
      ->check(CLI::IsMember({"irg-pglns", "irg-glns", "pdg", "pcg"}));
  solve_cmd->add_option("--budget-s", sf.budget_s);
  solve_cmd->add_option("--workers", sf.workers);
  solve_cmd->add_option("--seed", sf.seed);
  solve_cmd->add_option("--n-rand", sf.n_rand);
  solve_cmd->add_option("--alpha-term", sf.alpha_term);
  solve_cmd->add_option("--n-rand-init", sf.n_rand_init);
  solve_cmd->add_option("--max-iters", sf.max_iters);
  solve_cmd->add_flag("--deterministic", sf.deterministic,
                      "virtual clock + iteration cap for reproducible output");
  solve_cmd->add_option("--out", sf.out);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exact DP optimum on a sampled graph");
  std::string oracle_instance;
  int oracle_samples = 16;
  std::uint64_t oracle_seed = 0;
  bool oracle_grid = true;
  oracle_cmd->add_option("--instance", oracle_instance)->required();
  oracle_cmd->add_option("--samples-per-target", oracle_samples);
  oracle_cmd->add_option("--seed", oracle_seed);
  oracle_cmd->add_flag("!--random-times", oracle_grid,
                       "sample times randomly instead of a uniform grid");

  // tune
  auto* tune_cmd = app.add_subcommand("tune", "parameter tuning harness");
  std::vector<std::string> tune_instances;
  std::string tune_mode = "grid";
  std::string tune_algo = "irg-pglns";
  double tune_budget = 5.0;
  std::uint64_t tune_seed = 0;
  tune_cmd->add_option("--instances", tune_instances)->required();
  tune_cmd->add_option("--mode", tune_mode)->check(CLI::IsMember({"init", "grid"}));
  tune_cmd->add_option("--algo", tune_algo);
  tune_cmd->add_option("--budget-s", tune_budget);
  tune_cmd->add_option("--seed", tune_seed);

  // init-compare
  auto* ic_cmd = app.add_subcommand("init-compare", "initial-tour method comparison");
  std::vector<std::string> ic_instances;
  double ic_budget = 10.0;
  std::uint64_t ic_seed = 0;
  int ic_samples = 8;
  int ic_workers = defaultWorkers();
  std::string ic_svg;
  ic_cmd->add_option("--instances", ic_instances)->required();
  ic_cmd->add_option("--budget-s", ic_budget);
  ic_cmd->add_option("--seed", ic_seed);
  ic_cmd->add_option("--samples-per-target", ic_samples);
  ic_cmd->add_option("--workers", ic_workers);
  ic_cmd->add_option("--svg", ic_svg);

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "render solve logs as an SVG step plot");
  std::vector<std::string> plot_logs;
  std::string plot_out = "plot.svg";
  double plot_budget = -1.0;
  plot_cmd->add_option("--logs", plot_logs)->required();
  plot_cmd->add_option("--budget-s", plot_budget);
  plot_cmd->add_option("--out", plot_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) {
      GenParams params = GenParams::defaults(
          gen_variant == "linear"   ? Variant::Linear
          : gen_variant == "dubins" ? Variant::VariableSpeedDubins
                                    : Variant::CloseEnough);
      params.n_tar = gp.n_tar;
      params.seed = gp.seed;
      params.v_max = gp.v_max;
      params.v_min = gp.v_min;
      params.omega_max = gp.omega_max;
      if (have_window) params.window_len = gp.window_len;
      if (have_radius) params.radius = gp.radius;
      return cmdGenerate(params, gen_out);
    }
    if (solve_cmd->parsed()) return cmdSolve(sf);
    if (oracle_cmd->parsed())
      return cmdOracle(oracle_instance, oracle_samples, oracle_seed, oracle_grid);
    if (tune_cmd->parsed())
      return cmdTune(tune_instances, tune_mode, tune_budget, tune_seed, tune_algo);
    if (ic_cmd->parsed())
      return cmdInitCompare(ic_instances, ic_budget, ic_seed, ic_samples, ic_workers, ic_svg);
    if (plot_cmd->parsed()) return cmdPlot(plot_logs, plot_budget, plot_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
