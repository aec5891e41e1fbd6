#include "mttsp/sample_graph.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mttsp {

namespace {
constexpr double kInfeasible = std::numeric_limits<double>::quiet_NaN();
}

SamplePointGraph SamplePointGraph::build(const Instance& instance,
                                         const std::vector<std::vector<SamplePoint>>& sets,
                                         int n_workers) {
  SamplePointGraph g;
  g.nodes_.push_back(SamplePoint{kDepotOwner, instance.agent.q0, 0.0});
  g.clusters_.resize(sets.size() + 1);
  g.clusters_[0] = {0};
  g.addSamples(instance, sets, n_workers);
  for (std::size_t c = 1; c < g.clusters_.size(); ++c)
    if (g.clusters_[c].empty())
      throw std::invalid_argument("SamplePointGraph: every target needs >= 1 sample point");
  return g;
}

void SamplePointGraph::addSamples(const Instance& instance,
                                  const std::vector<std::vector<SamplePoint>>& sets,
                                  int n_workers) {
  if (sets.size() + 1 != clusters_.size())
    throw std::invalid_argument("addSamples: cluster count mismatch");
  const int first_new = nodeCount();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Target& target = instance.targets[i];
    for (const SamplePoint& p : sets[i]) {
      if (p.owner != target.id) throw std::invalid_argument("sample point owner mismatch");
      if (!interceptionCheck(instance.agent, target, p.config, p.time))
        throw std::invalid_argument("sample point does not intercept its target");
      clusters_[i + 1].push_back(static_cast<int>(nodes_.size()));
      nodes_.push_back(p);
    }
  }
  const int n = nodeCount();
  std::vector<double> grown(static_cast<std::size_t>(n) * n, kInfeasible);
  if (stride_ > 0) {
    for (int a = 0; a < first_new; ++a)
      for (int b = 0; b < first_new; ++b) grown[a * n + b] = raw_cost_[a * stride_ + b];
  }
  raw_cost_ = std::move(grown);
  stride_ = n;
  evaluateEdges(instance, first_new, n_workers);
}

void SamplePointGraph::evaluateEdges(const Instance& instance, int first_new_node, int n_workers) {
  const int n = nodeCount();
  auto evalRow = [&](int a) {
    const SamplePoint& pa = nodes_[a];
    const int b_begin = a < first_new_node ? first_new_node : 1;  // never into depot
    for (int b = b_begin; b < n; ++b) {
      const SamplePoint& pb = nodes_[b];
      if (pa.owner == pb.owner) continue;
      if (pb.time <= pa.time) continue;  // backward or simultaneous: skip geometry
      const auto cost = edgeCostRaw(instance.agent, pa.config, pa.time, pb.config, pb.time);
      if (cost) raw_cost_[a * stride_ + b] = *cost;
    }
  };
  n_workers = std::max(1, std::min(n_workers, n));
  if (n_workers == 1) {
    for (int a = 0; a < n; ++a) evalRow(a);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) {
    workers.emplace_back([&, w] {
      for (int a = w; a < n; a += n_workers) evalRow(a);
    });
  }
  for (auto& t : workers) t.join();
}

int SamplePointGraph::findNode(const SamplePoint& p) const {
  if (p.owner < 0 || p.owner >= clusterCount()) return -1;
  for (int idx : clusters_[p.owner])
    if (nodes_[idx] == p) return idx;
  return -1;
}

std::int64_t scaleCost(double raw) { return std::llround(raw * 100.0); }

ScaledCostMatrix scaledMatrix(const SamplePointGraph& graph,
                              std::optional<std::int64_t> incumbent_scaled_cost) {
  const int n = graph.nodeCount();
  ScaledCostMatrix m;
  m.n = n;
  m.cost.assign(static_cast<std::size_t>(n) * n, 0);
  std::int64_t max_scaled = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (graph.feasible(a, b)) max_scaled = std::max(max_scaled, scaleCost(graph.rawCost(a, b)));
  if (incumbent_scaled_cost) {
    m.big_cost = *incumbent_scaled_cost + 1;
  } else {
    m.big_cost = static_cast<std::int64_t>(graph.clusterCount()) * max_scaled;
    m.big_cost = std::max<std::int64_t>(m.big_cost, 1);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.cost[a * n + b] = graph.feasible(a, b) ? scaleCost(graph.rawCost(a, b)) : m.big_cost;
  return m;
}

std::optional<double> tourRawCost(const SamplePointGraph& graph, const std::vector<int>& order) {
  if (order.size() != static_cast<std::size_t>(graph.clusterCount()) || order.empty() ||
      order[0] != 0)
    throw std::invalid_argument("tourRawCost: tour must be depot-first with one node per cluster");
  std::vector<bool> seen(graph.clusterCount(), false);
  for (int idx : order) {
    const int owner = graph.node(idx).owner;
    if (seen[owner]) throw std::invalid_argument("tourRawCost: cluster visited twice");
    seen[owner] = true;
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (!graph.feasible(order[k], order[k + 1])) return std::nullopt;
    total += graph.rawCost(order[k], order[k + 1]);
  }
  return total;
}

std::string toGtspLib(const ScaledCostMatrix& matrix, const std::vector<std::vector<int>>& clusters,
                      const std::string& name) {
  std::ostringstream out;
  out << "NAME: " << name << "\n"
      << "TYPE: AGTSP\n"
      << "DIMENSION: " << matrix.n << "\n"
      << "GTSP_SETS: " << clusters.size() << "\n"
      << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
      << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
      << "EDGE_WEIGHT_SECTION\n";
  for (int a = 0; a < matrix.n; ++a) {
    for (int b = 0; b < matrix.n; ++b) out << (b ? " " : "") << matrix.at(a, b);
    out << "\n";
  }
  out << "GTSP_SET_SECTION\n";
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    out << (c + 1);
    for (int idx : clusters[c]) out << " " << (idx + 1);
    out << " -1\n";
  }
  out << "EOF\n";
  return out.str();
}

GtspLibInstance parseGtspLib(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int dimension = -1;
  int n_sets = -1;
  GtspLibInstance result;
  auto valueAfterColon = [](const std::string& s) {
    return std::stoi(s.substr(s.find(':') + 1));
  };
  while (std::getline(in, line)) {
    if (line.rfind("DIMENSION", 0) == 0) dimension = valueAfterColon(line);
    else if (line.rfind("GTSP_SETS", 0) == 0) n_sets = valueAfterColon(line);
    else if (line.rfind("EDGE_WEIGHT_SECTION", 0) == 0) {
      if (dimension <= 0) throw std::invalid_argument("GTSPLIB: DIMENSION missing");
      result.matrix.n = dimension;
      result.matrix.cost.resize(static_cast<std::size_t>(dimension) * dimension);
      for (auto& v : result.matrix.cost) in >> v;
      std::getline(in, line);  // consume trailing newline
    } else if (line.rfind("GTSP_SET_SECTION", 0) == 0) {
      if (n_sets <= 0) throw std::invalid_argument("GTSPLIB: GTSP_SETS missing");
      result.clusters.resize(n_sets);
      for (int c = 0; c < n_sets; ++c) {
        int set_id;
        in >> set_id;
        int v;
        while (in >> v && v != -1) result.clusters[set_id - 1].push_back(v - 1);
      }
    }
  }
  if (result.matrix.n == 0 || result.clusters.empty())
    throw std::invalid_argument("GTSPLIB: missing sections");
  std::int64_t max_cost = 0;
  for (auto v : result.matrix.cost) max_cost = std::max(max_cost, v);
  result.matrix.big_cost = max_cost;
  return result;
}

}  // namespace mttsp
