#include "mttsp/gtsp_lns.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mttsp {

std::int64_t computeScaledCost(const ScaledCostMatrix& matrix, const std::vector<int>& order) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) total += matrix.at(order[k], order[k + 1]);
  return total;
}

AnnealState setTempAndCooling(int i_warm, int n_term, std::int64_t seed_cost,
                              const LnsParams& params) {
  const double cost = static_cast<double>(std::max<std::int64_t>(seed_cost, 1));
  const double beta = params.beta_init * std::pow(params.beta_decay, i_warm - 1);
  AnnealState s;
  s.theta = beta * cost / std::log(2.0);
  double theta_final = params.beta_final * cost / std::log(2.0);
  // Later warm trials can start below the nominal floor; keep cooling anyway.
  theta_final = std::min(theta_final, 0.5 * s.theta);
  s.r_cool = std::pow(theta_final / s.theta, 1.0 / std::max(1, n_term));
  return s;
}

bool accept(std::int64_t candidate_cost, std::int64_t current_cost, double theta, Rng& rng) {
  if (candidate_cost <= current_cost) return true;
  if (theta <= 0.0) return false;
  const double p = std::exp(-static_cast<double>(candidate_cost - current_cost) / theta);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

namespace {

std::vector<int> clusterOfNode(const std::vector<std::vector<int>>& clusters, int n_nodes) {
  std::vector<int> owner(n_nodes, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (int v : clusters[c]) owner[v] = static_cast<int>(c);
  return owner;
}

double symCost(const ScaledCostMatrix& m, int a, int b) {
  return static_cast<double>(std::min(m.at(a, b), m.at(b, a)));
}

// Cost increase of dropping position p from the tour (always >= removing at
// the end, where there is no successor edge).
std::int64_t detourAt(const ScaledCostMatrix& m, const std::vector<int>& order, std::size_t p) {
  const int prev = order[p - 1];
  const int x = order[p];
  if (p + 1 == order.size()) return m.at(prev, x);
  const int next = order[p + 1];
  return m.at(prev, x) + m.at(x, next) - m.at(prev, next);
}

}  // namespace

RemovalResult removeNodes(const std::vector<int>& order, const ScaledCostMatrix& matrix,
                          const std::vector<std::vector<int>>& clusters, int k,
                          RemovalHeuristic heuristic, Rng& rng) {
  const int removable = static_cast<int>(order.size()) - 1;  // depot stays
  k = std::clamp(k, 1, removable);
  const std::vector<int> owner = clusterOfNode(clusters, matrix.n);

  std::vector<std::size_t> positions;  // positions in `order` to drop
  switch (heuristic) {
    case RemovalHeuristic::Segment: {
      const std::size_t start =
          std::uniform_int_distribution<std::size_t>(1, order.size() - k)(rng);
      for (int j = 0; j < k; ++j) positions.push_back(start + j);
      break;
    }
    case RemovalHeuristic::Distance: {
      const std::size_t seed_pos =
          std::uniform_int_distribution<std::size_t>(1, order.size() - 1)(rng);
      const int seed_node = order[seed_pos];
      std::vector<std::size_t> all;
      for (std::size_t p = 1; p < order.size(); ++p) all.push_back(p);
      std::sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
        const double da = symCost(matrix, seed_node, order[a]);
        const double db = symCost(matrix, seed_node, order[b]);
        return da != db ? da < db : a < b;
      });
      positions.assign(all.begin(), all.begin() + k);
      break;
    }
    case RemovalHeuristic::Worst: {
      std::vector<int> work = order;
      std::vector<int> dropped;
      for (int j = 0; j < k; ++j) {
        std::size_t worst = 1;
        std::int64_t worst_detour = detourAt(matrix, work, 1);
        for (std::size_t p = 2; p < work.size(); ++p) {
          const std::int64_t d = detourAt(matrix, work, p);
          if (d > worst_detour) {
            worst_detour = d;
            worst = p;
          }
        }
        dropped.push_back(work[worst]);
        work.erase(work.begin() + worst);
      }
      RemovalResult res;
      res.order = std::move(work);
      for (int v : dropped) res.removed_clusters.push_back(owner[v]);
      return res;
    }
    case RemovalHeuristic::Random: {
      std::vector<std::size_t> all;
      for (std::size_t p = 1; p < order.size(); ++p) all.push_back(p);
      std::shuffle(all.begin(), all.end(), rng);
      positions.assign(all.begin(), all.begin() + k);
      break;
    }
  }

  std::sort(positions.begin(), positions.end());
  RemovalResult res;
  std::size_t next_drop = 0;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (next_drop < positions.size() && positions[next_drop] == p) {
      res.removed_clusters.push_back(owner[order[p]]);
      ++next_drop;
    } else {
      res.order.push_back(order[p]);
    }
  }
  return res;
}

namespace {

struct Insertion {
  int node = -1;
  std::size_t pos = 0;       // insert before order[pos]; pos == size appends
  std::int64_t delta = 0;    // exact cost increase
  double noisy = 0.0;
};

Insertion bestInsertionForCluster(const std::vector<int>& order, const ScaledCostMatrix& m,
                                  const std::vector<int>& cluster, double noise_lambda, Rng& rng) {
  Insertion best;
  bool have = false;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int x : cluster) {
    for (std::size_t p = 1; p <= order.size(); ++p) {
      std::int64_t delta;
      if (p == order.size()) {
        delta = m.at(order.back(), x);
      } else {
        delta = m.at(order[p - 1], x) + m.at(x, order[p]) - m.at(order[p - 1], order[p]);
      }
      const double noisy =
          (1.0 + (noise_lambda > 0.0 ? unif(rng) * noise_lambda : 0.0)) *
          static_cast<double>(delta);
      if (!have || noisy < best.noisy ||
          (noisy == best.noisy && (x < best.node || (x == best.node && p < best.pos)))) {
        best = Insertion{x, p, delta, noisy};
        have = true;
      }
    }
  }
  return best;
}

double clusterToTourDistance(const std::vector<int>& order, const ScaledCostMatrix& m,
                             const std::vector<int>& cluster) {
  double d = std::numeric_limits<double>::infinity();
  for (int x : cluster)
    for (int u : order) d = std::min(d, symCost(m, u, x));
  return d;
}

}  // namespace

std::vector<int> insertNodes(std::vector<int> order, std::vector<int> missing_clusters,
                             const ScaledCostMatrix& matrix,
                             const std::vector<std::vector<int>>& clusters,
                             InsertionHeuristic heuristic, double noise_lambda, Rng& rng) {
  while (!missing_clusters.empty()) {
    std::size_t chosen = 0;
    Insertion ins;
    switch (heuristic) {
      case InsertionHeuristic::Cheapest: {
        bool have = false;
        for (std::size_t i = 0; i < missing_clusters.size(); ++i) {
          Insertion cand = bestInsertionForCluster(order, matrix, clusters[missing_clusters[i]],
                                                   noise_lambda, rng);
          if (!have || cand.noisy < ins.noisy) {
            ins = cand;
            chosen = i;
            have = true;
          }
        }
        break;
      }
      case InsertionHeuristic::Nearest:
      case InsertionHeuristic::Farthest: {
        double best_d = 0.0;
        bool have = false;
        for (std::size_t i = 0; i < missing_clusters.size(); ++i) {
          const double d = clusterToTourDistance(order, matrix, clusters[missing_clusters[i]]);
          const bool better = heuristic == InsertionHeuristic::Nearest ? d < best_d : d > best_d;
          if (!have || better) {
            best_d = d;
            chosen = i;
            have = true;
          }
        }
        ins = bestInsertionForCluster(order, matrix, clusters[missing_clusters[chosen]],
                                      noise_lambda, rng);
        break;
      }
      case InsertionHeuristic::Random: {
        chosen = std::uniform_int_distribution<std::size_t>(0, missing_clusters.size() - 1)(rng);
        ins = bestInsertionForCluster(order, matrix, clusters[missing_clusters[chosen]],
                                      noise_lambda, rng);
        break;
      }
    }
    order.insert(order.begin() + ins.pos, ins.node);
    missing_clusters.erase(missing_clusters.begin() + chosen);
  }
  return order;
}

GtspTour localReopt(const GtspTour& tour, const ScaledCostMatrix& matrix,
                    const std::vector<std::vector<int>>& clusters) {
  const std::vector<int> owner = clusterOfNode(clusters, matrix.n);
  GtspTour out = tour;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 1; p < out.order.size(); ++p) {
      const int prev = out.order[p - 1];
      const int cur = out.order[p];
      const int next = p + 1 < out.order.size() ? out.order[p + 1] : -1;
      auto linkCost = [&](int x) {
        return matrix.at(prev, x) + (next >= 0 ? matrix.at(x, next) : 0);
      };
      int best_node = cur;
      std::int64_t best_cost = linkCost(cur);
      for (int x : clusters[owner[cur]]) {
        const std::int64_t c = linkCost(x);
        if (c < best_cost || (c == best_cost && x < best_node)) {
          best_cost = c;
          best_node = x;
        }
      }
      if (best_node != cur) {
        out.order[p] = best_node;
        changed = true;
      }
    }
  }
  out.scaled_cost = computeScaledCost(matrix, out.order);
  assert(out.scaled_cost <= tour.scaled_cost);
  return out;
}

GtspTour makeRandomInsertionTour(const ScaledCostMatrix& matrix,
                                 const std::vector<std::vector<int>>& clusters, Rng& rng) {
  std::vector<int> missing(clusters.size() - 1);
  std::iota(missing.begin(), missing.end(), 1);
  std::shuffle(missing.begin(), missing.end(), rng);
  GtspTour tour;
  tour.order = {clusters[0].front()};
  for (int c : missing) {
    const Insertion ins = bestInsertionForCluster(tour.order, matrix, clusters[c], 0.0, rng);
    tour.order.insert(tour.order.begin() + ins.pos, ins.node);
  }
  tour.scaled_cost = computeScaledCost(matrix, tour.order);
  return tour;
}

namespace {

constexpr RemovalHeuristic kRemovalBank[] = {RemovalHeuristic::Segment, RemovalHeuristic::Distance,
                                             RemovalHeuristic::Worst, RemovalHeuristic::Random};
constexpr InsertionHeuristic kInsertionBank[] = {
    InsertionHeuristic::Cheapest, InsertionHeuristic::Nearest, InsertionHeuristic::Farthest,
    InsertionHeuristic::Random};

struct HeuristicWeights {
  std::array<double, 4> removal{1.0, 1.0, 1.0, 1.0};
  std::array<double, 4> insertion{1.0, 1.0, 1.0, 1.0};
};

struct HeuristicScores {
  std::array<double, 4> removal_score{};
  std::array<double, 4> insertion_score{};
  std::array<int, 4> removal_uses{};
  std::array<int, 4> insertion_uses{};

  void merge(const HeuristicScores& o) {
    for (int i = 0; i < 4; ++i) {
      removal_score[i] += o.removal_score[i];
      insertion_score[i] += o.insertion_score[i];
      removal_uses[i] += o.removal_uses[i];
      insertion_uses[i] += o.insertion_uses[i];
    }
  }
};

int pickWeighted(const std::array<double, 4>& w, Rng& rng) {
  const double total = w[0] + w[1] + w[2] + w[3];
  double u = std::uniform_real_distribution<double>(0.0, total)(rng);
  for (int i = 0; i < 3; ++i) {
    u -= w[i];
    if (u < 0.0) return i;
  }
  return 3;
}

void blendWeights(HeuristicWeights& weights, const HeuristicScores& scores) {
  constexpr double kReaction = 0.2;
  for (int i = 0; i < 4; ++i) {
    if (scores.removal_uses[i] > 0)
      weights.removal[i] = (1.0 - kReaction) * weights.removal[i] +
                           kReaction * scores.removal_score[i] / scores.removal_uses[i];
    if (scores.insertion_uses[i] > 0)
      weights.insertion[i] = (1.0 - kReaction) * weights.insertion[i] +
                             kReaction * scores.insertion_score[i] / scores.insertion_uses[i];
    weights.removal[i] = std::max(weights.removal[i], 0.05);
    weights.insertion[i] = std::max(weights.insertion[i], 0.05);
  }
}

// Shared search state; each field has its own lock and no worker ever holds
// two locks at once.
struct SharedState {
  std::mutex m_current, m_best, m_term, m_theta;
  GtspTour current, best;
  long i_term = 1;
  bool improved = false;
  bool broke = false;
  double theta = 1.0;
  double r_cool = 1.0;
};

void lnsWorker(int worker_id, const ScaledCostMatrix& matrix,
               const std::vector<std::vector<int>>& clusters, const LnsParams& params,
               int max_removals, SharedState& shared, Rng& rng, HeuristicScores& scores,
               const HeuristicWeights& weights, std::optional<Deadline> deadline) {
  int iter = 0;
  while (true) {
    if (deadline && (iter % 64) == 0 && Clock::now() >= *deadline) {
      std::lock_guard lk(shared.m_term);
      shared.broke = true;
      return;
    }
    ++iter;
    if (params.stop_at_cost > std::numeric_limits<std::int64_t>::min()) {
      bool reached;
      {
        std::lock_guard lk(shared.m_best);
        reached = shared.best.scaled_cost <= params.stop_at_cost;
      }
      if (reached) {
        std::lock_guard lk(shared.m_term);
        shared.broke = true;
        return;
      }
    }
    {
      std::lock_guard lk(shared.m_term);
      if (shared.broke) return;
      const double limit = shared.improved ? params.n_term / 4.0 : params.n_term / 6.0;
      if (shared.i_term > limit) {
        shared.broke = true;
        return;
      }
    }

    const int hr = pickWeighted(weights.removal, rng);
    const int hi = pickWeighted(weights.insertion, rng);
    ++scores.removal_uses[hr];
    ++scores.insertion_uses[hi];
    const int k = std::uniform_int_distribution<int>(1, max_removals)(rng);

    GtspTour candidate;
    std::int64_t current_cost;
    {
      std::lock_guard lk(shared.m_current);
      candidate = shared.current;
    }
    RemovalResult partial =
        removeNodes(candidate.order, matrix, clusters, k, kRemovalBank[hr], rng);
    candidate.order = insertNodes(std::move(partial.order), std::move(partial.removed_clusters),
                                  matrix, clusters, kInsertionBank[hi], params.noise_lambda, rng);
    candidate.scaled_cost = computeScaledCost(matrix, candidate.order);

    double theta;
    {
      std::lock_guard lk(shared.m_theta);
      theta = shared.theta;
      if (params.cool_per_worker_iteration || worker_id == 0) shared.theta *= shared.r_cool;
    }

    bool accepted = false;
    {
      std::lock_guard lk(shared.m_current);
      current_cost = shared.current.scaled_cost;
      if (accept(candidate.scaled_cost, current_cost, theta, rng)) {
        shared.current = candidate;
        accepted = true;
      }
    }

    bool new_best = false;
    if (accepted) {
      scores.removal_score[hr] += 10.0;
      scores.insertion_score[hi] += 10.0;
      if (candidate.scaled_cost < current_cost) {
        scores.removal_score[hr] += 10.0;
        scores.insertion_score[hi] += 10.0;
      }
      {
        std::lock_guard lk(shared.m_best);
        if (candidate.scaled_cost < shared.best.scaled_cost) {
          shared.best = candidate;
          new_best = true;
        }
      }
      if (new_best) {
        scores.removal_score[hr] += 10.0;
        scores.insertion_score[hi] += 10.0;
        {
          std::lock_guard lk(shared.m_term);
          shared.i_term = 1;
          shared.improved = true;
        }
        GtspTour polished = localReopt(candidate, matrix, clusters);
        if (polished.scaled_cost < candidate.scaled_cost) {
          {
            std::lock_guard lk(shared.m_best);
            if (polished.scaled_cost < shared.best.scaled_cost) shared.best = polished;
          }
          std::lock_guard lk(shared.m_current);
          if (polished.scaled_cost < shared.current.scaled_cost) shared.current = polished;
        }
      }
    }
    if (!new_best) {
      std::lock_guard lk(shared.m_term);
      ++shared.i_term;
    }
  }
}

}  // namespace

GtspTour pglnsSolve(const ScaledCostMatrix& matrix, const std::vector<std::vector<int>>& clusters,
                    const GtspTour& seed_tour, const LnsParams& params, int n_workers,
                    std::vector<Rng>& rng_streams, std::optional<Deadline> deadline) {
  if (seed_tour.order.size() != clusters.size() || seed_tour.order.empty() ||
      seed_tour.order[0] != clusters[0].front())
    throw std::invalid_argument("pglnsSolve: seed tour must be depot-first over all clusters");
  if (static_cast<int>(rng_streams.size()) < n_workers)
    throw std::invalid_argument("pglnsSolve: one rng stream per worker required");
  if (clusters.size() <= 1) return seed_tour;

  const int n_cluster = static_cast<int>(clusters.size());
  // Floor of 3: on small instances a single-cluster move cannot re-sequence
  // the tour, and the search stalls in permutation-local optima.
  const int max_removals = std::clamp(
      std::max(3, static_cast<int>(std::ceil(params.max_removal_fraction * n_cluster))), 1,
      n_cluster - 1);

  SharedState shared;
  shared.best = seed_tour;
  shared.best.scaled_cost = computeScaledCost(matrix, seed_tour.order);
  HeuristicWeights weights;

  for (int i_warm = 1; i_warm <= params.n_warm; ++i_warm) {
    if (deadline && Clock::now() >= *deadline) break;
    if (shared.best.scaled_cost <= params.stop_at_cost) break;
    shared.current = shared.best;
    shared.i_term = 1;
    shared.improved = false;
    shared.broke = false;
    const AnnealState anneal =
        setTempAndCooling(i_warm, params.n_term, shared.best.scaled_cost, params);
    shared.theta = anneal.theta;
    shared.r_cool = anneal.r_cool;

    std::vector<HeuristicScores> trial_scores(n_workers);
    if (n_workers == 1) {
      lnsWorker(0, matrix, clusters, params, max_removals, shared, rng_streams[0],
                trial_scores[0], weights, deadline);
    } else {
      std::vector<std::thread> workers;
      workers.reserve(n_workers);
      for (int w = 0; w < n_workers; ++w)
        workers.emplace_back(lnsWorker, w, std::cref(matrix), std::cref(clusters),
                             std::cref(params), max_removals, std::ref(shared),
                             std::ref(rng_streams[w]), std::ref(trial_scores[w]),
                             std::cref(weights), deadline);
      for (auto& t : workers) t.join();
    }

    if (params.adaptive_weights) {
      HeuristicScores merged;
      for (const auto& s : trial_scores) merged.merge(s);
      blendWeights(weights, merged);
    }
  }
  return shared.best;
}

GtspTour glnsSolve(const ScaledCostMatrix& matrix, const std::vector<std::vector<int>>& clusters,
                   const GtspTour& seed_tour, const LnsParams& params, Rng& rng,
                   std::optional<Deadline> deadline) {
  std::vector<Rng> streams{rng};
  GtspTour result = pglnsSolve(matrix, clusters, seed_tour, params, 1, streams, deadline);
  rng = streams[0];  // keep the caller's stream advanced
  return result;
}

}  // namespace mttsp
