#include <doctest.h>

#include <cmath>

#include "mttsp/instance_gen.hpp"
#include "mttsp/io.hpp"
#include "mttsp/oracle.hpp"

using namespace mttsp;

TEST_CASE("fitCubicSpline through two points is the straight segment") {
  const BSpline2 s = fitCubicSpline({{{0.0, 0.0}, 0.0}, {{4.0, 2.0}, 2.0}});
  for (double t = 0.0; t <= 2.0; t += 0.1) {
    const Vec2 p = s.evaluate(t);
    CHECK(p.x == doctest::Approx(2.0 * t).epsilon(1e-9));
    CHECK(p.y == doctest::Approx(1.0 * t).epsilon(1e-9));
  }
}

TEST_CASE("fitCubicSpline interpolates every through-point") {
  const std::vector<std::pair<Vec2, double>> pts = {
      {{0, 0}, 0.0}, {{3, 1}, 1.0}, {{2, 4}, 2.5}, {{-1, 3}, 4.0}, {{0, 0}, 6.0}};
  const BSpline2 s = fitCubicSpline(pts);
  for (const auto& [q, t] : pts) {
    const Vec2 p = s.evaluate(t);
    CHECK(p.x == doctest::Approx(q.x).epsilon(1e-9));
    CHECK(p.y == doctest::Approx(q.y).epsilon(1e-9));
  }
}

TEST_CASE("fitCubicSpline rejects degenerate inputs") {
  CHECK_THROWS(fitCubicSpline({{{0, 0}, 0.0}}));                      // one point
  CHECK_THROWS(fitCubicSpline({{{0, 0}, 1.0}, {{1, 1}, 1.0}}));       // tied times
  CHECK_THROWS(fitCubicSpline({{{0, 0}, 2.0}, {{1, 1}, 1.0}}));       // decreasing
}

TEST_CASE("maxSpeedBound is exact for linear motion and safe for splines") {
  CHECK(maxSpeedBound(LinearTrajectory{{0, 0}, {3.0, 4.0}}) == doctest::Approx(5.0));
  CHECK(maxSpeedBound(LinearTrajectory{{7, -2}, {0.0, 0.0}}) == doctest::Approx(0.0));

  const BSpline2 s = fitCubicSpline(
      {{{0, 0}, 0.0}, {{5, 2}, 3.0}, {{1, 6}, 7.0}, {{-2, 1}, 10.0}});
  const double bound = maxSpeedBound(TargetTrajectory{s});
  const BSpline2 d = s.derivative();
  double max_fd = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double t = 10.0 * i / 10000.0;
    max_fd = std::max(max_fd, d.evaluate(t).norm());
  }
  CHECK(bound >= max_fd - 1e-9);
}

TEST_CASE("generation is deterministic per seed and differs across seeds") {
  GenParams p = GenParams::defaults(Variant::CloseEnough);
  p.n_tar = 6;
  p.seed = 77;
  const std::string a = instanceToJson(generateInstance(p));
  const std::string b = instanceToJson(generateInstance(p));
  CHECK(a == b);
  p.seed = 78;
  CHECK(instanceToJson(generateInstance(p)) != a);
}

TEST_CASE("generated close-enough instances validate and carry a working witness") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    GenParams p = GenParams::defaults(Variant::CloseEnough);
    p.n_tar = 8;
    p.seed = seed;
    const GeneratedInstance gen = generateInstance(p);
    gen.instance.validate();
    REQUIRE(gen.witness.size() == gen.instance.targets.size() + 1);
    CHECK(gen.witness[0].owner == kDepotOwner);
    double prev_time = gen.witness[0].time;
    for (std::size_t i = 1; i < gen.witness.size(); ++i) {
      const auto& w = gen.witness[i];
      const Target& t = gen.instance.targets[w.owner - 1];
      CHECK(w.time > prev_time);
      CHECK(w.time >= t.window_lo);
      CHECK(w.time <= t.window_hi);
      CHECK(interceptionCheck(gen.instance.agent, t, w.config, w.time));
      // Consecutive witness hops must be kinematically reachable.
      CHECK(edgeCostRaw(gen.instance.agent, gen.witness[i - 1].config, prev_time, w.config,
                        w.time));
      prev_time = w.time;
    }
  }
}

TEST_CASE("linear variant uses exact-position targets on straight lines") {
  GenParams p = GenParams::defaults(Variant::Linear);
  p.n_tar = 6;
  p.seed = 9;
  const GeneratedInstance gen = generateLinearInstance(p);
  gen.instance.validate();
  CHECK(gen.instance.agent.variant == Variant::Linear);
  for (const Target& t : gen.instance.targets) {
    CHECK(t.radius == 0.0);
    CHECK(std::holds_alternative<LinearTrajectory>(t.traj));
    // Targets respect the generator's speed band.
    const double v = maxSpeedBound(t.traj);
    CHECK(v <= p.target_speed_hi + 1e-9);
  }
  for (std::size_t i = 1; i < gen.witness.size(); ++i) {
    const auto& w = gen.witness[i];
    CHECK(interceptionCheck(gen.instance.agent, gen.instance.targets[w.owner - 1], w.config,
                            w.time));
  }
}

TEST_CASE("Dubins variant witnesses include headings and validate") {
  GenParams p = GenParams::defaults(Variant::VariableSpeedDubins);
  p.n_tar = 4;
  p.seed = 5;
  const GeneratedInstance gen = generateInstance(p);
  gen.instance.validate();
  REQUIRE(gen.instance.agent.q0.heading);
  for (std::size_t i = 1; i < gen.witness.size(); ++i) {
    const auto& w = gen.witness[i];
    REQUIRE(w.config.heading);
    CHECK(interceptionCheck(gen.instance.agent, gen.instance.targets[w.owner - 1], w.config,
                            w.time));
  }
}

TEST_CASE("target speeds never exceed the agent's maximum") {
  GenParams p = GenParams::defaults(Variant::CloseEnough);
  p.n_tar = 10;
  p.seed = 21;
  const GeneratedInstance gen = generateInstance(p);
  for (const Target& t : gen.instance.targets) CHECK(maxSpeedBound(t.traj) <= p.v_max + 1e-9);
}

TEST_CASE("a sampled grid over a small generated instance is solvable") {
  GenParams p = GenParams::defaults(Variant::CloseEnough);
  p.n_tar = 4;
  p.seed = 13;
  const GeneratedInstance gen = generateInstance(p);
  // Uniform time grid per target, boundary point toward the depot.
  Rng rng(1);
  std::vector<std::vector<SamplePoint>> sets(gen.instance.targets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Target& t = gen.instance.targets[i];
    for (int k = 0; k < 4; ++k) {
      const double time = t.window_lo + (t.window_hi - t.window_lo) * (k + 0.5) / 4.0;
      sets[i].push_back(SamplePoint{t.id, randConfig(gen.instance.agent, t, time, rng), time});
    }
  }
  const auto g = SamplePointGraph::build(gen.instance, sets);
  const auto dp = exactGtspDp(g);
  // The generator's slack bound plus dense-enough sampling keeps this solvable.
  CHECK(dp);
}
