#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "mttsp/instance_gen.hpp"
#include "mttsp/io.hpp"
#include "mttsp/irg.hpp"
#include "mttsp/svg_plot.hpp"

using namespace mttsp;

namespace {

GeneratedInstance sampleGen() {
  GenParams p = GenParams::defaults(Variant::CloseEnough);
  p.n_tar = 5;
  p.seed = 17;
  return generateInstance(p);
}

SolveLog sampleLog() {
  SolveLog log;
  log.record(0.25, 100.5, EventKind::Initial);
  log.record(1.0, 80.25, EventKind::Improved);
  log.record(2.5, 80.25, EventKind::Final);
  return log;
}

}  // namespace

TEST_CASE("instance JSON roundtrip is exact") {
  const GeneratedInstance gen = sampleGen();
  const std::string text = instanceToJson(gen);
  const GeneratedInstance back = instanceFromJson(text);
  CHECK(instanceToJson(back) == text);
  CHECK(back.seed == gen.seed);
  REQUIRE(back.witness.size() == gen.witness.size());
  CHECK(back.instance.targets.size() == gen.instance.targets.size());
  back.instance.validate();
}

TEST_CASE("Dubins and linear instances roundtrip too") {
  for (Variant v : {Variant::Linear, Variant::VariableSpeedDubins}) {
    GenParams p = GenParams::defaults(v);
    p.n_tar = 3;
    p.seed = 23;
    const GeneratedInstance gen =
        v == Variant::Linear ? generateLinearInstance(p) : generateInstance(p);
    const std::string text = instanceToJson(gen);
    CHECK(instanceToJson(instanceFromJson(text)) == text);
  }
}

TEST_CASE("instance hash is stable and sensitive") {
  const GeneratedInstance gen = sampleGen();
  const std::string h = instanceHash(gen);
  CHECK(h.size() == 16);
  CHECK(instanceHash(gen) == h);
  GenParams p = GenParams::defaults(Variant::CloseEnough);
  p.n_tar = 5;
  p.seed = 18;
  CHECK(instanceHash(generateInstance(p)) != h);
}

TEST_CASE("unknown schema version is rejected") {
  const GeneratedInstance gen = sampleGen();
  std::string text = instanceToJson(gen);
  const auto pos = text.find("\"schema_version\"");
  REQUIRE(pos != std::string::npos);
  text.replace(text.find(':', pos) + 1, 1, "9");
  CHECK_THROWS(instanceFromJson(text));
}

TEST_CASE("save and load through a file agree") {
  const GeneratedInstance gen = sampleGen();
  const std::string path = "/tmp/mttsp_io_test_instance.json";
  saveInstance(gen, path);
  const GeneratedInstance back = loadInstance(path);
  CHECK(instanceToJson(back) == instanceToJson(gen));
  std::remove(path.c_str());
}

TEST_CASE("solve log JSON roundtrip preserves events and metadata") {
  const SolveLog log = sampleLog();
  LogMetadata meta;
  meta.algo = "irg-pglns";
  meta.budget_s = 30.0;
  meta.seed = 42;
  meta.instance_hash = "0123456789abcdef";
  meta.n_rand = 16;
  meta.alpha_term = 4.0;
  meta.n_proc = 8;
  const std::string text = logToJson(log, meta);
  LogMetadata got;
  const SolveLog back = logFromJson(text, &got);
  REQUIRE(back.events().size() == log.events().size());
  for (std::size_t i = 0; i < log.events().size(); ++i) {
    CHECK(back.events()[i].t_wall == log.events()[i].t_wall);
    CHECK(back.events()[i].raw_cost == log.events()[i].raw_cost);
    CHECK(back.events()[i].kind == log.events()[i].kind);
  }
  CHECK(got.algo == meta.algo);
  CHECK(got.budget_s == meta.budget_s);
  CHECK(got.seed == meta.seed);
  CHECK(got.instance_hash == meta.instance_hash);
  CHECK(got.n_rand == meta.n_rand);
  CHECK(got.alpha_term == meta.alpha_term);
  CHECK(got.n_proc == meta.n_proc);
}

TEST_CASE("trajectory JSON lists the leg endpoints in order") {
  const GeneratedInstance gen = sampleGen();
  Incumbent inc;
  inc.points.push_back(SamplePoint{kDepotOwner, gen.instance.agent.q0, 0.0});
  for (const auto& w : gen.witness)
    if (w.owner != kDepotOwner) inc.points.push_back(w);
  const Trajectory traj = trajectoryFromIncumbent(gen.instance.agent, inc);
  const std::string text = trajectoryToJson(traj);
  CHECK(text.find("\"points\"") != std::string::npos);
  // One endpoint per incumbent point.
  std::size_t count = 0;
  for (std::size_t at = text.find("\"t\""); at != std::string::npos;
       at = text.find("\"t\"", at + 1))
    ++count;
  CHECK(count == inc.points.size());
}

TEST_CASE("step plot renders deterministically and embeds raw data") {
  const std::vector<PlotSeries> series = {{"a", sampleLog()}, {"b", sampleLog()}};
  const std::string svg1 = renderStepPlot(series, 3.0, "demo");
  const std::string svg2 = renderStepPlot(series, 3.0, "demo");
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") != std::string::npos);
  CHECK(svg1.find("demo") != std::string::npos);
  CHECK(svg1.find("data-name=\"a\"") != std::string::npos);
  CHECK(svg1.find("data-name=\"b\"") != std::string::npos);
  // The raw attribute carries the original time:cost pairs.
  const auto at = svg1.find("data-raw=\"");
  REQUIRE(at != std::string::npos);
  const auto end = svg1.find('"', at + 10);
  std::istringstream raw(svg1.substr(at + 10, end - at - 10));
  std::vector<std::pair<double, double>> pairs;
  std::string tok;
  while (raw >> tok) {
    const auto colon = tok.find(':');
    REQUIRE(colon != std::string::npos);
    pairs.emplace_back(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
  }
  const SolveLog log = sampleLog();
  REQUIRE(pairs.size() == log.events().size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(pairs[i].first == doctest::Approx(log.events()[i].t_wall).epsilon(1e-9));
    CHECK(pairs[i].second == doctest::Approx(log.events()[i].raw_cost).epsilon(1e-9));
  }
}

TEST_CASE("writeFile and readFile roundtrip binary-ish content") {
  const std::string path = "/tmp/mttsp_io_test_blob.txt";
  const std::string content = "line1\nline2\ttab\n";
  writeFile(path, content);
  CHECK(readFile(path) == content);
  std::remove(path.c_str());
  CHECK_THROWS(readFile(path));
}
