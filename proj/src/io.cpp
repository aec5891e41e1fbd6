#include "mttsp/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace mttsp {

using nlohmann::json;

namespace {

constexpr int kInstanceSchema = 1;
constexpr int kLogSchema = 1;

std::string variantName(Variant v) {
  switch (v) {
    case Variant::CloseEnough: return "close-enough";
    case Variant::Linear: return "linear";
    case Variant::VariableSpeedDubins: return "dubins";
  }
  return "?";
}

Variant variantFromName(const std::string& name) {
  if (name == "close-enough") return Variant::CloseEnough;
  if (name == "linear") return Variant::Linear;
  if (name == "dubins") return Variant::VariableSpeedDubins;
  throw std::invalid_argument("unknown variant: " + name);
}

json vecToJson(const Vec2& v) { return json::array({v.x, v.y}); }
Vec2 vecFromJson(const json& j) { return Vec2{j.at(0).get<double>(), j.at(1).get<double>()}; }

json configToJson(const AgentConfig& q) {
  json j;
  j["position"] = vecToJson(q.position);
  if (q.heading) j["heading"] = *q.heading;
  return j;
}

AgentConfig configFromJson(const json& j) {
  AgentConfig q;
  q.position = vecFromJson(j.at("position"));
  if (j.contains("heading")) q.heading = j.at("heading").get<double>();
  return q;
}

json trajToJson(const TargetTrajectory& traj) {
  json j;
  if (const auto* lin = std::get_if<LinearTrajectory>(&traj)) {
    j["kind"] = "linear";
    j["p0"] = vecToJson(lin->p0);
    j["vel"] = vecToJson(lin->vel);
  } else {
    const auto& spline = std::get<BSpline2>(traj);
    j["kind"] = "spline";
    j["degree"] = spline.degree();
    j["knots"] = spline.knots();
    json ctrl = json::array();
    for (const Vec2& p : spline.controlPoints()) ctrl.push_back(vecToJson(p));
    j["control_points"] = std::move(ctrl);
  }
  return j;
}

TargetTrajectory trajFromJson(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear")
    return LinearTrajectory{vecFromJson(j.at("p0")), vecFromJson(j.at("vel"))};
  if (kind != "spline") throw std::invalid_argument("unknown trajectory kind: " + kind);
  std::vector<Vec2> ctrl;
  for (const auto& p : j.at("control_points")) ctrl.push_back(vecFromJson(p));
  return BSpline2(j.at("degree").get<int>(), j.at("knots").get<std::vector<double>>(),
                  std::move(ctrl));
}

json pointToJson(const SamplePoint& p) {
  json j = configToJson(p.config);
  j["owner"] = p.owner;
  j["time"] = p.time;
  return j;
}

SamplePoint pointFromJson(const json& j) {
  return SamplePoint{j.at("owner").get<int>(), configFromJson(j), j.at("time").get<double>()};
}

json instanceJson(const GeneratedInstance& gen) {
  const Instance& inst = gen.instance;
  json j;
  j["schema_version"] = kInstanceSchema;
  j["variant"] = variantName(inst.agent.variant);
  json agent = configToJson(inst.agent.q0);
  agent["v_max"] = inst.agent.v_max;
  if (inst.agent.variant == Variant::VariableSpeedDubins) {
    agent["v_min"] = inst.agent.v_min;
    agent["omega_max"] = inst.agent.omega_max;
    agent["speed_set"] = inst.agent.speed_set;
  }
  j["agent"] = std::move(agent);
  json targets = json::array();
  for (const Target& t : inst.targets) {
    json tj;
    tj["id"] = t.id;
    tj["window"] = json::array({t.window_lo, t.window_hi});
    tj["radius"] = t.radius;
    tj["traj"] = trajToJson(t.traj);
    targets.push_back(std::move(tj));
  }
  j["targets"] = std::move(targets);
  j["seed"] = gen.seed;
  j["generator_version"] = 1;
  json witness = json::array();
  for (const SamplePoint& p : gen.witness) witness.push_back(pointToJson(p));
  j["witness"] = std::move(witness);
  return j;
}

}  // namespace

std::string instanceToJson(const GeneratedInstance& gen) { return instanceJson(gen).dump(2) + "\n"; }

GeneratedInstance instanceFromJson(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema_version").get<int>() != kInstanceSchema)
    throw std::invalid_argument("unsupported instance schema version");
  GeneratedInstance gen;
  Instance& inst = gen.instance;
  inst.agent.variant = variantFromName(j.at("variant").get<std::string>());
  const json& agent = j.at("agent");
  inst.agent.q0 = configFromJson(agent);
  inst.agent.v_max = agent.at("v_max").get<double>();
  if (inst.agent.variant == Variant::VariableSpeedDubins) {
    inst.agent.v_min = agent.at("v_min").get<double>();
    inst.agent.omega_max = agent.at("omega_max").get<double>();
    inst.agent.speed_set = agent.at("speed_set").get<std::vector<double>>();
  }
  for (const auto& tj : j.at("targets")) {
    Target t;
    t.id = tj.at("id").get<int>();
    t.window_lo = tj.at("window").at(0).get<double>();
    t.window_hi = tj.at("window").at(1).get<double>();
    t.radius = tj.at("radius").get<double>();
    t.traj = trajFromJson(tj.at("traj"));
    inst.targets.push_back(std::move(t));
  }
  gen.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("witness"))
    for (const auto& pj : j.at("witness")) gen.witness.push_back(pointFromJson(pj));
  inst.validate();
  return gen;
}

void saveInstance(const GeneratedInstance& gen, const std::string& path) {
  writeFile(path, instanceToJson(gen));
}

GeneratedInstance loadInstance(const std::string& path) {
  return instanceFromJson(readFile(path));
}

std::string instanceHash(const GeneratedInstance& gen) {
  const std::string canon = instanceJson(gen).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string logToJson(const SolveLog& log, const LogMetadata& meta) {
  json j;
  j["schema_version"] = kLogSchema;
  j["algo"] = meta.algo;
  j["budget_s"] = meta.budget_s;
  j["seed"] = meta.seed;
  j["instance_hash"] = meta.instance_hash;
  j["params"] = {{"n_rand", meta.n_rand}, {"alpha_term", meta.alpha_term}, {"n_proc", meta.n_proc}};
  json events = json::array();
  for (const SolveEvent& e : log.events())
    events.push_back({{"t_wall", e.t_wall}, {"raw_cost", e.raw_cost}, {"kind", kindName(e.kind)}});
  j["events"] = std::move(events);
  return j.dump(2) + "\n";
}

SolveLog logFromJson(const std::string& text, LogMetadata* meta) {
  const json j = json::parse(text);
  if (j.at("schema_version").get<int>() != kLogSchema)
    throw std::invalid_argument("unsupported log schema version");
  if (meta) {
    meta->algo = j.value("algo", std::string{});
    meta->budget_s = j.value("budget_s", 0.0);
    meta->seed = j.value("seed", std::uint64_t{0});
    meta->instance_hash = j.value("instance_hash", std::string{});
    const json params = j.value("params", json::object());
    meta->n_rand = params.value("n_rand", 0);
    meta->alpha_term = params.value("alpha_term", 0.0);
    meta->n_proc = params.value("n_proc", 0);
  }
  SolveLog log;
  for (const auto& ej : j.at("events")) {
    const std::string kind = ej.at("kind").get<std::string>();
    EventKind k = kind == "initial"  ? EventKind::Initial
                  : kind == "final" ? EventKind::Final
                                    : EventKind::Improved;
    log.record(ej.at("t_wall").get<double>(), ej.at("raw_cost").get<double>(), k);
  }
  return log;
}

std::string trajectoryToJson(const Trajectory& traj) {
  json j;
  j["schema_version"] = 1;
  j["cost"] = traj.cost();
  json points = json::array();
  auto push = [&](const AgentConfig& q, double t) {
    json pj = configToJson(q);
    pj["t"] = t;
    points.push_back(std::move(pj));
  };
  for (std::size_t k = 0; k < traj.legs.size(); ++k) {
    if (k == 0) push(traj.legs[k].from, traj.legs[k].t_from);
    push(traj.legs[k].to, traj.legs[k].t_to);
  }
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mttsp
