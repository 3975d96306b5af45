#include "rgd/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "rgd/errors.hpp"

namespace rgd {

using nlohmann::ordered_json;

void RunConfig::validate() const {
  if (group == "sl") {
    if (rank < 1) throw ConfigError("sl requires rank >= 1");
  } else if (group == "su") {
    if (witt < 1) throw ConfigError("su requires witt >= 1");
    if (dim < 2 * witt + 1) throw ConfigError("su requires dim >= 2*witt+1");
    if (!Scalar::valid_disc(disc)) throw ConfigError("disc must be a squarefree integer other than 0 and 1");
  } else {
    throw ConfigError("unknown group '" + group + "' (expected sl or su)");
  }
  if (format != "json" && format != "md") throw ConfigError("unknown format '" + format + "' (expected json or md)");
  for (const auto& s : suites)
    if (!axiom_from_tag(s)) throw ConfigError("unknown suite '" + s + "'");
  suite_config().validate();
}

SuiteConfig RunConfig::suite_config() const {
  SuiteConfig c;
  c.level_min = level_min;
  c.level_max = level_max;
  c.samples = samples;
  c.seed = seed;
  if (!suites.empty()) {
    c.suites.clear();
    for (const auto& s : suites)
      if (auto a = axiom_from_tag(s)) c.suites.push_back(*a);
  }
  return c;
}

GroupModel RunConfig::build_model() const {
  if (group == "sl") return GroupModel::split_sl(rank);
  return GroupModel::special_unitary(dim, witt, disc);
}

ordered_json model_descriptor(const GroupModel& g) {
  ordered_json m;
  m["kind"] = g.kind() == ModelKind::SplitSL ? "sl" : "su";
  m["description"] = g.description();
  m["dim"] = g.dim();
  m["witt"] = g.witt();
  m["disc"] = g.disc();
  if (g.kind() == ModelKind::SpecialUnitary) {
    ordered_json gram = ordered_json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(g.gram()(i, j).to_string());
      gram.push_back(row);
    }
    m["gram"] = gram;
  } else {
    m["gram"] = nullptr;
  }
  const RootSystem& sys = g.roots();
  m["relRootSystem"] = sys.kind() == RootKind::A ? "A" + std::to_string(sys.rank()) : "BC" + std::to_string(sys.rank());
  ordered_json roots = ordered_json::array(), dims = ordered_json::object();
  for (RootId a : sys.all()) {
    roots.push_back(sys.name(a));
    dims[sys.name(a)] = g.module_dim(a);
  }
  m["relRoots"] = roots;
  m["moduleDims"] = dims;
  return m;
}

ordered_json config_echo(const RunConfig& cfg) {
  ordered_json c;
  c["group"] = cfg.group;
  if (cfg.group == "sl") {
    c["rank"] = cfg.rank;
  } else {
    c["dim"] = cfg.dim;
    c["witt"] = cfg.witt;
    c["disc"] = cfg.disc;
  }
  c["levelMin"] = cfg.level_min;
  c["levelMax"] = cfg.level_max;
  c["samples"] = cfg.samples;
  c["seed"] = cfg.seed;
  ordered_json s = ordered_json::array();
  for (Axiom a : cfg.suite_config().suites) s.push_back(axiom_tag(a));
  c["suites"] = s;
  c["format"] = cfg.format;
  return c;
}

ordered_json suite_json(const AxiomReport& r) {
  ordered_json s;
  s["axiom"] = axiom_name(r.axiom);
  s["cases"] = r.cases;
  ordered_json f = ordered_json::array();
  for (const auto& x : r.failures) f.push_back({{"inputs", x.inputs}, {"expected", x.expected}, {"actual", x.actual}});
  s["failures"] = f;
  s["failureCount"] = r.failure_count;
  s["pass"] = r.pass();
  if (r.axiom == Axiom::RGD4) s["note"] = "structural pass";
  s["elapsed_ms"] = r.elapsed_ms;
  return s;
}

namespace {

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  cfg.validate();
  GroupModel g = cfg.build_model();
  auto reports = run_suites(g, cfg.suite_config());
  bool pass = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    suites.push_back(suite_json(r));
  }
  res.report["model"] = model_descriptor(g);
  res.report["config"] = config_echo(cfg);
  res.report["suites"] = suites;
  res.report["summary"] = {{"pass", pass}};
  res.report["timestamp"] = timestamp();
  res.exit_code = pass ? 0 : 1;
  res.text = cfg.format == "md" ? render_markdown(res.report) : res.report.dump(2) + "\n";
  return res;
}

std::string render_markdown(const ordered_json& report) {
  std::ostringstream os;
  const auto& m = report["model"];
  os << "# RGD report: " << m["description"].get<std::string>() << "\n\n";
  os << "## Model\n\n";
  os << "- kind: " << m["kind"].get<std::string>() << "\n";
  os << "- dim: " << m["dim"] << ", witt: " << m["witt"] << ", disc: " << m["disc"] << "\n";
  os << "- relative root system: " << m["relRootSystem"].get<std::string>() << "\n\n";
  if (!m["gram"].is_null()) os << "Gram matrix:\n\n";
  for (const auto& row : m["gram"]) {
    os << "|";
    for (const auto& e : row) os << " " << e.get<std::string>() << " |";
    os << "\n";
    if (&row == &m["gram"].front()) {
      os << "|";
      for (std::size_t j = 0; j < row.size(); ++j) os << "---|";
      os << "\n";
    }
  }
  os << "\n| root | module dim |\n|---|---|\n";
  for (const auto& [k, v] : m["moduleDims"].items()) os << "| " << k << " | " << v << " |\n";
  os << "\n## Config\n\n";
  for (const auto& [k, v] : report["config"].items()) os << "- " << k << ": " << v.dump() << "\n";
  os << "\n## Suites\n\n| axiom | cases | failures | result | ms |\n|---|---|---|---|---|\n";
  for (const auto& s : report["suites"]) {
    os << "| " << s["axiom"].get<std::string>() << " | " << s["cases"] << " | " << s["failureCount"] << " | "
       << (s["pass"].get<bool>() ? (s.contains("note") ? s["note"].get<std::string>() : std::string("pass")) : "FAIL")
       << " | " << s["elapsed_ms"] << " |\n";
  }
  for (const auto& s : report["suites"]) {
    if (s["failures"].empty()) continue;
    os << "\n### " << s["axiom"].get<std::string>() << " failures\n\n";
    for (const auto& f : s["failures"])
      os << "- inputs: `" << f["inputs"].get<std::string>() << "`\n  expected: `" << f["expected"].get<std::string>()
         << "`\n  actual: `" << f["actual"].get<std::string>() << "`\n";
  }
  os << "\n## Summary\n\n" << (report["summary"]["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  if (report.contains("timestamp")) os << "\ngenerated " << report["timestamp"].get<std::string>() << "\n";
  return os.str();
}

ordered_json canonical_report(ordered_json report) {
  report.erase("timestamp");
  if (report.contains("suites"))
    for (auto& s : report["suites"]) s.erase("elapsed_ms");
  return report;
}

}  // namespace rgd
