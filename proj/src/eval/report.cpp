#include <cstdio>

#include "json.hpp"
#include "symgoal/eval/eval.hpp"

namespace symgoal::eval {
namespace {

using Json = nlohmann::ordered_json;

std::string row(const std::string& label, const Counts& c) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-18s %6zu", label.c_str(), c.trials);
  std::string out = buf;
  for (Stage s : kAllStages) {
    std::snprintf(buf, sizeof buf, " %6.1f", c.percent(s));
    out += buf;
  }
  return out + "\n";
}

std::string header(const char* first) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-18s %6s", first, "trials");
  std::string out = buf;
  for (Stage s : kAllStages) {
    std::snprintf(buf, sizeof buf, " %6s", std::string(to_string(s)).c_str());
    out += buf;
  }
  return out + "\n";
}

Json counts_json(const Counts& c) {
  Json j;
  j["trials"] = c.trials;
  for (Stage s : kAllStages) j[std::string(to_string(s))] = c.percent(s);
  return j;
}

Json goal_json(const goal::GoalTriple& g) {
  return {{"action", goal::to_string(g.action)}, {"subject", g.subject}, {"object", g.object}};
}

}  // namespace

std::string report_text(const MetricsReport& report) {
  std::string out = header("level");
  for (sim::Level level : sim::kAllLevels) {
    if (auto it = report.levels.find(level); it != report.levels.end()) {
      out += row(std::string(sim::to_string(level)), it->second);
    }
  }
  out += row("VSR", report.valid);
  out += row("ISR", report.invalid);
  out += row("SR", report.overall);
  out += "\n" + header("task/level");
  for (const auto& [key, counts] : report.cells) {
    out += row(std::string(goal::to_string(key.first)) + "/" + std::string(sim::to_string(key.second)), counts);
  }
  return out;
}

std::string report_json(const MetricsReport& report, const std::vector<TrialRecord>& records, int indent) {
  Json j;
  j["schema"] = "symgoal.metrics";
  j["version"] = 1;
  j["levels"] = Json::object();
  for (sim::Level level : sim::kAllLevels) {
    if (auto it = report.levels.find(level); it != report.levels.end()) {
      j["levels"][std::string(sim::to_string(level))] = counts_json(it->second);
    }
  }
  j["vsr"] = counts_json(report.valid);
  j["isr"] = counts_json(report.invalid);
  j["sr"] = counts_json(report.overall);
  j["tasks"] = Json::object();
  for (const auto& [key, counts] : report.cells) {
    j["tasks"][std::string(goal::to_string(key.first))][std::string(sim::to_string(key.second))] =
        counts_json(counts);
  }
  j["trials"] = Json::array();
  for (const auto& r : records) {
    Json t;
    t["task"] = goal::to_string(r.task);
    t["level"] = sim::to_string(r.level);
    t["seed"] = r.seed;
    t["request"] = r.request;
    t["gold"] = goal_json(r.gold);
    t["predicted"] = r.predicted ? goal_json(*r.predicted) : Json(nullptr);
    if (!r.note.empty()) t["note"] = r.note;
    t["outcome"] = planner::to_string(r.outcome);
    t["plan"] = r.plan;
    t["perception_ok"] = r.perception_ok;
    t["goal_ok"] = r.goal_ok;
    t["plan_ok"] = r.plan_ok;
    t["exec_ok"] = r.exec_ok;
    j["trials"].push_back(std::move(t));
  }
  return j.dump(indent) + "\n";
}

}  // namespace symgoal::eval
