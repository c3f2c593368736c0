#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/text/datasets.hpp"
#include "symgoal/util/io.hpp"

namespace symgoal::text {
namespace {

constexpr std::string_view kTrainingKeys[] = {"explicit-complete", "missing-object", "missing-action",
                                              "high-level-verb",   "anaphora",       "implicit-intent"};

std::vector<std::string> pattern_list(const nlohmann::json& node, std::string_view where, bool needs_object) {
  std::vector<std::string> out = node.get<std::vector<std::string>>();
  if (out.empty()) throw SchemaError("no templates for " + std::string(where));
  for (const auto& p : out) {
    if (p.find("{s}") == std::string::npos) throw SchemaError("template without {s} in " + std::string(where));
    if (needs_object && p.find("{o}") == std::string::npos) {
      throw SchemaError("template without {o} in " + std::string(where));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Style style) {
  switch (style) {
    case Style::ExplicitComplete: return "explicit-complete";
    case Style::ExplicitIncomplete: return "explicit-incomplete";
    case Style::ImplicitIntent: return "implicit-intent";
  }
  return "?";
}

std::string_view to_string(IncompleteMode mode) {
  switch (mode) {
    case IncompleteMode::None: return "none";
    case IncompleteMode::MissingObject: return "missing-object";
    case IncompleteMode::MissingAction: return "missing-action";
    case IncompleteMode::HighLevelVerb: return "high-level-verb";
    case IncompleteMode::Anaphora: return "anaphora";
  }
  return "?";
}

Style parse_style(std::string_view text) {
  for (Style s : {Style::ExplicitComplete, Style::ExplicitIncomplete, Style::ImplicitIntent}) {
    if (to_string(s) == text) return s;
  }
  throw SchemaError("unknown style " + std::string(text));
}

IncompleteMode parse_mode(std::string_view text) {
  for (IncompleteMode m : {IncompleteMode::None, IncompleteMode::MissingObject, IncompleteMode::MissingAction,
                           IncompleteMode::HighLevelVerb, IncompleteMode::Anaphora}) {
    if (to_string(m) == text) return m;
  }
  throw SchemaError("unknown incomplete mode " + std::string(text));
}

Templates Templates::from_json(std::string_view text) {
  Templates t;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.contains("surfaces")) {
      for (const auto& [category, word] : doc.at("surfaces").items()) t.surfaces_[category] = word.get<std::string>();
    }
    for (goal::Action action : goal::kAllActions) {
      const std::string name(goal::to_string(action));
      const auto& training = doc.at("training").at(name);
      for (std::string_view key : kTrainingKeys) {
        const std::string where = name + "/" + std::string(key);
        t.training_[{action, std::string(key)}] = pattern_list(training.at(std::string(key)), where, false);
      }
      const auto& sts = doc.at("sts").at(name);
      t.sts_[action] = {pattern_list(sts.at("explicit"), "sts/" + name, true),
                        pattern_list(sts.at("implicit"), "sts/" + name, true)};
      const auto& held = doc.at("held_out").at(name);
      t.held_[action] = {pattern_list(held.at("instruction"), "held_out/" + name, false),
                         pattern_list(held.at("intent"), "held_out/" + name, false)};
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("templates: ") + e.what());
  }
  return t;
}

Templates Templates::load(const std::filesystem::path& path) { return from_json(read_file(path)); }

const std::vector<std::string>& Templates::training(goal::Action action, std::string_view key) const {
  auto it = training_.find({action, std::string(key)});
  if (it == training_.end()) throw SchemaError("no training templates for " + std::string(key));
  return it->second;
}

const Templates::Sts& Templates::sts(goal::Action action) const { return sts_.at(action); }
const Templates::Held& Templates::held_out(goal::Action action) const { return held_.at(action); }

std::string Templates::surface(const std::string& category) const {
  auto it = surfaces_.find(category);
  return it == surfaces_.end() ? category : it->second;
}

std::string Templates::render(const std::string& pattern, const std::string& subject, const std::string& object) const {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.compare(i, 3, "{s}") == 0) {
      out += surface(subject);
      i += 2;
    } else if (pattern.compare(i, 3, "{o}") == 0) {
      out += surface(object);
      i += 2;
    } else {
      out.push_back(pattern[i]);
    }
  }
  return out;
}

Resources Resources::load(const std::filesystem::path& dir) {
  return {scene::KnowledgeBase::load(dir / "kb.json"), goal::GoalTable::load(dir / "goal_table.json"),
          Templates::load(dir / "templates.json")};
}

}  // namespace symgoal::text
