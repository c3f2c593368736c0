#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/text/datasets.hpp"
#include "symgoal/text/text.hpp"

namespace symgoal::text {
namespace {

using Json = nlohmann::ordered_json;

struct Participants {
  std::string subject, object;
};

// Every (subject, object) pair the task admits.
std::vector<Participants> task_pairs(const Resources& res, goal::Action action) {
  std::vector<Participants> out;
  for (const auto& s : res.table.subject_categories(res.kb, action)) {
    for (const auto& o : res.table.object_categories(res.kb, action, s)) out.push_back({s, o});
  }
  return out;
}

Json goal_json(const goal::GoalTriple& g) {
  return {{"action", goal::to_string(g.action)}, {"subject", g.subject}, {"object", g.object}};
}

std::string header_line(const char* schema) {
  Json h;
  h["schema"] = schema;
  h["version"] = 1;
  return h.dump() + "\n";
}

}  // namespace

double sts_rule_score(const std::string& subject_a, const std::string& object_a, const std::string& subject_b,
                      const std::string& object_b) {
  const bool same_subject = subject_a == subject_b;
  const bool same_object = object_a == object_b;
  if (same_subject && same_object) return 5.0;
  if (same_subject || same_object) return 3.3;
  return 1.7;
}

std::vector<StsPair> generate_sts_dataset(std::uint64_t seed, std::size_t count, const Resources& res) {
  std::vector<StsPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const goal::Action task = goal::kAllActions[rng.below(goal::kAllActions.size())];
    const auto pairs = task_pairs(res, task);
    const Participants first = rng.pick(pairs);

    // Group the second participant pair by the score it would earn, then pick a
    // reachable score first so all three scores appear whenever the task allows.
    std::vector<std::vector<Participants>> by_score(kStsScores.size());
    for (const auto& p : pairs) {
      const double score = sts_rule_score(first.subject, first.object, p.subject, p.object);
      for (std::size_t k = 0; k < kStsScores.size(); ++k) {
        if (kStsScores[k] == score) by_score[k].push_back(p);
      }
    }
    std::vector<std::size_t> reachable;
    for (std::size_t k = 0; k < by_score.size(); ++k) {
      if (!by_score[k].empty()) reachable.push_back(k);
    }
    const std::size_t k = rng.pick(reachable);
    const Participants second = rng.pick(by_score[k]);

    const auto& forms = res.templates.sts(task);
    StsPair pair;
    pair.task = task;
    pair.explicit_subject = first.subject;
    pair.explicit_object = first.object;
    pair.implicit_subject = second.subject;
    pair.implicit_object = second.object;
    pair.explicit_text = res.templates.render(rng.pick(forms.explicit_forms), first.subject, first.object);
    pair.implicit_text = res.templates.render(rng.pick(forms.implicit_forms), second.subject, second.object);
    pair.score = kStsScores[k];
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<std::string> distractor_pool(const Resources& res, goal::Action action, const std::string& subject,
                                         const std::string& object) {
  std::vector<std::string> out;
  for (const auto& entry : res.kb.entries()) {
    const std::string& c = entry.category;
    if (c == subject || c == object) continue;
    if (res.table.fits_subject(res.kb, action, c) || res.table.fits_object(res.kb, action, c)) continue;
    out.push_back(c);
  }
  return out;
}

GoalDataset generate_goal_dataset(std::uint64_t seed, std::size_t count, const Resources& res) {
  constexpr IncompleteMode kModes[] = {IncompleteMode::MissingObject, IncompleteMode::MissingAction,
                                       IncompleteMode::HighLevelVerb, IncompleteMode::Anaphora};
  GoalDataset data;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const goal::Action task = goal::kAllActions[rng.below(goal::kAllActions.size())];
    const Participants p = rng.pick(task_pairs(res, task));

    GoalRecord record;
    const double u = rng.unit();
    std::string key;
    if (u < kExplicitCompleteShare) {
      record.style = Style::ExplicitComplete;
      key = "explicit-complete";
    } else if (u < kExplicitCompleteShare + kExplicitIncompleteShare) {
      record.style = Style::ExplicitIncomplete;
      record.mode = kModes[rng.below(std::size(kModes))];
      key = to_string(record.mode);
    } else {
      record.style = Style::ImplicitIntent;
      key = "implicit-intent";
    }
    record.instruction = res.templates.render(rng.pick(res.templates.training(task, key)), p.subject, p.object);
    record.gold = {task, p.subject, p.object};

    std::vector<std::string> categories = {p.subject, p.object};
    if (rng.chance(kMissingParticipantShare)) {
      if (rng.below(2) == 0) {
        record.removed = "subject";
        record.gold.subject = std::string(goal::kUnknown);
        categories.erase(categories.begin());
      } else {
        record.removed = "object";
        record.gold.object = std::string(goal::kUnknown);
        categories.pop_back();
      }
    }
    auto pool = distractor_pool(res, task, p.subject, p.object);
    rng.shuffle(pool);
    const auto extra = static_cast<std::size_t>(rng.between(0, 2));
    categories.insert(categories.end(), pool.begin(), pool.begin() + static_cast<long>(std::min(extra, pool.size())));
    rng.shuffle(categories);

    scene::SceneGraph scene = scene::layout_scene(categories, res.kb, rng);
    if (task == goal::Action::Clean) {
      for (auto& object : scene.objects) {
        if (object.category == p.subject) object.attributes.push_back("dirty");
      }
    }
    char id[32];
    std::snprintf(id, sizeof id, "scene-%06zu", i);
    record.scene_id = id;
    data.scenes.emplace(record.scene_id, std::move(scene));
    data.records.push_back(std::move(record));
  }
  return data;
}

std::string sts_to_jsonl(const std::vector<StsPair>& pairs) {
  std::string out = header_line("symgoal.sts-pairs");
  for (const auto& p : pairs) {
    Json j;
    j["explicit"] = p.explicit_text;
    j["implicit"] = p.implicit_text;
    j["score"] = p.score;
    j["task"] = goal::to_string(p.task);
    j["explicit_subject"] = p.explicit_subject;
    j["explicit_object"] = p.explicit_object;
    j["implicit_subject"] = p.implicit_subject;
    j["implicit_object"] = p.implicit_object;
    out += j.dump() + "\n";
  }
  return out;
}

std::string goal_records_to_jsonl(const std::vector<GoalRecord>& records) {
  std::string out = header_line("symgoal.goal-records");
  for (const auto& r : records) {
    Json j;
    j["scene_id"] = r.scene_id;
    j["instruction"] = r.instruction;
    j["style"] = to_string(r.style);
    j["mode"] = to_string(r.mode);
    j["removed"] = r.removed;
    j["goal"] = goal_json(r.gold);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<GoalRecord> goal_records_from_jsonl(std::string_view text) {
  std::vector<GoalRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line);
      if (header) {
        if (j.value("schema", "") != "symgoal.goal-records") throw SchemaError("not a goal-records file");
        header = false;
        continue;
      }
      GoalRecord r;
      r.scene_id = j.at("scene_id").get<std::string>();
      r.instruction = j.at("instruction").get<std::string>();
      r.style = parse_style(j.at("style").get<std::string>());
      r.mode = parse_mode(j.value("mode", "none"));
      r.removed = j.value("removed", "");
      const auto& g = j.at("goal");
      r.gold = {goal::parse_action(g.at("action").get<std::string>()), g.at("subject").get<std::string>(),
                g.at("object").get<std::string>()};
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("goal records: ") + e.what());
  }
  if (header) throw SchemaError("goal records: missing schema header");
  return out;
}

std::string scenes_to_jsonl(const std::map<std::string, scene::SceneGraph>& scenes) {
  std::string out = header_line("symgoal.scenes");
  for (const auto& [id, scene] : scenes) {
    Json j;
    j["scene_id"] = id;
    j["scene"] = Json::parse(scene::scene_to_json(scene, -1));
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace symgoal::text
