#pragma once

// Template-driven generators for the goal-learning and sentence-similarity
// datasets, and the request template tables they draw from.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symgoal/goal/goal_triple.hpp"
#include "symgoal/scene/scene.hpp"
#include "symgoal/util/rng.hpp"

namespace symgoal::text {

enum class Style { ExplicitComplete, ExplicitIncomplete, ImplicitIntent };
enum class IncompleteMode { None, MissingObject, MissingAction, HighLevelVerb, Anaphora };

std::string_view to_string(Style style);
std::string_view to_string(IncompleteMode mode);
Style parse_style(std::string_view text);
IncompleteMode parse_mode(std::string_view text);

// Share of each style in generated goal datasets.
inline constexpr double kExplicitCompleteShare = 0.4;
inline constexpr double kExplicitIncompleteShare = 0.3;
inline constexpr double kImplicitIntentShare = 0.3;
// Share of goal records whose scene loses a participant (gold marks it UNKNOWN).
inline constexpr double kMissingParticipantShare = 0.1;

class Templates {
 public:
  struct Held {
    std::vector<std::string> instruction;
    std::vector<std::string> intent;
  };
  struct Sts {
    std::vector<std::string> explicit_forms;
    std::vector<std::string> implicit_forms;
  };

  static Templates from_json(std::string_view text);
  static Templates load(const std::filesystem::path& path);

  // Training templates for (task, style key); the key is the incomplete mode
  // name, "explicit-complete" or "implicit-intent".
  const std::vector<std::string>& training(goal::Action action, std::string_view key) const;
  const Sts& sts(goal::Action action) const;
  const Held& held_out(goal::Action action) const;

  // Surface word for a category inside a request ("person" -> "me").
  std::string surface(const std::string& category) const;
  std::string render(const std::string& pattern, const std::string& subject, const std::string& object) const;

 private:
  std::map<std::string, std::string, std::less<>> surfaces_;
  std::map<std::pair<goal::Action, std::string>, std::vector<std::string>> training_;
  std::map<goal::Action, Sts> sts_;
  std::map<goal::Action, Held> held_;
};

// Everything the generators read; loaded once from the data directory.
struct Resources {
  scene::KnowledgeBase kb;
  goal::GoalTable table;
  Templates templates;

  static Resources load(const std::filesystem::path& dir);
};

struct StsPair {
  std::string explicit_text;
  std::string implicit_text;
  double score = 5.0;
  goal::Action task = goal::Action::PickPlace;
  std::string explicit_subject, explicit_object;
  std::string implicit_subject, implicit_object;
};

// 5.0 when subject and object both match, 3.3 when exactly one matches, 1.7
// otherwise. Pairs always describe the same task.
double sts_rule_score(const std::string& subject_a, const std::string& object_a, const std::string& subject_b,
                      const std::string& object_b);

std::vector<StsPair> generate_sts_dataset(std::uint64_t seed, std::size_t count, const Resources& res);

struct GoalRecord {
  std::string scene_id;
  std::string instruction;
  Style style = Style::ExplicitComplete;
  IncompleteMode mode = IncompleteMode::None;
  // "subject" or "object" when the generator removed that participant from
  // the scene; empty otherwise.
  std::string removed;
  goal::GoalTriple gold;
};

struct GoalDataset {
  std::vector<GoalRecord> records;
  std::map<std::string, scene::SceneGraph> scenes;
};

// Each record gets its own synthesized scene: the participants plus up to two
// distractors that cannot fill either role.
GoalDataset generate_goal_dataset(std::uint64_t seed, std::size_t count, const Resources& res);

// Distractor categories for a task: fit neither role and differ from the
// participants.
std::vector<std::string> distractor_pool(const Resources& res, goal::Action action, const std::string& subject,
                                         const std::string& object);

// JSON lines with a schema header line first.
std::string sts_to_jsonl(const std::vector<StsPair>& pairs);
std::string goal_records_to_jsonl(const std::vector<GoalRecord>& records);
std::vector<GoalRecord> goal_records_from_jsonl(std::string_view text);
std::string scenes_to_jsonl(const std::map<std::string, scene::SceneGraph>& scenes);

}  // namespace symgoal::text
