#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symgoal/pddl/model.hpp"
#include "symgoal/scene/scene.hpp"

namespace symgoal::goal {

enum class Action { PickPlace, Deliver, Cut, Cook, Clean };

inline constexpr std::array<Action, 5> kAllActions = {Action::PickPlace, Action::Deliver, Action::Cut, Action::Cook,
                                                      Action::Clean};

// Participant placeholder for an object the perception stage did not see.
inline constexpr std::string_view kUnknown = "UNKNOWN";

std::string_view to_string(Action action);
// Throws SchemaError for names outside the task vocabulary.
Action parse_action(std::string_view name);

// (action, subject, object). The subject is the thing acted upon, the object
// the instrument, destination or recipient.
struct GoalTriple {
  Action action = Action::PickPlace;
  std::string subject{kUnknown};
  std::string object{kUnknown};

  friend bool operator==(const GoalTriple&, const GoalTriple&) = default;
};

// "(Cut, tomato, knife)"
std::string to_string(const GoalTriple& goal);

// Per-task goal shape and role requirements, loaded from a config table.
struct GoalRule {
  Action action;
  std::vector<pddl::Literal> goal;  // over ?s and ?o
  std::string subject_requires;     // predicate the subject category must carry
  std::string object_requires;
  bool uses_object() const;
};

class GoalTable {
 public:
  static GoalTable from_json(std::string_view text);
  static GoalTable load(const std::filesystem::path& path);

  const GoalRule& rule(Action action) const;
  const std::vector<GoalRule>& rules() const { return rules_; }

  // Categories able to fill each role, in knowledge-base order.
  std::vector<std::string> subject_categories(const scene::KnowledgeBase& kb, Action action) const;
  std::vector<std::string> object_categories(const scene::KnowledgeBase& kb, Action action,
                                             std::string_view subject) const;
  bool fits_subject(const scene::KnowledgeBase& kb, Action action, std::string_view category) const;
  bool fits_object(const scene::KnowledgeBase& kb, Action action, std::string_view category) const;

  // Throws InvalidModel when a goal or requirement predicate is undeclared.
  void check_against(const pddl::Domain& domain) const;

 private:
  std::vector<GoalRule> rules_;
};

// Goal literals for a triple over the constants of a compiled scene. When
// several constants share a category, the lowest ordinal is chosen.
// Throws MissingObject when the subject is UNKNOWN, when the goal shape needs
// an UNKNOWN object, or when a named participant has no constant.
std::vector<pddl::Literal> compile_goal(const GoalTriple& goal, const scene::ProblemFragment& fragment,
                                        const GoalTable& table);

}  // namespace symgoal::goal
