#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symgoal/goal/goal_triple.hpp"
#include "symgoal/scene/scene.hpp"
#include "symgoal/text/datasets.hpp"

namespace symgoal::goal {

struct PredictorLexicon {
  struct Intent {
    std::vector<std::string> pattern;  // consecutive tokens
    Action action;
  };

  std::map<Action, std::vector<std::string>> verbs;
  std::vector<Intent> intents;  // checked in file order
  // category -> words naming it (the category name itself is always implied)
  std::map<std::string, std::vector<std::string>> synonyms;
  std::vector<std::string> stopwords;

  static PredictorLexicon from_json(std::string_view text);
  static PredictorLexicon load(const std::filesystem::path& path);

  bool is_stopword(std::string_view token) const;
  std::optional<Action> verb_action(std::string_view token) const;
};

// Token <-> label association counts. Labels look like "action:Cut",
// "subject:tomato", "object:knife".
class CooccurrenceTable {
 public:
  static constexpr double kSmoothing = 1.0;

  void add(const std::string& token, const std::string& label, std::uint64_t n = 1);

  std::uint64_t count(std::string_view token, std::string_view label) const;
  std::uint64_t token_total(std::string_view token) const;
  bool knows(std::string_view token) const { return token_total(token) > 0; }
  std::size_t token_count() const { return totals_.size(); }

  // (count(token, label) + a) / (count(token) + a * labels_of_kind), where
  // labels_of_kind is the number of distinct labels sharing the prefix.
  double score(std::string_view token, std::string_view label) const;

  // Text form: "symgoal-cooc v1" header then "token\tlabel\tcount" lines in
  // sorted order. Round-trips exactly.
  std::string serialize() const;
  static CooccurrenceTable deserialize(std::string_view text);

  friend bool operator==(const CooccurrenceTable&, const CooccurrenceTable&) = default;

 private:
  std::map<std::string, std::map<std::string, std::uint64_t, std::less<>>, std::less<>> counts_;
  std::map<std::string, std::uint64_t, std::less<>> totals_;
  std::set<std::string, std::less<>> labels_;
  std::map<std::string, std::size_t, std::less<>> kind_sizes_;
};

// Counts each distinct non-stopword token of a record once per label.
// Throws EmptyDataset.
CooccurrenceTable train_cooccurrence(const std::vector<text::GoalRecord>& records, const PredictorLexicon& lexicon);

class GoalPredictor {
 public:
  virtual ~GoalPredictor() = default;
  virtual GoalTriple predict(std::string_view instruction, const scene::SceneGraph& scene) const = 0;
};

// Lexical baseline: verbs, then intent patterns, then learned associations for
// the action; category words (exact, then substring, then learned
// associations) for the participants, constrained by the role requirements
// of the goal table.
class LexicalPredictor : public GoalPredictor {
 public:
  LexicalPredictor(PredictorLexicon lexicon, CooccurrenceTable table, const scene::KnowledgeBase& kb,
                   const GoalTable& goals);

  // Throws EmptyInstruction or UnresolvableAction.
  GoalTriple predict(std::string_view instruction, const scene::SceneGraph& scene) const override;

  // Category mentions in token order, one per token.
  std::vector<std::string> mentions(const std::vector<std::string>& tokens) const;
  Action resolve_action(const std::vector<std::string>& tokens, std::string_view instruction) const;

 private:
  std::string fill_role(Action action, bool subject_role, const std::vector<std::string>& mentions,
                        const std::vector<std::string>& tokens, const scene::SceneGraph& scene,
                        const std::string& exclude) const;

  PredictorLexicon lexicon_;
  CooccurrenceTable table_;
  const scene::KnowledgeBase* kb_;
  const GoalTable* goals_;
};

// Returns a fixed answer; used to isolate downstream stages.
class OraclePredictor : public GoalPredictor {
 public:
  explicit OraclePredictor(GoalTriple gold) : gold_(std::move(gold)) {}
  void set(GoalTriple gold) { gold_ = std::move(gold); }
  GoalTriple predict(std::string_view, const scene::SceneGraph&) const override { return gold_; }

 private:
  GoalTriple gold_;
};

}  // namespace symgoal::goal
