#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgoal/goal/predictor.hpp"
#include "symgoal/planner/planner.hpp"
#include "symgoal/sim/world.hpp"
#include "symgoal/text/datasets.hpp"

namespace symgoal::eval {

// 1 iff action, subject and object all match (UNKNOWN matches only UNKNOWN).
int rgl(const goal::GoalTriple& predicted, const goal::GoalTriple& gold);

// 100 * mean rgl. Throws LengthMismatch or EmptySet.
double rgl_accuracy(const std::vector<goal::GoalTriple>& predicted, const std::vector<goal::GoalTriple>& gold);

// Everything a trial needs, loaded from the data directory.
struct Toolkit {
  pddl::Domain domain;
  text::Resources res;
  goal::PredictorLexicon lexicon;

  static Toolkit load(const std::filesystem::path& dir);
};

struct TrialRecord {
  goal::Action task = goal::Action::PickPlace;
  sim::Level level = sim::Level::Easy;
  std::uint64_t seed = 0;
  std::string request;
  goal::GoalTriple gold;
  std::optional<goal::GoalTriple> predicted;  // empty when prediction failed
  std::string note;                           // prediction or compilation error, if any
  planner::Outcome outcome = planner::Outcome::NoSolution;
  std::vector<std::string> plan;  // canonical step names over world ids
  bool perception_ok = false;
  bool goal_ok = false;
  bool plan_ok = false;
  bool exec_ok = false;

  bool success() const { return perception_ok && goal_ok && plan_ok && exec_ok; }
};

// Stage judgement for one trial. plan is over world ids; trace is the
// execution of that plan (ignored for scenarios without a solution).
//   perception: every ground-truth object of a gold participant category was detected
//   goal:       rgl == 1
//   plan:       valid scenarios: the plan reaches the gold-compiled goal in the true world;
//               Hard2: planning reported no solution
//   execution:  valid scenarios: plan_ok and the trace succeeded; Hard2: equals plan_ok
TrialRecord attribute_trial(const sim::Scenario& scenario, const std::optional<goal::GoalTriple>& predicted,
                            planner::Outcome outcome, const pddl::Plan& plan, const sim::ExecutionTrace& trace,
                            const Toolkit& kit);

enum class Stage { Perception, Goal, Planning, Execution, All };
inline constexpr std::array<Stage, 5> kAllStages = {Stage::Perception, Stage::Goal, Stage::Planning,
                                                    Stage::Execution, Stage::All};
std::string_view to_string(Stage stage);

struct Counts {
  std::size_t trials = 0;
  std::array<std::size_t, 5> ok{};  // indexed by Stage

  double percent(Stage stage) const;
  void add(const TrialRecord& record);
  void add(const Counts& other);
};

struct MetricsReport {
  std::map<std::pair<goal::Action, sim::Level>, Counts> cells;
  std::map<sim::Level, Counts> levels;
  Counts valid;    // Easy, Medium, Hard1
  Counts invalid;  // Hard2
  Counts overall;

  double vsr(Stage stage) const { return valid.percent(stage); }
  double isr(Stage stage) const { return invalid.percent(stage); }
  double sr(Stage stage) const { return overall.percent(stage); }
};

// Throws EmptySet.
MetricsReport aggregate(const std::vector<TrialRecord>& records);

// Aligned text table: one row per level with P / GL / TP / E / SR columns,
// then VSR, ISR and SR rows, then the per-task breakdown.
std::string report_text(const MetricsReport& report);
std::string report_json(const MetricsReport& report, const std::vector<TrialRecord>& records, int indent = 2);

// Full pipeline for one scenario: predict on the detected scene, compile the
// goal, plan, map the plan back to world ids, execute with detected masks.
struct TrialOutput {
  TrialRecord record;
  planner::PlanResult result;
  sim::ExecutionTrace trace;
  std::vector<pddl::Literal> compiled_goal;
};

TrialOutput run_trial(const sim::Scenario& scenario, const goal::GoalPredictor& predictor, const Toolkit& kit,
                      const planner::SearchConfig& search = {});

struct BenchConfig {
  std::uint64_t seed = 1;
  std::size_t trials_per_cell = 10;
  sim::NoiseConfig noise;
  planner::SearchConfig search;
  bool oracle = false;  // oracle predictor answers each scenario's gold goal
};

// Trials ordered by task, then level, then index; per-trial seeds derive
// from the bench seed.
std::vector<TrialRecord> run_bench(const BenchConfig& cfg, const goal::GoalPredictor* baseline, const Toolkit& kit);

// Training split used for the lexical baseline when no table is supplied.
inline constexpr std::uint64_t kDefaultTrainSeed = 20240101;
inline constexpr std::size_t kDefaultTrainCount = 6000;

goal::CooccurrenceTable default_baseline_table(const Toolkit& kit);

}  // namespace symgoal::eval
