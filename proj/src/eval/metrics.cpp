#include <algorithm>

#include "symgoal/errors.hpp"
#include "symgoal/eval/eval.hpp"
#include "symgoal/pddl/pddl.hpp"
#include "symgoal/util/io.hpp"

namespace symgoal::eval {

int rgl(const goal::GoalTriple& predicted, const goal::GoalTriple& gold) {
  return static_cast<int>(predicted.action == gold.action) * static_cast<int>(predicted.subject == gold.subject) *
         static_cast<int>(predicted.object == gold.object);
}

double rgl_accuracy(const std::vector<goal::GoalTriple>& predicted, const std::vector<goal::GoalTriple>& gold) {
  if (predicted.size() != gold.size()) throw LengthMismatch(predicted.size(), gold.size());
  if (predicted.empty()) throw EmptySet("rgl accuracy over no pairs");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) hits += static_cast<std::size_t>(rgl(predicted[i], gold[i]));
  return 100.0 * static_cast<double>(hits) / static_cast<double>(predicted.size());
}

Toolkit Toolkit::load(const std::filesystem::path& dir) {
  Toolkit kit{pddl::parse_domain(read_file(dir / "kitchen" / "domain.pddl")), text::Resources::load(dir),
              goal::PredictorLexicon::load(dir / "lexicon.json")};
  kit.res.kb.check_against(kit.domain);
  kit.res.table.check_against(kit.domain);
  return kit;
}

TrialRecord attribute_trial(const sim::Scenario& scenario, const std::optional<goal::GoalTriple>& predicted,
                            planner::Outcome outcome, const pddl::Plan& plan, const sim::ExecutionTrace& trace,
                            const Toolkit& kit) {
  TrialRecord r;
  r.task = scenario.task;
  r.level = scenario.level;
  r.seed = scenario.seed;
  r.request = scenario.request;
  r.gold = scenario.gold;
  r.predicted = predicted;
  r.outcome = outcome;
  for (const auto& s : plan.steps) r.plan.push_back(s.canonical_name());

  r.perception_ok = true;
  for (const std::string* category : {&scenario.gold.subject, &scenario.gold.object}) {
    if (*category == goal::kUnknown) continue;
    for (const auto& object : scenario.truth.objects) {
      if (object.category == *category && !scenario.detected.find(object.id)) r.perception_ok = false;
    }
  }

  r.goal_ok = predicted && rgl(*predicted, scenario.gold) == 1;

  if (scenario.valid()) {
    if (outcome == planner::Outcome::Plan) {
      const scene::ProblemFragment truth = scene::build_initial_state(scenario.truth, kit.res.kb, kit.domain);
      try {
        const auto goal = goal::compile_goal(scenario.gold, truth, kit.res.table);
        const pddl::Problem problem = scene::make_problem(truth, goal, "truth", kit.domain);
        // World ids name the true constants through the fragment's source ids.
        pddl::Plan renamed;
        for (const auto& s : plan.steps) {
          std::vector<std::string> args;
          for (const auto& id : s.args) {
            auto it = std::find(truth.source_ids.begin(), truth.source_ids.end(), id);
            args.push_back(it == truth.source_ids.end() ? id
                                                        : truth.objects[static_cast<std::size_t>(
                                                                            it - truth.source_ids.begin())]
                                                              .name);
          }
          const pddl::ActionSchema* schema = kit.domain.find_action(s.name);
          renamed.steps.push_back(schema ? pddl::instantiate(*schema, args) : s);
        }
        r.plan_ok = pddl::validate_plan(kit.domain, problem, renamed).ok;
      } catch (const Error&) {
        r.plan_ok = false;
      }
    }
    r.exec_ok = r.plan_ok && trace.success;
  } else {
    r.plan_ok = outcome == planner::Outcome::NoSolution;
    r.exec_ok = r.plan_ok;
  }
  return r;
}

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Perception: return "P";
    case Stage::Goal: return "GL";
    case Stage::Planning: return "TP";
    case Stage::Execution: return "E";
    case Stage::All: return "SR";
  }
  return "?";
}

double Counts::percent(Stage stage) const {
  if (trials == 0) return 0.0;
  return 100.0 * static_cast<double>(ok[static_cast<std::size_t>(stage)]) / static_cast<double>(trials);
}

void Counts::add(const TrialRecord& r) {
  ++trials;
  ok[static_cast<std::size_t>(Stage::Perception)] += r.perception_ok;
  ok[static_cast<std::size_t>(Stage::Goal)] += r.goal_ok;
  ok[static_cast<std::size_t>(Stage::Planning)] += r.plan_ok;
  ok[static_cast<std::size_t>(Stage::Execution)] += r.exec_ok;
  ok[static_cast<std::size_t>(Stage::All)] += r.success();
}

void Counts::add(const Counts& other) {
  trials += other.trials;
  for (std::size_t i = 0; i < ok.size(); ++i) ok[i] += other.ok[i];
}

MetricsReport aggregate(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw EmptySet("no trial records to aggregate");
  MetricsReport report;
  for (const auto& r : records) {
    report.cells[{r.task, r.level}].add(r);
    report.levels[r.level].add(r);
    (sim::has_solution(r.level) ? report.valid : report.invalid).add(r);
    report.overall.add(r);
  }
  return report;
}

}  // namespace symgoal::eval
