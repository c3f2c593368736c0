#include "symgoal/errors.hpp"
#include "symgoal/eval/eval.hpp"

namespace symgoal::eval {

TrialOutput run_trial(const sim::Scenario& scenario, const goal::GoalPredictor& predictor, const Toolkit& kit,
                      const planner::SearchConfig& search) {
  TrialOutput out;
  const scene::ProblemFragment fragment = scene::build_initial_state(scenario.detected, kit.res.kb, kit.domain);

  std::optional<goal::GoalTriple> predicted;
  std::string note;
  try {
    predicted = predictor.predict(scenario.request, scenario.detected);
  } catch (const goal::EmptyInstruction& e) {
    note = e.what();
  } catch (const goal::UnresolvableAction& e) {
    note = e.what();
  }

  out.result.outcome = planner::Outcome::NoSolution;
  if (predicted) {
    try {
      out.compiled_goal = goal::compile_goal(*predicted, fragment, kit.res.table);
      const pddl::Problem problem = scene::make_problem(fragment, out.compiled_goal, "request", kit.domain);
      out.result = planner::plan(kit.domain, problem, search);
    } catch (const goal::MissingObject& e) {
      note = e.what();
    }
  }

  // Detected constants back to world ids.
  pddl::Plan world_plan;
  for (const auto& s : out.result.plan.steps) {
    pddl::GroundAction step = s;
    for (auto& arg : step.args) arg = fragment.source_ids.at(*fragment.index_of(arg));
    world_plan.steps.push_back(std::move(step));
  }

  if (out.result.solved()) {
    sim::MaskMap masks;
    for (std::size_t i = 0; i < scenario.detected.objects.size(); ++i) {
      masks.emplace(scenario.detected.objects[i].id, scenario.detected.mask_of(i));
    }
    out.trace = sim::run_plan(scenario.world, world_plan, &masks);
  }

  out.record = attribute_trial(scenario, predicted, out.result.outcome, world_plan, out.trace, kit);
  out.record.note = note;
  return out;
}

std::vector<TrialRecord> run_bench(const BenchConfig& cfg, const goal::GoalPredictor* baseline, const Toolkit& kit) {
  if (!cfg.oracle && !baseline) throw std::invalid_argument("bench needs a predictor unless oracle is set");
  std::vector<TrialRecord> records;
  std::uint64_t index = 0;
  for (goal::Action task : goal::kAllActions) {
    for (sim::Level level : sim::kAllLevels) {
      for (std::size_t k = 0; k < cfg.trials_per_cell; ++k) {
        const sim::Scenario sc = sim::generate_scenario(task, level, derive_seed(cfg.seed, index++), cfg.noise, kit.res);
        if (cfg.oracle) {
          const goal::OraclePredictor oracle(sc.gold);
          records.push_back(run_trial(sc, oracle, kit, cfg.search).record);
        } else {
          records.push_back(run_trial(sc, *baseline, kit, cfg.search).record);
        }
      }
    }
  }
  return records;
}

goal::CooccurrenceTable default_baseline_table(const Toolkit& kit) {
  const auto data = text::generate_goal_dataset(kDefaultTrainSeed, kDefaultTrainCount, kit.res);
  return goal::train_cooccurrence(data.records, kit.lexicon);
}

}  // namespace symgoal::eval
