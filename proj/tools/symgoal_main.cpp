// symgoal: command-line front end.
//
//   symgoal plan  --domain D --problem P        exit 0 plan, 1 no solution, 2 error, 4 search limit
//   symgoal ask   --scene S [instruction...]    full pipeline; reads instructions from stdin when none given
//   symgoal gen   sts|goal|scenario --seed N --count N [--out F]
//   symgoal train --seed N --count N --out F    co-occurrence table for the lexical baseline
//   symgoal bench [--predictor baseline|oracle] [--seed N] [--count N] [--json] [--min-sr X ...]
//                                               exit 3 when a --min-* threshold is not met
//
// SYMGOAL_DATA (or --data) points at the directory with the shipped domain,
// knowledge base and config tables.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/eval/eval.hpp"
#include "symgoal/pddl/pddl.hpp"
#include "symgoal/util/io.hpp"

namespace {

using namespace symgoal;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitError = 2;
constexpr int kExitThreshold = 3;
constexpr int kExitLimit = 4;

std::string step_text(const pddl::GroundAction& step) {
  std::string out = step.name;
  for (const auto& a : step.args) out += " " + a;
  return out;
}

void print_plan_lines(std::ostream& out, const pddl::Plan& plan) {
  for (std::size_t i = 0; i < plan.steps.size(); ++i) out << i + 1 << ". " << step_text(plan.steps[i]) << "\n";
}

nlohmann::ordered_json plan_json(const planner::PlanResult& r) {
  nlohmann::ordered_json j;
  j["outcome"] = planner::to_string(r.outcome);
  j["plan"] = nlohmann::ordered_json::array();
  for (const auto& s : r.plan.steps) j["plan"].push_back(s.canonical_name());
  j["expansions"] = r.stats.expansions;
  j["generated"] = r.stats.generated;
  return j;
}

int exit_for(planner::Outcome outcome) {
  switch (outcome) {
    case planner::Outcome::Plan: return kExitOk;
    case planner::Outcome::NoSolution: return kExitNoSolution;
    case planner::Outcome::ResourceExceeded: return kExitLimit;
  }
  return kExitError;
}

struct Options {
  std::string data;
  std::string domain;
  std::string problem;
  std::string scene;
  std::string predictor = "baseline";
  std::string strategy = "greedy";
  std::string table;
  std::string gold;
  std::string kind;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::size_t max_expansions = 200000;
  bool json = false;
  double dropout = sim::NoiseConfig{}.dropout;
  int jitter = sim::NoiseConfig{}.jitter;
  bool noise_free = false;
  std::optional<double> min_vsr, min_isr, min_sr;
  std::vector<std::string> words;
};

std::filesystem::path data_path(const Options& o) { return o.data.empty() ? data_dir() : std::filesystem::path(o.data); }

planner::SearchConfig search_config(const Options& o) {
  return {planner::parse_strategy(o.strategy), o.max_expansions};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

int cmd_plan(const Options& o) {
  const std::string domain_path =
      o.domain.empty() ? (data_path(o) / "kitchen" / "domain.pddl").string() : o.domain;
  const pddl::Domain domain = pddl::parse_domain(read_file(domain_path));
  const pddl::Problem problem = pddl::parse_problem(read_file(o.problem), domain);
  const planner::PlanResult result = planner::plan(domain, problem, search_config(o));
  if (o.json) {
    std::cout << plan_json(result).dump(2) << "\n";
  } else if (result.solved()) {
    print_plan_lines(std::cout, result.plan);
  } else if (result.outcome == planner::Outcome::NoSolution) {
    std::cout << "NO SOLUTION\n";
  } else {
    std::cout << "SEARCH LIMIT REACHED\n";
  }
  return exit_for(result.outcome);
}

std::unique_ptr<goal::GoalPredictor> make_predictor(const Options& o, const eval::Toolkit& kit) {
  if (o.predictor == "oracle") {
    if (o.gold.empty()) throw std::invalid_argument("--predictor oracle needs --gold Action,subject,object");
    std::vector<std::string> parts;
    std::stringstream ss(o.gold);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw std::invalid_argument("--gold expects Action,subject,object");
    return std::make_unique<goal::OraclePredictor>(goal::GoalTriple{goal::parse_action(parts[0]), parts[1], parts[2]});
  }
  if (o.predictor != "baseline") throw std::invalid_argument("unknown predictor " + o.predictor);
  goal::CooccurrenceTable table = o.table.empty() ? eval::default_baseline_table(kit)
                                                  : goal::CooccurrenceTable::deserialize(read_file(o.table));
  return std::make_unique<goal::LexicalPredictor>(kit.lexicon, std::move(table), kit.res.kb, kit.res.table);
}

// One request against the scene; returns the exit code for that request.
int answer(const std::string& request, const scene::SceneGraph& scene, const goal::GoalPredictor& predictor,
           const eval::Toolkit& kit, const Options& o) {
  sim::Scenario sc;
  sc.request = request;
  sc.truth = scene;
  sc.detected = scene;
  sc.world = sim::make_world(scene, kit.res.kb);
  sc.level = sim::Level::Easy;

  const eval::TrialOutput trial = eval::run_trial(sc, predictor, kit, search_config(o));
  if (!trial.record.predicted) {
    std::cout << "goal: none (" << trial.record.note << ")\n";
    return kExitNoSolution;
  }
  const goal::GoalTriple& predicted = *trial.record.predicted;

  if (o.json) {
    nlohmann::ordered_json j;
    j["request"] = request;
    j["goal"] = {{"action", goal::to_string(predicted.action)}, {"subject", predicted.subject},
                 {"object", predicted.object}};
    j["compiled_goal"] = nlohmann::ordered_json::array();
    for (const auto& l : trial.compiled_goal) j["compiled_goal"].push_back(pddl::to_string(l));
    if (!trial.record.note.empty()) j["note"] = trial.record.note;
    j["planning"] = plan_json(trial.result);
    j["execution"] = nlohmann::ordered_json::parse(sim::trace_to_json(trial.trace));
    std::cout << j.dump(2) << "\n";
    return exit_for(trial.result.outcome);
  }

  std::cout << "goal: " << goal::to_string(predicted) << "\n";
  if (!trial.compiled_goal.empty()) {
    std::cout << "compiled:";
    for (const auto& l : trial.compiled_goal) std::cout << " " << pddl::to_string(l);
    std::cout << "\n";
  } else if (!trial.record.note.empty()) {
    std::cout << "compiled: none (" << trial.record.note << ")\n";
  }
  if (trial.result.solved()) {
    std::cout << "plan:\n";
    print_plan_lines(std::cout, trial.result.plan);
    double lowest = 1.0;
    for (const auto& s : trial.trace.steps) lowest = std::min(lowest, s.iou);
    char buf[96];
    std::snprintf(buf, sizeof buf, "execution: %s (%zu steps, min IoU %.2f)\n",
                  trial.trace.success ? "success" : "failed", trial.trace.steps.size(),
                  trial.trace.steps.empty() ? 1.0 : lowest);
    std::cout << buf;
  } else if (trial.result.outcome == planner::Outcome::NoSolution) {
    std::cout << "NO SOLUTION\n";
  } else {
    std::cout << "SEARCH LIMIT REACHED\n";
  }
  return exit_for(trial.result.outcome);
}

int cmd_ask(const Options& o) {
  const eval::Toolkit kit = eval::Toolkit::load(data_path(o));
  const scene::SceneGraph scene = scene::load_scene(o.scene, kit.res.kb.vocabulary());
  const auto predictor = make_predictor(o, kit);
  if (!o.words.empty()) {
    std::string request;
    for (const auto& w : o.words) request += (request.empty() ? "" : " ") + w;
    return answer(request, scene, *predictor, kit, o);
  }
  std::string line;
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    answer(line, scene, *predictor, kit, o);
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_gen(const Options& o) {
  const text::Resources res = text::Resources::load(data_path(o));
  const std::size_t count = o.count == 0 ? 100 : o.count;
  if (o.kind == "sts") {
    emit(o, text::sts_to_jsonl(text::generate_sts_dataset(o.seed, count, res)));
  } else if (o.kind == "goal") {
    const auto data = text::generate_goal_dataset(o.seed, count, res);
    emit(o, text::goal_records_to_jsonl(data.records));
    if (!o.out.empty()) write_file(o.out + ".scenes", text::scenes_to_jsonl(data.scenes));
  } else if (o.kind == "scenario") {
    const sim::NoiseConfig noise = o.noise_free ? sim::NoiseConfig::none() : sim::NoiseConfig{o.dropout, o.jitter};
    std::string text = "{\"schema\":\"symgoal.scenarios\",\"version\":1}\n";
    for (std::size_t i = 0; i < count; ++i) {
      const goal::Action task = goal::kAllActions[i % goal::kAllActions.size()];
      const sim::Level level = sim::kAllLevels[(i / goal::kAllActions.size()) % std::size(sim::kAllLevels)];
      text += sim::scenario_to_json(sim::generate_scenario(task, level, derive_seed(o.seed, i), noise, res), -1);
    }
    emit(o, text);
  } else {
    throw std::invalid_argument("gen kind must be sts, goal or scenario");
  }
  return kExitOk;
}

int cmd_train(const Options& o) {
  const eval::Toolkit kit = eval::Toolkit::load(data_path(o));
  const auto data = text::generate_goal_dataset(o.seed, o.count == 0 ? eval::kDefaultTrainCount : o.count, kit.res);
  emit(o, goal::train_cooccurrence(data.records, kit.lexicon).serialize());
  return kExitOk;
}

int cmd_bench(const Options& o) {
  const eval::Toolkit kit = eval::Toolkit::load(data_path(o));
  eval::BenchConfig cfg;
  cfg.seed = o.seed;
  cfg.trials_per_cell = o.count == 0 ? 10 : o.count;
  cfg.noise = o.noise_free ? sim::NoiseConfig::none() : sim::NoiseConfig{o.dropout, o.jitter};
  cfg.search = search_config(o);
  cfg.oracle = o.predictor == "oracle";
  std::unique_ptr<goal::GoalPredictor> baseline;
  if (!cfg.oracle) {
    if (o.predictor != "baseline") throw std::invalid_argument("unknown predictor " + o.predictor);
    baseline = make_predictor(o, kit);
  }
  const auto records = eval::run_bench(cfg, baseline.get(), kit);
  const eval::MetricsReport report = eval::aggregate(records);
  emit(o, o.json ? eval::report_json(report, records) : eval::report_text(report));

  int code = kExitOk;
  auto check = [&](const std::optional<double>& min, double value, const char* name) {
    if (min && value < *min) {
      std::cerr << name << " " << value << " below required " << *min << "\n";
      code = kExitThreshold;
    }
  };
  check(o.min_vsr, report.vsr(eval::Stage::All), "VSR");
  check(o.min_isr, report.isr(eval::Stage::All), "ISR");
  check(o.min_sr, report.sr(eval::Stage::All), "SR");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic instruction-following pipeline"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--data", o.data, "data directory (default: $SYMGOAL_DATA or the source tree)");

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", o.strategy, "bfs or greedy")->check(CLI::IsMember({"bfs", "greedy"}));
    cmd->add_option("--max-expansions", o.max_expansions, "search node limit")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_noise = [&](CLI::App* cmd) {
    cmd->add_option("--dropout", o.dropout, "chance a box goes undetected")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--jitter", o.jitter, "max mask shift in pixels")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--noise-free", o.noise_free, "perfect perception");
  };

  CLI::App* plan = app.add_subcommand("plan", "plan a PDDL problem");
  plan->add_option("--domain", o.domain, "domain file (default: shipped kitchen domain)");
  plan->add_option("--problem", o.problem, "problem file")->required();
  add_search(plan);

  CLI::App* ask = app.add_subcommand("ask", "run a request against a scene");
  ask->add_option("--scene", o.scene, "scene JSON")->required();
  ask->add_option("--predictor", o.predictor, "baseline or oracle")->check(CLI::IsMember({"baseline", "oracle"}));
  ask->add_option("--gold", o.gold, "oracle answer as Action,subject,object");
  ask->add_option("--table", o.table, "trained co-occurrence table");
  ask->add_option("instruction", o.words, "request text; omit to read requests from stdin");
  add_search(ask);

  CLI::App* gen = app.add_subcommand("gen", "generate a dataset");
  gen->add_option("kind", o.kind, "sts, goal or scenario")->required()->check(CLI::IsMember({"sts", "goal", "scenario"}));
  gen->add_option("--seed", o.seed, "seed");
  gen->add_option("--count", o.count, "records to generate (default 100)");
  gen->add_option("--out", o.out, "output file (default stdout)");
  add_noise(gen);

  CLI::App* train = app.add_subcommand("train", "train the baseline co-occurrence table");
  train->add_option("--seed", o.seed, "training split seed");
  train->add_option("--count", o.count, "training records");
  train->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "run the task x level benchmark");
  bench->add_option("--predictor", o.predictor, "baseline or oracle")->check(CLI::IsMember({"baseline", "oracle"}));
  bench->add_option("--table", o.table, "trained co-occurrence table");
  bench->add_option("--seed", o.seed, "bench seed");
  bench->add_option("--count", o.count, "trials per task and level (default 10)");
  bench->add_option("--out", o.out, "report file (default stdout)");
  bench->add_option("--min-vsr", o.min_vsr, "required end-to-end VSR");
  bench->add_option("--min-isr", o.min_isr, "required end-to-end ISR");
  bench->add_option("--min-sr", o.min_sr, "required end-to-end SR");
  add_search(bench);
  add_noise(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*plan) return cmd_plan(o);
    if (*ask) return cmd_ask(o);
    if (*gen) return cmd_gen(o);
    if (*train) return cmd_train(o);
    if (*bench) return cmd_bench(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
