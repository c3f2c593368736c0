#include <set>

#include "doctest.h"
#include "support.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/goal/predictor.hpp"
#include "symgoal/text/text.hpp"

using namespace symgoal;
using namespace symgoal::goal;
using symgoal::testing::baseline;
using symgoal::testing::fixture;
using symgoal::testing::kit;

namespace {

scene::SceneGraph tomato_scene() { return scene::load_scene(fixture("tomato_scene.json"), kit().res.kb.vocabulary()); }

scene::SceneGraph laid_out(const std::vector<std::string>& categories) {
  Rng rng(1);
  return scene::layout_scene(categories, kit().res.kb, rng);
}

std::vector<pddl::Literal> compile(const GoalTriple& g, const scene::SceneGraph& s) {
  return compile_goal(g, scene::build_initial_state(s, kit().res.kb, kit().domain), kit().res.table);
}

text::GoalRecord record(const std::string& instruction, GoalTriple gold) {
  text::GoalRecord r;
  r.instruction = instruction;
  r.gold = std::move(gold);
  return r;
}

}  // namespace

TEST_SUITE("goal") {
  TEST_CASE("triple formatting and parsing") {
    CHECK(to_string(GoalTriple{Action::Cut, "tomato", "knife"}) == "(Cut, tomato, knife)");
    for (Action a : kAllActions) CHECK(parse_action(to_string(a)) == a);
    CHECK_THROWS_AS(parse_action("Juggle"), SchemaError);
    CHECK(GoalTriple{}.subject == kUnknown);
  }

  TEST_CASE("cutting request on the tomato scene") {
    CHECK(baseline().predict("Please cut me some tomato slices", tomato_scene()) ==
          GoalTriple{Action::Cut, "tomato", "knife"});
  }

  TEST_CASE("named participant missing from the scene") {
    CHECK(baseline().predict("slice the apple", tomato_scene()) == GoalTriple{Action::Cut, std::string(kUnknown), "knife"});
  }

  TEST_CASE("unnamed instrument absent from the scene") {
    CHECK(baseline().predict("cut the tomato", laid_out({"tomato", "bowl"})) ==
          GoalTriple{Action::Cut, "tomato", std::string(kUnknown)});
  }

  TEST_CASE("empty and unresolvable instructions") {
    CHECK_THROWS_AS(baseline().predict("", tomato_scene()), EmptyInstruction);
    CHECK_THROWS_AS(baseline().predict("?! ...", tomato_scene()), EmptyInstruction);
    CHECK_THROWS_AS(baseline().predict("zzyzx qwxq", tomato_scene()), UnresolvableAction);
  }

  TEST_CASE("predictions stay inside the scene") {
    const auto data = text::generate_goal_dataset(31, 500, kit().res);
    for (const auto& r : data.records) {
      const auto& scene = data.scenes.at(r.scene_id);
      GoalTriple g;
      try {
        g = baseline().predict(r.instruction, scene);
      } catch (const UnresolvableAction&) {
        continue;
      }
      for (const std::string* role : {&g.subject, &g.object}) {
        CHECK((*role == kUnknown || scene.has_category(*role)));
      }
      CHECK(baseline().predict(r.instruction, scene) == g);
    }
  }

  TEST_CASE("training counts") {
    const std::vector<text::GoalRecord> records = {
        record("deliver the apple to me", {Action::Deliver, "apple", "person"}),
        record("put the apple in the bowl", {Action::PickPlace, "apple", "bowl"}),
        record("cut the apple", {Action::Cut, "apple", "knife"}),
    };
    const auto table = train_cooccurrence(records, kit().lexicon);
    CHECK(table.count("deliver", "action:Deliver") == 1);
    double best = -1;
    std::string best_label;
    for (Action a : kAllActions) {
      const std::string label = "action:" + std::string(to_string(a));
      if (table.score("deliver", label) > best) {
        best = table.score("deliver", label);
        best_label = label;
      }
    }
    CHECK(best_label == "action:Deliver");
    CHECK_THROWS_AS(train_cooccurrence({}, kit().lexicon), EmptyDataset);
  }

  TEST_CASE("single record table holds exactly its tokens") {
    const auto r = record("slice the tomato with the knife", {Action::Cut, "tomato", "knife"});
    const auto table = train_cooccurrence({r}, kit().lexicon);
    std::set<std::string> expected;
    for (const auto& t : text::tokenize(r.instruction)) {
      if (!kit().lexicon.is_stopword(t)) expected.insert(t);
    }
    CHECK(table.token_count() == expected.size());
    for (const auto& t : expected) {
      CHECK(table.knows(t));
      CHECK(table.count(t, "action:Cut") == 1);
    }
  }

  TEST_CASE("smoothed score") {
    CooccurrenceTable t;
    t.add("slice", "action:Cut", 3);
    t.add("slice", "action:Cook", 1);
    t.add("warm", "action:Cook", 2);
    // (3 + 1) / (4 + 1 * 2)
    CHECK(t.score("slice", "action:Cut") == doctest::Approx(4.0 / 6.0));
    CHECK(t.score("unseen", "action:Cut") == doctest::Approx(0.5));
  }

  TEST_CASE("co-occurrence table round trip") {
    const auto& table = testing::baseline_table();
    const std::string text = table.serialize();
    CHECK(CooccurrenceTable::deserialize(text) == table);
    CHECK(CooccurrenceTable::deserialize(text).serialize() == text);
    CHECK_THROWS_AS(CooccurrenceTable::deserialize("not a table\n"), SchemaError);
  }

  TEST_CASE("compile goal examples") {
    CHECK(compile({Action::Cut, "tomato", "knife"}, tomato_scene()) ==
          std::vector<pddl::Literal>{{{"sliced", {"tomato-1"}}, false}});
    CHECK_THROWS_AS(compile({Action::Cut, std::string(kUnknown), "knife"}, tomato_scene()), MissingObject);
    CHECK(compile({Action::PickPlace, "apple", "bowl"}, laid_out({"apple", "bowl"})) ==
          std::vector<pddl::Literal>{{{"on", {"apple-1", "bowl-1"}}, false}});
    CHECK_THROWS_AS(compile({Action::PickPlace, "apple", std::string(kUnknown)}, laid_out({"apple", "bowl"})),
                    MissingObject);
    CHECK_THROWS_AS(compile({Action::Cut, "apple", "knife"}, tomato_scene()), MissingObject);
    CHECK(compile({Action::Cut, "apple", "knife"}, laid_out({"apple", "knife", "apple"})) ==
          std::vector<pddl::Literal>{{{"sliced", {"apple-1"}}, false}});
  }

  TEST_CASE("compiled goals use declared predicates only") {
    for (const auto& rule : kit().res.table.rules()) {
      for (const auto& lit : rule.goal) CHECK(kit().domain.find_predicate(lit.atom.predicate) != nullptr);
    }
    CHECK_NOTHROW(kit().res.table.check_against(kit().domain));
  }

  TEST_CASE("oracle predictor slots into the pipeline") {
    sim::Scenario sc = sim::generate_scenario(Action::Cook, sim::Level::Medium, 3, sim::NoiseConfig::none(), kit().res);
    const OraclePredictor oracle(sc.gold);
    const auto out = eval::run_trial(sc, oracle, kit());
    CHECK(out.record.success());
  }
}
