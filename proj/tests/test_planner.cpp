#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "symgoal/pddl/pddl.hpp"
#include "symgoal/planner/planner.hpp"
#include "symgoal/util/io.hpp"

using namespace symgoal;
using namespace symgoal::planner;
using symgoal::testing::fixture;

namespace {

const pddl::Domain& kitchen() { return testing::kit().domain; }

pddl::Problem load(const char* name) { return pddl::parse_problem(read_file(fixture(name)), kitchen()); }

std::vector<std::string> names(const pddl::Plan& plan) {
  std::vector<std::string> out;
  for (const auto& s : plan.steps) out.push_back(s.canonical_name());
  return out;
}

}  // namespace

TEST_SUITE("planner") {
  TEST_CASE("goal already true gives an empty plan") {
    pddl::Problem p = load("tomato_problem.pddl");
    p.goal = {{p.init.front(), false}};
    for (Strategy s : {Strategy::Bfs, Strategy::GreedyGoalCount}) {
      const PlanResult r = plan(kitchen(), p, {s});
      CHECK(r.solved());
      CHECK(r.plan.steps.empty());
    }
  }

  TEST_CASE("tomato cutting plan") {
    const pddl::Problem p = load("tomato_problem.pddl");
    for (Strategy s : {Strategy::Bfs, Strategy::GreedyGoalCount}) {
      const PlanResult r = plan(kitchen(), p, {s});
      REQUIRE(r.solved());
      CHECK(names(r.plan) == std::vector<std::string>{"(grasp knife-1)", "(cut tomato-1 knife-1)"});
      CHECK(pddl::validate_plan(kitchen(), p, r.plan).ok);
    }
  }

  TEST_CASE("no instrument means no solution") {
    const pddl::Problem p = load("no_knife_problem.pddl");
    for (Strategy s : {Strategy::Bfs, Strategy::GreedyGoalCount}) {
      CHECK(plan(kitchen(), p, {s}).outcome == Outcome::NoSolution);
    }
  }

  TEST_CASE("expansion limit") {
    const pddl::Domain d = pddl::parse_domain(read_file(fixture("pddl/blocks_domain.pddl")));
    const pddl::Problem p = pddl::parse_problem(read_file(fixture("pddl/blocks_problem.pddl")), d);
    CHECK(plan(d, p, {Strategy::Bfs, 1}).outcome == Outcome::ResourceExceeded);
    CHECK_THROWS_AS(plan(d, p, {Strategy::Bfs, 0}), std::invalid_argument);
    const PlanResult r = plan(d, p, {Strategy::Bfs});
    REQUIRE(r.solved());
    CHECK(r.plan.steps.size() == 6);
  }

  TEST_CASE("search is deterministic") {
    const pddl::Domain d = pddl::parse_domain(read_file(fixture("pddl/hierarchy_domain.pddl")));
    const pddl::Problem p = pddl::parse_problem(read_file(fixture("pddl/hierarchy_problem.pddl")), d);
    CHECK(plan(d, p) == plan(d, p));
  }

  TEST_CASE("random kitchen instances agree with exhaustive search") {
    std::size_t solvable = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      CAPTURE(seed);
      const pddl::Problem p = testing::random_kitchen_instance(1000 + seed);
      const auto oracle = testing::oracle_bfs(kitchen(), p);
      const PlanResult bfs = plan(kitchen(), p, {Strategy::Bfs});
      const PlanResult greedy = plan(kitchen(), p, {Strategy::GreedyGoalCount});
      REQUIRE(bfs.outcome != Outcome::ResourceExceeded);
      REQUIRE(greedy.outcome != Outcome::ResourceExceeded);
      CHECK(bfs.solved() == oracle.solvable);
      CHECK(greedy.solved() == oracle.solvable);
      if (!oracle.solvable) continue;
      ++solvable;
      CHECK(bfs.plan.steps.size() == oracle.length);
      CHECK(greedy.plan.steps.size() <= oracle.length + 4);
      CHECK(pddl::validate_plan(kitchen(), p, bfs.plan).ok);
      CHECK(pddl::validate_plan(kitchen(), p, greedy.plan).ok);
    }
    // Both outcomes are exercised.
    CHECK(solvable > 10);
    CHECK(solvable < 100);
  }

  TEST_CASE("goal-count heuristic") {
    using pddl::Atom;
    using pddl::Literal;
    const std::vector<Literal> goal = {{{"sliced", {"a"}}, false}, {{"cooked", {"a"}}, false}, {{"clean", {"b"}}, false}};
    CHECK(goal_count_heuristic({}, goal) == 3);
    CHECK(goal_count_heuristic({{"sliced", {"a"}}, {"cooked", {"a"}}, {"clean", {"b"}}}, goal) == 0);

    Rng rng(7);
    const std::vector<Atom> universe = {{"p", {"a"}}, {"p", {"b"}}, {"q", {"a"}}, {"q", {"b"}}, {"r", {}}};
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Atom> state;
      for (const auto& a : universe) {
        if (rng.chance(0.5)) state.push_back(a);
      }
      std::vector<Literal> g;
      for (const auto& a : universe) {
        if (rng.chance(0.5)) g.push_back({a, rng.chance(0.3)});
      }
      std::size_t expected = 0;
      for (const auto& l : g) {
        const bool present = std::find(state.begin(), state.end(), l.atom) != state.end();
        expected += present == l.negated ? 1 : 0;
      }
      CHECK(goal_count_heuristic(state, g) == expected);
    }
  }

  TEST_CASE("compiled heuristic agrees with the atom-level count") {
    const pddl::Problem p = testing::random_kitchen_instance(5);
    const CompiledTask task(kitchen(), p);
    CHECK(task.heuristic(task.initial_state()) == goal_count_heuristic(task.decode(task.initial_state()), p.goal));
    CHECK(testing::sorted(task.decode(task.initial_state())) == testing::sorted(p.init));
  }
}
