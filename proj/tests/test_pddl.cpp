#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/pddl/pddl.hpp"
#include "symgoal/util/io.hpp"

using namespace symgoal;
using namespace symgoal::pddl;
using symgoal::testing::fixture;

namespace {

std::string kitchen_text() { return read_file(data_dir() / "kitchen" / "domain.pddl"); }

Domain kitchen() { return parse_domain(kitchen_text()); }

Problem tomato() { return parse_problem(read_file(fixture("tomato_problem.pddl")), kitchen()); }

}  // namespace

TEST_SUITE("pddl") {
  TEST_CASE("minimal domain parses to empty lists") {
    const Domain d = parse_domain("(define (domain d))");
    CHECK(d.name == "d");
    CHECK(d.requirements.empty());
    CHECK(d.types.empty());
    CHECK(d.predicates.empty());
    CHECK(d.actions.empty());
  }

  TEST_CASE("empty domain prints as a single define") {
    std::string text = print_domain(Domain{"d", {}, {}, {}, {}});
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == '\n'; }), text.end());
    CHECK(text == "(define (domain d))");
  }

  TEST_CASE("kitchen domain declares the cut action") {
    const Domain d = kitchen();
    const ActionSchema* cut = d.find_action("cut");
    REQUIRE(cut != nullptr);
    CHECK(cut->params.size() == 2);
    CHECK(d.is_subtype("item", "object"));
    CHECK_FALSE(d.is_subtype("item", "fixture"));
  }

  TEST_CASE("identifiers are lowercased") {
    const Domain d = parse_domain(read_file(fixture("pddl/switch_domain.pddl")));
    CHECK(d.name == "switches");
    CHECK(d.find_action("turn-on") != nullptr);
  }

  TEST_CASE("unsupported constructs are rejected by name") {
    auto feature = [](const std::string& text) {
      try {
        parse_domain(text);
      } catch (const UnsupportedFeature& e) {
        return e.name();
      }
      return std::string("<none>");
    };
    CHECK(feature("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                  ":precondition (forall (?y) (p ?y)) :effect (p ?x)))") == "forall");
    CHECK(feature("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                  ":precondition (p ?x) :effect (when (p ?x) (p ?x))))") == "when");
    CHECK(feature("(define (domain d) (:requirements :adl))") == "adl");
    CHECK(feature("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                  ":precondition (or (p ?x) (p ?x)) :effect (p ?x)))") == "or");
    CHECK(feature("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                  ":precondition (at start (p ?x)) :effect (p ?x)))") == "at");
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      parse_domain("(define (domain d)\n  (:predicates (p ?x))\n  (:action a :parameters (x)))");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 3);
      CHECK(e.col() > 1);
    }
    CHECK_THROWS_AS(parse_domain("(define (domain d)"), SyntaxError);
    CHECK_THROWS_AS(parse_domain(""), SyntaxError);
  }

  TEST_CASE("model invariants are enforced") {
    CHECK_THROWS_AS(parse_domain("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                                 ":precondition (q ?x) :effect (p ?x)))"),
                    UndeclaredSymbol);
    CHECK_THROWS_AS(parse_domain("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                                 ":precondition (p ?y) :effect (p ?x)))"),
                    InvalidModel);
    CHECK_THROWS_AS(parse_domain("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                                 ":effect (and (p ?x) (not (p ?x)))))"),
                    InvalidModel);
    CHECK_THROWS_AS(parse_domain("(define (domain d) (:predicates (p ?x)) (:action a :parameters (?x) "
                                 ":effect (p ?x)) (:action a :parameters (?x) :effect (p ?x)))"),
                    InvalidModel);
  }

  TEST_CASE("empty problem has empty init and goal") {
    const Domain d = parse_domain(read_file(fixture("pddl/switch_domain.pddl")));
    const Problem p = parse_problem(read_file(fixture("pddl/empty_problem.pddl")), d);
    CHECK(p.objects.empty());
    CHECK(p.init.empty());
    CHECK(p.goal.empty());
  }

  TEST_CASE("problem referencing an undeclared predicate") {
    const Domain d = kitchen();
    CHECK_THROWS_AS(parse_problem("(define (problem p) (:domain kitchen) (:objects a - item) (:init (shiny a)))", d),
                    UndeclaredSymbol);
    CHECK_THROWS_AS(parse_problem("(define (problem p) (:domain kitchen) (:init (sliced ghost)))", d),
                    UndeclaredSymbol);
  }

  TEST_CASE("tomato cutting problem") {
    const Problem p = tomato();
    CHECK(p.objects.size() == 2);
    CHECK(p.find_object("knife-1") != nullptr);
    CHECK(p.find_object("tomato-1") != nullptr);
    REQUIRE(p.goal.size() == 1);
    CHECK(to_string(p.goal[0]) == "(sliced tomato-1)");
  }

  TEST_CASE("round trip over the fixture corpus") {
    for (const auto& [domain_path, problem_text] : testing::pddl_corpus()) {
      CAPTURE(domain_path.string());
      const Domain d = parse_domain(read_file(domain_path));
      const std::string printed = print_domain(d);
      const Domain again = parse_domain(printed);
      CHECK(again == d);
      CHECK(print_domain(again) == printed);
      if (problem_text.empty()) continue;
      const Problem p = parse_problem(problem_text, d);
      const std::string printed_p = print_problem(p);
      const Problem p2 = parse_problem(printed_p, d);
      CHECK(p2 == p);
      CHECK(print_problem(p2) == printed_p);
    }
  }

  TEST_CASE("structurally equal domains print byte-identically") {
    CHECK(print_domain(kitchen()) == print_domain(parse_domain(print_domain(kitchen()))));
  }

  TEST_CASE("grounding counts") {
    const Domain d = parse_domain(
        "(define (domain u) (:requirements :typing) (:types thing) (:predicates (p ?x - thing)) "
        "(:action mark :parameters (?x - thing) :effect (p ?x)))");
    const Problem two = parse_problem("(define (problem q) (:domain u) (:objects a b - thing))", d);
    CHECK(ground(d, two).size() == 2);
    const Problem none = parse_problem("(define (problem q) (:domain u))", d);
    CHECK(ground(d, none).empty());
  }

  TEST_CASE("kitchen grounding matches brute-force enumeration") {
    const Domain d = kitchen();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Problem p = testing::random_kitchen_instance(seed);
      const auto actual = ground(d, p);
      const auto oracle = testing::oracle_ground(d, p);
      REQUIRE(actual.size() == oracle.size());
      std::vector<std::string> a, b;
      for (const auto& g : actual) a.push_back(g.canonical_name());
      for (const auto& g : oracle) {
        std::string name = "(" + g.name;
        for (const auto& x : g.args) name += " " + x;
        b.push_back(name + ")");
      }
      // Canonical order: action name, then argument names.
      CHECK(std::is_sorted(actual.begin(), actual.end(), [](const auto& l, const auto& r) {
        return std::tie(l.name, l.args) < std::tie(r.name, r.args);
      }));
      std::sort(b.begin(), b.end());
      std::vector<std::string> sorted_a = a;
      std::sort(sorted_a.begin(), sorted_a.end());
      CHECK(sorted_a == b);
    }
  }

  TEST_CASE("validate_plan") {
    const Domain d = kitchen();
    const Problem p = tomato();

    Problem trivial = p;
    trivial.goal = {{p.init.front(), false}};
    CHECK(validate_plan(d, trivial, {}).ok);

    const auto empty = validate_plan(d, p, {});
    CHECK_FALSE(empty.ok);
    CHECK(empty.failed_step == 0);
    CHECK(empty.unmet_literal == "(sliced tomato-1)");

    const Plan tomato_plan{{make_ground_action(d, p, "grasp", {"knife-1"}),
                          make_ground_action(d, p, "cut", {"tomato-1", "knife-1"})}};
    CHECK(validate_plan(d, p, tomato_plan).ok);

    const Plan backwards{{make_ground_action(d, p, "cut", {"tomato-1", "knife-1"}),
                          make_ground_action(d, p, "grasp", {"knife-1"})}};
    const auto bad = validate_plan(d, p, backwards);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failed_step == 0);
    CHECK(bad.unmet_literal == "(holding knife-1)");
  }

  TEST_CASE("ground actions are type-checked") {
    const Domain d = kitchen();
    const Problem p = tomato();
    CHECK_THROWS_AS(make_ground_action(d, p, "grasp", {"ghost"}), UndeclaredSymbol);
    CHECK_THROWS_AS(make_ground_action(d, p, "grasp", {"knife-1", "tomato-1"}), InvalidModel);
    CHECK_THROWS_AS(make_ground_action(d, p, "teleport", {"knife-1"}), UndeclaredSymbol);
  }

  TEST_CASE("plan text round trip") {
    const Domain d = kitchen();
    const Problem p = tomato();
    const Plan plan = parse_plan("; slice the tomato\n(grasp knife-1)\n(CUT tomato-1 knife-1)\n", d, p);
    REQUIRE(plan.steps.size() == 2);
    CHECK(parse_plan(print_plan(plan), d, p) == plan);
  }
}
