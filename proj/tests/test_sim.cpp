#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "symgoal/pddl/pddl.hpp"
#include "symgoal/sim/world.hpp"

using namespace symgoal;
using namespace symgoal::sim;
using symgoal::testing::fixture;
using symgoal::testing::kit;

namespace {

scene::SceneGraph tomato_scene() { return scene::load_scene(fixture("tomato_scene.json"), kit().res.kb.vocabulary()); }

pddl::GroundAction act(std::string name, std::vector<std::string> args) {
  pddl::GroundAction a;
  a.name = std::move(name);
  a.args = std::move(args);
  return a;
}

pddl::Plan tomato_plan() { return {{act("grasp", {"knife-1"}), act("cut", {"tomato-1", "knife-1"})}}; }

std::multiset<std::string> categories(const scene::SceneGraph& s) {
  std::multiset<std::string> out;
  for (const auto& o : s.objects) out.insert(o.category);
  return out;
}

}  // namespace

TEST_SUITE("sim") {
  TEST_CASE("primitive effects") {
    const WorldState w0 = make_world(tomato_scene(), kit().res.kb);
    CHECK(w0.gripper.empty());
    const WorldState w1 = step(w0, act("grasp", {"knife-1"}));
    CHECK(w1.gripper == "knife-1");
    CHECK(w1.find("knife-1")->held());
    const WorldState w2 = step(w1, act("cut", {"tomato-1", "knife-1"}));
    CHECK(w2.find("tomato-1")->sliced);
    CHECK_FALSE(w2.find("bread-1")->sliced);

    try {
      step(w1, act("grasp", {"tomato-1"}));
      FAIL("expected PreconditionUnmet");
    } catch (const PreconditionUnmet& e) {
      CHECK(e.literal() == "(not (hand-full))");
    }
    CHECK_THROWS_AS(step(w0, act("cut", {"tomato-1", "knife-1"})), PreconditionUnmet);
    CHECK_THROWS_AS(step(w0, act("grasp", {"ghost-1"})), PreconditionUnmet);
    CHECK_THROWS_AS(step(w0, act("fly", {"knife-1"})), PreconditionUnmet);
  }

  TEST_CASE("stepper agrees with the domain semantics") {
    // Random walks over every ground action: applicability and successor
    // projection must match the PDDL reading of the same state.
    const auto& d = kit().domain;
    std::size_t applied = 0, rejected = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Rng rng(seed);
      std::vector<std::string> cats;
      for (auto n = rng.between(2, 6); n > 0; --n) cats.push_back(rng.pick(kit().res.kb.entries()).category);
      scene::SceneGraph s = scene::layout_scene(cats, kit().res.kb, rng);
      for (auto& o : s.objects) {
        if (kit().res.kb.supports(o.category, "dirty") && rng.chance(0.5)) o.attributes.push_back("dirty");
      }
      const auto fragment = scene::build_initial_state(s, kit().res.kb, d);
      const auto problem = scene::make_problem(fragment, {}, "walk", d);
      const auto actions = pddl::ground(d, problem);
      WorldState world = make_world(s, kit().res.kb);
      REQUIRE(projection(world) == testing::sorted(problem.init));

      for (int t = 0; t < 60; ++t) {
        const auto state = projection(world);
        const std::set<pddl::Atom> atoms(state.begin(), state.end());
        const auto& a = actions[rng.below(actions.size())];
        const bool pre = std::all_of(a.pre.begin(), a.pre.end(),
                                     [&](const auto& l) { return atoms.contains(l.atom) != l.negated; });
        if (!pre) {
          CHECK_THROWS_AS(step(world, a), PreconditionUnmet);
          ++rejected;
          continue;
        }
        std::set<pddl::Atom> expected = atoms;
        for (const auto& x : a.del) expected.erase(x);
        for (const auto& x : a.add) expected.insert(x);
        REQUIRE_NOTHROW(world = step(world, a));
        const auto got = projection(world);
        CHECK(std::vector<pddl::Atom>(expected.begin(), expected.end()) == got);
        ++applied;
      }
    }
    CHECK(applied > 50);
    CHECK(rejected > 50);
  }

  TEST_CASE("plan execution") {
    const WorldState w = make_world(tomato_scene(), kit().res.kb);
    const ExecutionTrace empty = run_plan(w, {});
    CHECK(empty.success);
    CHECK(empty.steps.empty());

    MaskMap perfect;
    const auto scene = tomato_scene();
    for (std::size_t i = 0; i < scene.objects.size(); ++i) perfect.emplace(scene.objects[i].id, scene.mask_of(i));
    const ExecutionTrace ok = run_plan(w, tomato_plan(), &perfect);
    CHECK(ok.success);
    REQUIRE(ok.steps.size() == 2);
    for (const auto& s : ok.steps) CHECK(s.iou == 1.0);
  }

  TEST_CASE("mask overlap of 0.4 fails the step") {
    scene::SceneGraph scene = tomato_scene();
    scene.objects[2].bbox = {200, 160, 270, 200};  // tomato, 70 px wide
    const WorldState w = make_world(scene, kit().res.kb);
    MaskMap detected;
    for (std::size_t i = 0; i < scene.objects.size(); ++i) detected.emplace(scene.objects[i].id, scene.mask_of(i));
    // A 30 px shift leaves 40 px of overlap over a 100 px union.
    detected["tomato-1"] = scene::SegmentMask::from_box(scene.width, scene.height, {230, 160, 300, 200});
    REQUIRE(scene::iou(detected["tomato-1"], scene.mask_of(2)) == doctest::Approx(0.4));

    const ExecutionTrace t = run_plan(w, tomato_plan(), &detected);
    CHECK_FALSE(t.success);
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].iou == 1.0);
    CHECK(t.steps[1].iou == doctest::Approx(0.4));

    detected.erase("knife-1");
    const ExecutionTrace lost = run_plan(w, tomato_plan(), &detected);
    CHECK_FALSE(lost.success);
    CHECK(lost.steps.size() == 1);
  }

  TEST_CASE("scenario levels") {
    for (goal::Action task : goal::kAllActions) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CAPTURE(seed);
        const auto easy = generate_scenario(task, Level::Easy, seed, NoiseConfig::none(), kit().res);
        CHECK(categories(easy.truth) == std::multiset<std::string>{easy.gold.subject, easy.gold.object});
        CHECK(easy.request_kind.size() > 0);

        const auto medium = generate_scenario(task, Level::Medium, seed, NoiseConfig::none(), kit().res);
        CHECK(medium.truth.objects.size() >= 4);
        CHECK(medium.truth.objects.size() <= 6);

        const auto hard1 = generate_scenario(task, Level::Hard1, seed, NoiseConfig::none(), kit().res);
        CHECK(categories(hard1.truth).count(hard1.gold.subject) >= 2);

        const auto hard2 = generate_scenario(task, Level::Hard2, seed, NoiseConfig::none(), kit().res);
        CHECK_FALSE(hard2.valid());
        const bool subject_gone = hard2.gold.subject == goal::kUnknown;
        const bool object_gone = hard2.gold.object == goal::kUnknown;
        CHECK((subject_gone || object_gone));
        // No distractor can stand in for a missing role.
        for (const auto& o : hard2.truth.objects) {
          if (o.category == hard2.gold.subject || o.category == hard2.gold.object) continue;
          if (subject_gone) CHECK_FALSE(kit().res.table.fits_subject(kit().res.kb, task, o.category));
          if (object_gone) CHECK_FALSE(kit().res.table.fits_object(kit().res.kb, task, o.category));
        }
      }
    }
  }

  TEST_CASE("cutting scenarios") {
    const auto easy = generate_scenario(goal::Action::Cut, Level::Easy, 4, NoiseConfig::none(), kit().res);
    CHECK(easy.gold.action == goal::Action::Cut);
    CHECK(easy.truth.objects.size() == 2);
    const auto hard1 = generate_scenario(goal::Action::Cut, Level::Hard1, 4, NoiseConfig::none(), kit().res);
    CHECK(categories(hard1.truth).count(hard1.gold.subject) >= 2);
  }

  TEST_CASE("noise-free perception sees the truth") {
    const auto sc = generate_scenario(goal::Action::Clean, Level::Medium, 2, NoiseConfig::none(), kit().res);
    CHECK(sc.detected.objects.size() == sc.truth.objects.size());
    for (std::size_t i = 0; i < sc.truth.objects.size(); ++i) {
      CHECK(scene::iou(sc.detected.mask_of(i), sc.truth.mask_of(i)) == 1.0);
    }
    Rng rng(1);
    const auto dropped = perceive(sc.truth, {1.0, 0}, rng);
    CHECK(dropped.objects.empty());
  }

  TEST_CASE("scenario json round trip") {
    const auto sc = generate_scenario(goal::Action::PickPlace, Level::Hard1, 8, NoiseConfig{}, kit().res);
    const auto back = scenario_from_json(scenario_to_json(sc), kit().res.kb);
    CHECK(back.gold == sc.gold);
    CHECK(back.truth == sc.truth);
    CHECK(back.detected == sc.detected);
    CHECK(back.world == sc.world);
    CHECK(scenario_to_json(back) == scenario_to_json(sc));
    CHECK(trace_to_json(run_plan(sc.world, {})).find("\"success\": true") != std::string::npos);
  }

  TEST_CASE("level names") {
    for (Level l : kAllLevels) CHECK(parse_level(to_string(l)) == l);
    CHECK_THROWS(parse_level("impossible"));
  }
}
