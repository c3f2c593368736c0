#pragma once

// Closed-form kitchen: object locations, gripper and task flags, with the
// primitive effects written out by hand (independently of the PDDL domain,
// which tests check against).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symgoal/errors.hpp"
#include "symgoal/goal/goal_triple.hpp"
#include "symgoal/pddl/model.hpp"
#include "symgoal/scene/scene.hpp"
#include "symgoal/text/datasets.hpp"

namespace symgoal::sim {

class PreconditionUnmet : public Error {
 public:
  PreconditionUnmet(std::string action, std::string literal)
      : Error("precondition unmet for " + action + ": " + literal),
        action_(std::move(action)),
        literal_(std::move(literal)) {}
  const std::string& action() const { return action_; }
  const std::string& literal() const { return literal_; }

 private:
  std::string action_;
  std::string literal_;
};

enum class Place { Table, Gripper, On, Delivered };

struct ObjectState {
  std::string id;
  std::string category;
  std::string type;                  // item | fixture | agent
  std::vector<std::string> statics;  // knowledge-base predicates that never change
  Place place = Place::Table;
  std::string target;  // receptacle or recipient id for On / Delivered
  bool sliced = false;
  bool cooked = false;
  bool clean = false;
  bool dirty = false;
  scene::SegmentMask mask;  // ground truth

  bool has(std::string_view predicate) const;
  bool held() const { return place == Place::Gripper; }

  friend bool operator==(const ObjectState&, const ObjectState&) = default;
};

struct WorldState {
  std::vector<ObjectState> objects;
  std::string gripper;  // empty when free

  const ObjectState* find(std::string_view id) const;
  ObjectState* find(std::string_view id);

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

// Every object starts on the table. Static predicates come from the
// knowledge base; an observed "dirty" label sets the dirty flag.
WorldState make_world(const scene::SceneGraph& truth, const scene::KnowledgeBase& kb);

// Applies one primitive (grasp, take, put, cut, cook, clean, deliver) by name
// and arguments. Throws PreconditionUnmet naming the first failed condition.
WorldState step(const WorldState& world, const pddl::GroundAction& action);

// Atoms true in the state: static predicates plus holding, hand-full,
// placed, on, sliced, cooked, clean, dirty, delivered. Sorted.
std::vector<pddl::Atom> projection(const WorldState& world);

struct StepRecord {
  std::string action;
  bool applied = false;
  double iou = 0.0;  // lowest over the manipulated objects
  std::string error;
};

struct ExecutionTrace {
  std::vector<StepRecord> steps;
  bool success = true;
};

inline constexpr double kIouThreshold = 0.5;

using MaskMap = std::map<std::string, scene::SegmentMask>;

// Executes the plan (constants are world ids). A step succeeds when it
// applies and every argument's detected mask overlaps its ground truth with
// IoU above the threshold; execution stops at the first failure. Without
// detected masks the ground-truth masks are used.
ExecutionTrace run_plan(const WorldState& world, const pddl::Plan& plan, const MaskMap* detected = nullptr);

std::string trace_to_json(const ExecutionTrace& trace, int indent = 2);

enum class Level { Easy, Medium, Hard1, Hard2 };
inline constexpr Level kAllLevels[] = {Level::Easy, Level::Medium, Level::Hard1, Level::Hard2};

std::string_view to_string(Level level);
Level parse_level(std::string_view text);
inline bool has_solution(Level level) { return level != Level::Hard2; }

struct NoiseConfig {
  double dropout = 0.02;  // chance a box goes undetected
  int jitter = 2;         // max detected-mask shift in pixels, each axis

  static NoiseConfig none() { return {0.0, 0}; }
};

struct Scenario {
  goal::Action task = goal::Action::PickPlace;
  Level level = Level::Easy;
  std::uint64_t seed = 0;
  std::string request;
  std::string request_kind;  // "instruction" or "intent"
  goal::GoalTriple gold;
  scene::SceneGraph truth;
  scene::SceneGraph detected;
  WorldState world;

  bool valid() const { return has_solution(level); }
};

// Easy: the participants only. Medium: plus 2-4 distractors. Hard1: 2-3
// instances of the subject. Hard2: subject, object or both left out, with no
// other object able to stand in; the gold goal marks them UNKNOWN. Requests
// come from the held-out templates.
Scenario generate_scenario(goal::Action task, Level level, std::uint64_t seed, const NoiseConfig& noise,
                           const text::Resources& res);

// Detection model: drops boxes with probability dropout and shifts each kept
// mask by up to jitter pixels.
scene::SceneGraph perceive(const scene::SceneGraph& truth, const NoiseConfig& noise, Rng& rng);

std::string scenario_to_json(const Scenario& scenario, int indent = 2);
Scenario scenario_from_json(std::string_view text, const scene::KnowledgeBase& kb);

}  // namespace symgoal::sim
