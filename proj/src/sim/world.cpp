#include <algorithm>

#include "json.hpp"
#include "symgoal/sim/world.hpp"

namespace symgoal::sim {
namespace {

std::string lit(std::string_view pred, std::initializer_list<std::string_view> args, bool negated = false) {
  std::string out = "(" + std::string(pred);
  for (auto a : args) out += " " + std::string(a);
  out += ")";
  return negated ? "(not " + out + ")" : out;
}

class Stepper {
 public:
  Stepper(const WorldState& world, const pddl::GroundAction& action) : next_(world), action_(action) {}

  WorldState run() {
    const std::string& name = action_.name;
    if (name == "grasp") {
      arity(1);
      ObjectState& x = object(0, "item");
      require(x.has("graspable"), lit("graspable", {x.id}));
      require(next_.gripper.empty(), lit("hand-full", {}, true));
      require(!placed(x), lit("placed", {x.id}, true));
      hold(x);
    } else if (name == "take") {
      arity(2);
      ObjectState& x = object(0, "item");
      ObjectState& r = object(1, "");
      require(x.place == Place::On && x.target == r.id, lit("on", {x.id, r.id}));
      require(next_.gripper.empty(), lit("hand-full", {}, true));
      hold(x);
    } else if (name == "put") {
      arity(2);
      ObjectState& x = object(0, "item");
      ObjectState& r = object(1, "");
      require(x.held(), lit("holding", {x.id}));
      require(r.has("receptacle"), lit("receptacle", {r.id}));
      require(!r.held(), lit("holding", {r.id}, true));
      x.place = Place::On;
      x.target = r.id;
      next_.gripper.clear();
    } else if (name == "cut") {
      arity(2);
      ObjectState& x = object(0, "item");
      ObjectState& k = object(1, "item");
      require(k.held(), lit("holding", {k.id}));
      require(k.has("cuts"), lit("cuts", {k.id}));
      require(x.has("cuttable"), lit("cuttable", {x.id}));
      x.sliced = true;
    } else if (name == "cook") {
      arity(2);
      ObjectState& x = object(0, "item");
      ObjectState& h = object(1, "fixture");
      require(x.place == Place::On && x.target == h.id, lit("on", {x.id, h.id}));
      require(h.has("heater"), lit("heater", {h.id}));
      require(x.has("cookable"), lit("cookable", {x.id}));
      x.cooked = true;
    } else if (name == "clean") {
      arity(2);
      ObjectState& x = object(0, "item");
      ObjectState& w = object(1, "fixture");
      require(x.place == Place::On && x.target == w.id, lit("on", {x.id, w.id}));
      require(w.has("washer"), lit("washer", {w.id}));
      require(x.dirty, lit("dirty", {x.id}));
      x.clean = true;
      x.dirty = false;
    } else if (name == "deliver") {
      arity(2);
      ObjectState& x = object(0, "item");
      ObjectState& p = object(1, "agent");
      require(x.held(), lit("holding", {x.id}));
      require(p.has("recipient"), lit("recipient", {p.id}));
      x.place = Place::Delivered;
      x.target = p.id;
      next_.gripper.clear();
    } else {
      fail("known primitive");
    }
    return std::move(next_);
  }

 private:
  static bool placed(const ObjectState& o) { return o.place == Place::On || o.place == Place::Delivered; }

  [[noreturn]] void fail(const std::string& literal) { throw PreconditionUnmet(action_.canonical_name(), literal); }
  void require(bool ok, const std::string& literal) {
    if (!ok) fail(literal);
  }
  void arity(std::size_t n) {
    if (action_.args.size() != n) fail(std::to_string(n) + " arguments");
  }
  ObjectState& object(std::size_t i, std::string_view type) {
    ObjectState* o = next_.find(action_.args[i]);
    if (!o) fail("object " + action_.args[i] + " exists");
    if (!type.empty() && o->type != type) fail(o->id + " - " + std::string(type));
    return *o;
  }
  void hold(ObjectState& x) {
    x.place = Place::Gripper;
    x.target.clear();
    next_.gripper = x.id;
  }

  WorldState next_;
  const pddl::GroundAction& action_;
};

}  // namespace

bool ObjectState::has(std::string_view predicate) const {
  return std::find(statics.begin(), statics.end(), predicate) != statics.end();
}

const ObjectState* WorldState::find(std::string_view id) const {
  auto it = std::find_if(objects.begin(), objects.end(), [&](const auto& o) { return o.id == id; });
  return it == objects.end() ? nullptr : &*it;
}

ObjectState* WorldState::find(std::string_view id) {
  auto it = std::find_if(objects.begin(), objects.end(), [&](const auto& o) { return o.id == id; });
  return it == objects.end() ? nullptr : &*it;
}

WorldState make_world(const scene::SceneGraph& truth, const scene::KnowledgeBase& kb) {
  WorldState world;
  for (std::size_t i = 0; i < truth.objects.size(); ++i) {
    const scene::SceneObject& box = truth.objects[i];
    const scene::KnowledgeBase::Entry* entry = kb.find(box.category);
    if (!entry) throw scene::UnknownCategory(box.category);
    ObjectState o;
    o.id = box.id;
    o.category = box.category;
    o.type = entry->type;
    for (const auto& label : entry->affordances) o.statics.push_back(kb.predicate_for(label));
    for (const auto& label : entry->attributes) o.statics.push_back(kb.predicate_for(label));
    for (const auto& label : entry->optional) {
      const bool observed = std::find(box.attributes.begin(), box.attributes.end(), label) != box.attributes.end() ||
                            std::find(box.affordances.begin(), box.affordances.end(), label) != box.affordances.end();
      if (!observed) continue;
      const std::string& predicate = kb.predicate_for(label);
      if (predicate == "dirty") {
        o.dirty = true;
      } else {
        o.statics.push_back(predicate);
      }
    }
    o.mask = truth.mask_of(i);
    world.objects.push_back(std::move(o));
  }
  return world;
}

WorldState step(const WorldState& world, const pddl::GroundAction& action) { return Stepper(world, action).run(); }

std::vector<pddl::Atom> projection(const WorldState& world) {
  std::vector<pddl::Atom> atoms;
  for (const auto& o : world.objects) {
    for (const auto& p : o.statics) atoms.push_back({p, {o.id}});
    if (o.held()) atoms.push_back({"holding", {o.id}});
    if (o.place == Place::On || o.place == Place::Delivered) atoms.push_back({"placed", {o.id}});
    if (o.place == Place::On) atoms.push_back({"on", {o.id, o.target}});
    if (o.place == Place::Delivered) atoms.push_back({"delivered", {o.id}});
    if (o.sliced) atoms.push_back({"sliced", {o.id}});
    if (o.cooked) atoms.push_back({"cooked", {o.id}});
    if (o.clean) atoms.push_back({"clean", {o.id}});
    if (o.dirty) atoms.push_back({"dirty", {o.id}});
  }
  if (!world.gripper.empty()) atoms.push_back({"hand-full", {}});
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

ExecutionTrace run_plan(const WorldState& world, const pddl::Plan& plan, const MaskMap* detected) {
  ExecutionTrace trace;
  WorldState state = world;
  for (const auto& action : plan.steps) {
    StepRecord record;
    record.action = action.canonical_name();
    try {
      state = step(state, action);
      record.applied = true;
    } catch (const PreconditionUnmet& e) {
      record.error = e.what();
    }
    if (record.applied) {
      record.iou = 1.0;
      for (const auto& arg : action.args) {
        const ObjectState* o = state.find(arg);
        double overlap = 0.0;
        if (!detected) {
          overlap = 1.0;
        } else if (auto it = detected->find(arg); it != detected->end()) {
          overlap = scene::iou(it->second, o->mask);
        }
        record.iou = std::min(record.iou, overlap);
      }
      if (!(record.iou > kIouThreshold)) record.error = "mask overlap below threshold";
    }
    const bool ok = record.applied && record.iou > kIouThreshold;
    trace.steps.push_back(std::move(record));
    if (!ok) {
      trace.success = false;
      break;
    }
  }
  return trace;
}

std::string trace_to_json(const ExecutionTrace& trace, int indent) {
  nlohmann::ordered_json j;
  j["success"] = trace.success;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) {
    nlohmann::ordered_json step;
    step["action"] = s.action;
    step["applied"] = s.applied;
    step["iou"] = s.iou;
    if (!s.error.empty()) step["error"] = s.error;
    j["steps"].push_back(std::move(step));
  }
  return j.dump(indent) + "\n";
}

}  // namespace symgoal::sim
