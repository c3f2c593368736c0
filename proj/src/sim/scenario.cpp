#include <algorithm>

#include "json.hpp"
#include "symgoal/sim/world.hpp"

namespace symgoal::sim {
namespace {

using Json = nlohmann::ordered_json;

}  // namespace

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Easy: return "easy";
    case Level::Medium: return "medium";
    case Level::Hard1: return "hard1";
    case Level::Hard2: return "hard2";
  }
  return "?";
}

Level parse_level(std::string_view text) {
  for (Level l : kAllLevels) {
    if (to_string(l) == text) return l;
  }
  throw SchemaError("unknown scenario level " + std::string(text));
}

scene::SceneGraph perceive(const scene::SceneGraph& truth, const NoiseConfig& noise, Rng& rng) {
  scene::SceneGraph detected;
  detected.width = truth.width;
  detected.height = truth.height;
  std::vector<long> remap(truth.objects.size(), -1);
  for (std::size_t i = 0; i < truth.objects.size(); ++i) {
    if (noise.dropout > 0.0 && rng.chance(noise.dropout)) continue;
    scene::SceneObject object = truth.objects[i];
    if (noise.jitter > 0) {
      scene::BoundingBox shifted = object.bbox;
      const auto dx = static_cast<int>(rng.between(-noise.jitter, noise.jitter));
      const auto dy = static_cast<int>(rng.between(-noise.jitter, noise.jitter));
      shifted.x1 += dx;
      shifted.x2 += dx;
      shifted.y1 += dy;
      shifted.y2 += dy;
      object.mask = scene::SegmentMask::from_box(truth.width, truth.height, shifted);
    }
    remap[i] = static_cast<long>(detected.objects.size());
    detected.objects.push_back(std::move(object));
  }
  for (const auto& rel : truth.relations) {
    if (remap[rel.subject] < 0 || remap[rel.object] < 0) continue;
    detected.relations.push_back(
        {static_cast<std::size_t>(remap[rel.subject]), rel.label, static_cast<std::size_t>(remap[rel.object])});
  }
  return detected;
}

Scenario generate_scenario(goal::Action task, Level level, std::uint64_t seed, const NoiseConfig& noise,
                           const text::Resources& res) {
  Rng rng(seed);
  Scenario sc;
  sc.task = task;
  sc.level = level;
  sc.seed = seed;

  const auto subjects = res.table.subject_categories(res.kb, task);
  const std::string subject = rng.pick(subjects);
  const std::string object = rng.pick(res.table.object_categories(res.kb, task, subject));
  sc.gold = {task, subject, object};

  // Clutter may share affordances with the participants. Hard2 draws only from
  // categories that fit neither role, so nothing can stand in for a missing one.
  std::vector<std::string> clutter;
  for (const auto& e : res.kb.entries()) {
    if (e.category != subject && e.category != object) clutter.push_back(e.category);
  }
  auto strict = text::distractor_pool(res, task, subject, object);
  auto& pool = level == Level::Hard2 ? strict : clutter;
  rng.shuffle(pool);
  auto take_distractors = [&](std::int64_t lo, std::int64_t hi) {
    const auto n = std::min(static_cast<std::size_t>(rng.between(lo, hi)), pool.size());
    return std::vector<std::string>(pool.begin(), pool.begin() + static_cast<long>(n));
  };

  std::vector<std::string> categories;
  switch (level) {
    case Level::Easy:
      categories = {subject, object};
      break;
    case Level::Medium:
      categories = {subject, object};
      for (auto& c : take_distractors(2, 4)) categories.push_back(std::move(c));
      break;
    case Level::Hard1: {
      const auto copies = rng.between(2, 3);
      for (std::int64_t i = 0; i < copies; ++i) categories.push_back(subject);
      categories.push_back(object);
      for (auto& c : take_distractors(0, 2)) categories.push_back(std::move(c));
      break;
    }
    case Level::Hard2: {
      // 0 leaves out the subject, 1 the object, 2 both.
      const auto omit = rng.below(3);
      if (omit == 1) categories.push_back(subject);
      if (omit == 0) categories.push_back(object);
      if (omit != 1) sc.gold.subject = std::string(goal::kUnknown);
      if (omit != 0) sc.gold.object = std::string(goal::kUnknown);
      for (auto& c : take_distractors(1, 3)) categories.push_back(std::move(c));
      break;
    }
  }
  rng.shuffle(categories);
  sc.truth = scene::layout_scene(categories, res.kb, rng);
  if (task == goal::Action::Clean) {
    for (auto& o : sc.truth.objects) {
      if (o.category == subject) o.attributes.push_back("dirty");
    }
  }

  const auto& held = res.templates.held_out(task);
  const bool intent = rng.below(2) == 1;
  sc.request_kind = intent ? "intent" : "instruction";
  sc.request = res.templates.render(rng.pick(intent ? held.intent : held.instruction), subject, object);

  sc.world = make_world(sc.truth, res.kb);
  sc.detected = perceive(sc.truth, noise, rng);
  return sc;
}

std::string scenario_to_json(const Scenario& sc, int indent) {
  Json j;
  j["schema"] = "symgoal.scenario";
  j["version"] = 1;
  j["task"] = goal::to_string(sc.task);
  j["level"] = to_string(sc.level);
  j["seed"] = sc.seed;
  j["request"] = sc.request;
  j["request_kind"] = sc.request_kind;
  j["gold"] = {{"action", goal::to_string(sc.gold.action)}, {"subject", sc.gold.subject}, {"object", sc.gold.object}};
  j["truth"] = Json::parse(scene::scene_to_json(sc.truth, -1));
  j["detected"] = Json::parse(scene::scene_to_json(sc.detected, -1));
  return j.dump(indent) + "\n";
}

Scenario scenario_from_json(std::string_view text, const scene::KnowledgeBase& kb) {
  Scenario sc;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("schema", "") != "symgoal.scenario") throw SchemaError("not a scenario document");
    sc.task = goal::parse_action(j.at("task").get<std::string>());
    sc.level = parse_level(j.at("level").get<std::string>());
    sc.seed = j.at("seed").get<std::uint64_t>();
    sc.request = j.at("request").get<std::string>();
    sc.request_kind = j.at("request_kind").get<std::string>();
    const auto& g = j.at("gold");
    sc.gold = {goal::parse_action(g.at("action").get<std::string>()), g.at("subject").get<std::string>(),
               g.at("object").get<std::string>()};
    sc.truth = scene::scene_from_json(j.at("truth").dump(), kb.vocabulary());
    sc.detected = scene::scene_from_json(j.at("detected").dump(), kb.vocabulary());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("scenario: ") + e.what());
  }
  sc.world = make_world(sc.truth, kb);
  return sc;
}

}  // namespace symgoal::sim
