#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "symgoal/errors.hpp"
#include "symgoal/scene/scene.hpp"

namespace symgoal::scene {
namespace {

bool contains(const std::vector<std::string>& list, std::string_view value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + " outside [0, 1]: " + std::to_string(p));
}

}  // namespace

SegmentMask SceneGraph::mask_of(std::size_t index) const {
  const SceneObject& object = objects.at(index);
  if (object.mask) return *object.mask;
  return SegmentMask::from_box(width, height, object.bbox);
}

bool SceneGraph::has_category(std::string_view category) const {
  return std::any_of(objects.begin(), objects.end(), [&](const auto& o) { return o.category == category; });
}

const SceneObject* SceneGraph::find(std::string_view id) const {
  auto it = std::find_if(objects.begin(), objects.end(), [&](const auto& o) { return o.id == id; });
  return it == objects.end() ? nullptr : &*it;
}

double graph_probability(const ComponentScores& scores) {
  check_probability(scores.p_boxes, "P(B|I)");
  for (double p : scores.p_attrs) check_probability(p, "P(A|B,I)");
  for (double p : scores.p_rels) check_probability(p, "P(R|A,B,I)");
  double product = scores.p_boxes;
  for (double p : scores.p_attrs) product *= p;
  for (double p : scores.p_rels) product *= p;
  return product;
}

bool Vocabulary::has_category(std::string_view c) const { return contains(categories, c); }
bool Vocabulary::has_affordance(std::string_view a) const { return contains(affordances, a); }
bool Vocabulary::has_attribute(std::string_view a) const { return contains(attributes, a); }
bool Vocabulary::has_relationship(std::string_view r) const { return contains(relationships, r); }

void validate(const SceneGraph& scene, const Vocabulary& vocabulary) {
  if (scene.width <= 0 || scene.height <= 0) throw SchemaError("scene image size must be positive");
  std::set<std::string> ids;
  for (const auto& object : scene.objects) {
    if (object.id.empty()) throw SchemaError("scene object without id");
    if (!ids.insert(object.id).second) throw SchemaError("duplicate scene object id " + object.id);
    if (!vocabulary.has_category(object.category)) throw UnknownCategory(object.category);
    for (const auto& a : object.affordances) {
      if (!vocabulary.has_affordance(a)) throw SchemaError("unknown affordance " + a + " on " + object.id);
    }
    for (const auto& a : object.attributes) {
      if (!vocabulary.has_attribute(a)) throw SchemaError("unknown attribute " + a + " on " + object.id);
    }
    if (!object.bbox.valid()) throw SchemaError("degenerate bounding box on " + object.id);
    if (object.mask && (object.mask->width() != scene.width || object.mask->height() != scene.height)) {
      throw SchemaError("mask of " + object.id + " does not match the image size");
    }
  }
  for (const auto& rel : scene.relations) {
    if (rel.subject >= scene.objects.size() || rel.object >= scene.objects.size()) {
      throw SchemaError("relation index out of range");
    }
    if (!vocabulary.has_relationship(rel.label)) throw SchemaError("unknown relationship " + rel.label);
  }
}

SceneGraph layout_scene(const std::vector<std::string>& categories, const KnowledgeBase& kb, Rng& rng, int width,
                        int height) {
  SceneGraph scene;
  scene.width = width;
  scene.height = height;
  if (categories.empty()) return scene;
  const int column = width / static_cast<int>(categories.size());
  std::map<std::string, int> ordinals;
  for (std::size_t i = 0; i < categories.size(); ++i) {
    const std::string& category = categories[i];
    const KnowledgeBase::Entry* entry = kb.find(category);
    if (!entry) throw UnknownCategory(category);
    const int box_w = std::max(8, static_cast<int>(rng.between(column / 2, column * 4 / 5)));
    const int box_h = static_cast<int>(rng.between(height / 8, height / 4));
    const int left = static_cast<int>(i) * column;
    const int x1 = left + static_cast<int>(rng.between(0, std::max(0, column - box_w - 1)));
    const int y1 = static_cast<int>(rng.between(height / 4, height - box_h - 1));
    SceneObject object;
    object.id = category + "-" + std::to_string(++ordinals[category]);
    object.category = category;
    object.affordances = entry->affordances;
    object.attributes = entry->attributes;
    object.bbox = {x1, y1, std::min(width, x1 + box_w), y1 + box_h};
    scene.objects.push_back(std::move(object));
  }
  return scene;
}

}  // namespace symgoal::scene
