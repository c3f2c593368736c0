#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/scene/scene.hpp"
#include "symgoal/util/io.hpp"

namespace symgoal::scene {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> string_list(const Json& node, const char* key) {
  std::vector<std::string> out;
  if (!node.contains(key)) return out;
  if (!node.at(key).is_array()) throw SchemaError(std::string("expected array for ") + key);
  for (const auto& item : node.at(key)) out.push_back(item.get<std::string>());
  return out;
}

bool observed(const SceneObject& object, const std::string& label) {
  auto has = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), label) != v.end(); };
  return has(object.affordances) || has(object.attributes);
}

}  // namespace

KnowledgeBase KnowledgeBase::from_json(std::string_view text) {
  KnowledgeBase kb;
  try {
    const Json doc = Json::parse(text);
    auto read_labels = [&](const char* key, std::vector<std::string>& labels) {
      for (const auto& [label, predicate] : doc.at(key).items()) {
        labels.push_back(label);
        if (!kb.predicates_.emplace(label, predicate.get<std::string>()).second) {
          throw SchemaError("label " + label + " declared twice");
        }
      }
    };
    read_labels("affordances", kb.vocabulary_.affordances);
    read_labels("attributes", kb.vocabulary_.attributes);
    read_labels("relationships", kb.vocabulary_.relationships);

    for (const auto& node : doc.at("categories")) {
      Entry entry{node.at("name").get<std::string>(), node.at("type").get<std::string>(),
                  string_list(node, "affordances"), string_list(node, "attributes"), string_list(node, "optional")};
      if (kb.find(entry.category)) throw SchemaError("category " + entry.category + " declared twice");
      for (const auto& a : entry.affordances) {
        if (!kb.vocabulary_.has_affordance(a)) throw SchemaError("unknown affordance " + a);
      }
      for (const auto& a : entry.attributes) {
        if (!kb.vocabulary_.has_attribute(a)) throw SchemaError("unknown attribute " + a);
      }
      for (const auto& a : entry.optional) {
        if (!kb.vocabulary_.has_attribute(a) && !kb.vocabulary_.has_affordance(a)) {
          throw SchemaError("unknown optional label " + a);
        }
      }
      kb.vocabulary_.categories.push_back(entry.category);
      kb.entries_.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("knowledge base: ") + e.what());
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load(const std::filesystem::path& path) { return from_json(read_file(path)); }

const KnowledgeBase::Entry* KnowledgeBase::find(std::string_view category) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return e.category == category; });
  return it == entries_.end() ? nullptr : &*it;
}

const std::string& KnowledgeBase::predicate_for(std::string_view label) const {
  auto it = predicates_.find(label);
  if (it == predicates_.end()) throw SchemaError("no predicate template for label " + std::string(label));
  return it->second;
}

bool KnowledgeBase::supports(std::string_view category, std::string_view predicate) const {
  const Entry* entry = find(category);
  if (!entry) return false;
  for (const auto* list : {&entry->affordances, &entry->attributes, &entry->optional}) {
    for (const auto& label : *list) {
      if (predicate_for(label) == predicate) return true;
    }
  }
  return false;
}

std::vector<std::string> KnowledgeBase::categories_supporting(std::string_view predicate) const {
  std::vector<std::string> out;
  for (const auto& entry : entries_) {
    if (supports(entry.category, predicate)) out.push_back(entry.category);
  }
  return out;
}

void KnowledgeBase::check_against(const pddl::Domain& domain) const {
  for (const auto& [label, predicate] : predicates_) {
    const pddl::PredicateSchema* schema = domain.find_predicate(predicate);
    if (!schema) throw pddl::InvalidModel("knowledge base predicate " + predicate + " missing from domain");
    const bool relation = vocabulary_.has_relationship(label);
    if (schema->params.size() != (relation ? 2u : 1u)) {
      throw pddl::InvalidModel("knowledge base predicate " + predicate + " has the wrong arity");
    }
  }
  for (const auto& entry : entries_) {
    if (!domain.has_type(entry.type)) throw pddl::InvalidModel("knowledge base type " + entry.type + " undeclared");
  }
}

std::vector<std::string> ProblemFragment::constants_of(std::string_view category) const {
  std::vector<std::pair<int, std::string>> found;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (categories[i] != category) continue;
    const std::string& name = objects[i].name;
    found.emplace_back(std::stoi(name.substr(name.rfind('-') + 1)), name);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> out;
  for (auto& [ordinal, name] : found) out.push_back(std::move(name));
  return out;
}

std::optional<std::size_t> ProblemFragment::index_of(std::string_view constant) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].name == constant) return i;
  }
  return std::nullopt;
}

ProblemFragment build_initial_state(const SceneGraph& scene, const KnowledgeBase& kb, const pddl::Domain& domain) {
  validate(scene, kb.vocabulary());
  for (const auto& object : scene.objects) {
    if (!kb.find(object.category)) throw UnknownCategory(object.category);
  }

  // Left-to-right by box center; the original index breaks ties.
  std::vector<std::size_t> order(scene.objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scene.objects[a].bbox.center_x() < scene.objects[b].bbox.center_x();
  });

  ProblemFragment fragment;
  std::map<std::string, int> ordinals;
  std::vector<std::string> constant_of_box(scene.objects.size());
  for (std::size_t box : order) {
    const SceneObject& object = scene.objects[box];
    const KnowledgeBase::Entry& entry = *kb.find(object.category);
    const std::string constant = object.category + "-" + std::to_string(++ordinals[object.category]);
    constant_of_box[box] = constant;
    fragment.objects.push_back({constant, entry.type});
    fragment.categories.push_back(object.category);
    fragment.box_index.push_back(box);
    fragment.source_ids.push_back(object.id);
  }
  for (std::size_t i = 0; i < fragment.objects.size(); ++i) {
    const SceneObject& object = scene.objects[fragment.box_index[i]];
    const KnowledgeBase::Entry& entry = *kb.find(object.category);
    const std::string& constant = fragment.objects[i].name;
    for (const auto& label : entry.affordances) fragment.init.push_back({kb.predicate_for(label), {constant}});
    for (const auto& label : entry.attributes) fragment.init.push_back({kb.predicate_for(label), {constant}});
    for (const auto& label : entry.optional) {
      if (observed(object, label)) fragment.init.push_back({kb.predicate_for(label), {constant}});
    }
  }
  for (const auto& rel : scene.relations) {
    fragment.init.push_back(
        {kb.predicate_for(rel.label), {constant_of_box[rel.subject], constant_of_box[rel.object]}});
  }
  for (const auto& atom : fragment.init) {
    if (!domain.find_predicate(atom.predicate)) throw pddl::UndeclaredSymbol(atom.predicate);
  }
  return fragment;
}

pddl::Problem make_problem(const ProblemFragment& fragment, std::vector<pddl::Literal> goal, std::string name,
                           const pddl::Domain& domain) {
  pddl::Problem problem;
  problem.name = std::move(name);
  problem.domain_name = domain.name;
  problem.objects = fragment.objects;
  for (const auto& atom : fragment.init) {
    if (std::find(problem.init.begin(), problem.init.end(), atom) == problem.init.end()) problem.init.push_back(atom);
  }
  problem.goal = std::move(goal);
  return problem;
}

}  // namespace symgoal::scene
