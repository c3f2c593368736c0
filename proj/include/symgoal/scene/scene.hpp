#pragma once

// Symbolic scene graph (boxes, per-box attribute tuples, pairwise relations),
// the affordance knowledge base and compilation of a detected scene into the
// objects and initial atoms of a PDDL problem.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symgoal/pddl/model.hpp"
#include "symgoal/scene/mask.hpp"
#include "symgoal/util/rng.hpp"

namespace symgoal::scene {

inline constexpr int kDefaultImageSize = 300;

struct SceneObject {
  std::string id;
  std::string category;
  std::vector<std::string> affordances;
  std::vector<std::string> attributes;
  BoundingBox bbox;
  std::optional<SegmentMask> mask;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

struct Relation {
  std::size_t subject = 0;
  std::string label;
  std::size_t object = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct SceneGraph {
  int width = kDefaultImageSize;
  int height = kDefaultImageSize;
  std::vector<SceneObject> objects;
  std::vector<Relation> relations;

  // Explicit mask when present, otherwise the box raster.
  SegmentMask mask_of(std::size_t index) const;
  bool has_category(std::string_view category) const;
  const SceneObject* find(std::string_view id) const;

  friend bool operator==(const SceneGraph&, const SceneGraph&) = default;
};

// Per-component probabilities of a scene graph: one box-set score, one
// score per attribute tuple, one per relation.
struct ComponentScores {
  double p_boxes = 1.0;
  std::vector<double> p_attrs;
  std::vector<double> p_rels;
};

// Product of all component scores. Throws DomainError for scores outside
// [0, 1] (including NaN).
double graph_probability(const ComponentScores& scores);

struct Vocabulary {
  std::vector<std::string> categories;
  std::vector<std::string> affordances;
  std::vector<std::string> attributes;
  std::vector<std::string> relationships;

  bool has_category(std::string_view c) const;
  bool has_affordance(std::string_view a) const;
  bool has_attribute(std::string_view a) const;
  bool has_relationship(std::string_view r) const;
};

class KnowledgeBase {
 public:
  struct Entry {
    std::string category;
    std::string type;
    std::vector<std::string> affordances;  // always emitted
    std::vector<std::string> attributes;   // always emitted
    std::vector<std::string> optional;     // emitted only when observed on the box
  };

  static KnowledgeBase from_json(std::string_view text);
  static KnowledgeBase load(const std::filesystem::path& path);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(std::string_view category) const;

  // Predicate template for an affordance, attribute or relationship label.
  const std::string& predicate_for(std::string_view label) const;

  // True when boxes of this category can carry the predicate (always-on or
  // optional label).
  bool supports(std::string_view category, std::string_view predicate) const;
  std::vector<std::string> categories_supporting(std::string_view predicate) const;

  // Throws InvalidModel when an emitted predicate or object type is missing
  // from the domain, or a predicate is not unary.
  void check_against(const pddl::Domain& domain) const;

 private:
  Vocabulary vocabulary_;
  std::vector<Entry> entries_;
  std::map<std::string, std::string, std::less<>> predicates_;
};

// Throws SchemaError (geometry, indices, duplicate ids) or UnknownCategory.
void validate(const SceneGraph& scene, const Vocabulary& vocabulary);

// Objects and init atoms compiled from a scene. Parallel vectors index the
// objects in emission order.
struct ProblemFragment {
  std::vector<pddl::TypedName> objects;
  std::vector<pddl::Atom> init;
  std::vector<std::string> categories;
  std::vector<std::size_t> box_index;
  std::vector<std::string> source_ids;

  // Constant names of a category ordered by ordinal.
  std::vector<std::string> constants_of(std::string_view category) const;
  std::optional<std::size_t> index_of(std::string_view constant) const;
};

// One constant per box, named category-ordinal with ordinals assigned left to
// right by box center; one atom per knowledge-base label the box carries;
// one atom per relation. Objects are emitted left to right.
ProblemFragment build_initial_state(const SceneGraph& scene, const KnowledgeBase& kb, const pddl::Domain& domain);

pddl::Problem make_problem(const ProblemFragment& fragment, std::vector<pddl::Literal> goal, std::string name,
                           const pddl::Domain& domain);

// Scene JSON (schema "symgoal.scene"):
//   {"width":300,"height":300,
//    "objects":[{"id","category","affordances":[],"attributes":[],
//                "bbox":[x1,y1,x2,y2],"mask":{"counts":[...]}?}],
//    "relations":[{"subj":id,"rel":label,"obj":id}]}
SceneGraph scene_from_json(std::string_view text, const Vocabulary& vocabulary);
std::string scene_to_json(const SceneGraph& scene, int indent = 2);
SceneGraph load_scene(const std::filesystem::path& path, const Vocabulary& vocabulary);

// Lays out categories left to right in non-overlapping columns with jittered
// vertical placement. Ids are assigned category-ordinal in layout order.
SceneGraph layout_scene(const std::vector<std::string>& categories, const KnowledgeBase& kb, Rng& rng,
                        int width = kDefaultImageSize, int height = kDefaultImageSize);

}  // namespace symgoal::scene
