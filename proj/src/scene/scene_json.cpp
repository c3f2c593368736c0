#include <map>

#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/scene/scene.hpp"
#include "symgoal/util/io.hpp"

namespace symgoal::scene {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> labels(const Json& node, const char* key) {
  std::vector<std::string> out;
  if (!node.contains(key)) return out;
  for (const auto& item : node.at(key)) out.push_back(item.get<std::string>());
  return out;
}

}  // namespace

SceneGraph scene_from_json(std::string_view text, const Vocabulary& vocabulary) {
  SceneGraph scene;
  try {
    const Json doc = Json::parse(text);
    if (!doc.is_object()) throw SchemaError("scene document must be an object");
    scene.width = doc.value("width", kDefaultImageSize);
    scene.height = doc.value("height", kDefaultImageSize);
    std::map<std::string, std::size_t> index;
    for (const auto& node : doc.at("objects")) {
      SceneObject object;
      object.id = node.at("id").get<std::string>();
      object.category = node.at("category").get<std::string>();
      object.affordances = labels(node, "affordances");
      object.attributes = labels(node, "attributes");
      const auto& box = node.at("bbox");
      if (!box.is_array() || box.size() != 4) throw SchemaError("bbox of " + object.id + " must have 4 numbers");
      object.bbox = {box[0].get<int>(), box[1].get<int>(), box[2].get<int>(), box[3].get<int>()};
      if (node.contains("mask")) {
        object.mask = SegmentMask::from_rle(scene.width, scene.height,
                                            node.at("mask").at("counts").get<std::vector<std::uint32_t>>());
      }
      index[object.id] = scene.objects.size();
      scene.objects.push_back(std::move(object));
    }
    if (doc.contains("relations")) {
      for (const auto& node : doc.at("relations")) {
        auto lookup = [&](const char* key) {
          const std::string id = node.at(key).get<std::string>();
          auto it = index.find(id);
          if (it == index.end()) throw SchemaError("relation references unknown object " + id);
          return it->second;
        };
        scene.relations.push_back({lookup("subj"), node.at("rel").get<std::string>(), lookup("obj")});
      }
    }
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("scene: ") + e.what());
  }
  validate(scene, vocabulary);
  return scene;
}

std::string scene_to_json(const SceneGraph& scene, int indent) {
  Json doc;
  doc["schema"] = "symgoal.scene";
  doc["version"] = 1;
  doc["width"] = scene.width;
  doc["height"] = scene.height;
  doc["objects"] = Json::array();
  for (const auto& object : scene.objects) {
    Json node;
    node["id"] = object.id;
    node["category"] = object.category;
    node["affordances"] = object.affordances;
    node["attributes"] = object.attributes;
    node["bbox"] = {object.bbox.x1, object.bbox.y1, object.bbox.x2, object.bbox.y2};
    if (object.mask) node["mask"] = {{"counts", object.mask->to_rle()}};
    doc["objects"].push_back(std::move(node));
  }
  doc["relations"] = Json::array();
  for (const auto& rel : scene.relations) {
    doc["relations"].push_back(
        {{"subj", scene.objects.at(rel.subject).id}, {"rel", rel.label}, {"obj", scene.objects.at(rel.object).id}});
  }
  return doc.dump(indent) + "\n";
}

SceneGraph load_scene(const std::filesystem::path& path, const Vocabulary& vocabulary) {
  return scene_from_json(read_file(path), vocabulary);
}

}  // namespace symgoal::scene
