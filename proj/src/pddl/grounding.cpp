#include <algorithm>

#include "symgoal/pddl/pddl.hpp"

namespace symgoal::pddl {

std::vector<GroundAction> ground(const Domain& domain, const Problem& problem) {
  std::vector<const ActionSchema*> schemas;
  for (const auto& a : domain.actions) schemas.push_back(&a);
  std::sort(schemas.begin(), schemas.end(), [](const auto* l, const auto* r) { return l->name < r->name; });

  std::vector<GroundAction> out;
  for (const ActionSchema* schema : schemas) {
    std::vector<std::vector<std::string>> candidates;
    bool empty_slot = false;
    for (const auto& param : schema->params) {
      std::vector<std::string> names;
      for (const auto& object : problem.objects) {
        if (domain.is_subtype(object.type, param.type)) names.push_back(object.name);
      }
      std::sort(names.begin(), names.end());
      empty_slot = empty_slot || names.empty();
      candidates.push_back(std::move(names));
    }
    if (empty_slot) continue;

    // Odometer over the sorted candidate lists yields lexicographic tuples.
    std::vector<std::size_t> index(candidates.size(), 0);
    std::vector<std::string> args(candidates.size());
    for (;;) {
      for (std::size_t i = 0; i < index.size(); ++i) args[i] = candidates[i][index[i]];
      out.push_back(instantiate(*schema, args));
      bool exhausted = true;
      for (std::size_t pos = index.size(); pos-- > 0;) {
        if (++index[pos] < candidates[pos].size()) {
          exhausted = false;
          break;
        }
        index[pos] = 0;
      }
      if (exhausted) break;
    }
  }
  return out;
}

}  // namespace symgoal::pddl
