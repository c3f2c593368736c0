#include "symgoal/pddl/model.hpp"

#include <algorithm>
#include <unordered_map>

#include "symgoal/errors.hpp"

namespace symgoal::pddl {

const PredicateSchema* Domain::find_predicate(std::string_view name) const {
  auto it = std::find_if(predicates.begin(), predicates.end(), [&](const auto& p) { return p.name == name; });
  return it == predicates.end() ? nullptr : &*it;
}

const ActionSchema* Domain::find_action(std::string_view name) const {
  auto it = std::find_if(actions.begin(), actions.end(), [&](const auto& a) { return a.name == name; });
  return it == actions.end() ? nullptr : &*it;
}

bool Domain::has_type(std::string_view type) const {
  if (type == kRootType) return true;
  return std::any_of(types.begin(), types.end(), [&](const auto& t) { return t.name == type; });
}

bool Domain::is_subtype(std::string_view type, std::string_view ancestor) const {
  if (ancestor == kRootType) return has_type(type);
  std::string_view current = type;
  // Hierarchy depth is bounded by the number of declarations; the bound also
  // stops on accidental cycles.
  for (std::size_t hops = 0; hops <= types.size(); ++hops) {
    if (current == ancestor) return true;
    if (current == kRootType) return false;
    auto it = std::find_if(types.begin(), types.end(), [&](const auto& t) { return t.name == current; });
    if (it == types.end()) return false;
    current = it->parent;
  }
  return false;
}

const TypedName* Problem::find_object(std::string_view name) const {
  auto it = std::find_if(objects.begin(), objects.end(), [&](const auto& o) { return o.name == name; });
  return it == objects.end() ? nullptr : &*it;
}

std::string GroundAction::canonical_name() const {
  std::string out = "(" + name;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

std::string to_string(const Atom& atom) {
  std::string out = "(" + atom.predicate;
  for (const auto& a : atom.args) out += " " + a;
  return out + ")";
}

std::string to_string(const Literal& literal) {
  return literal.negated ? "(not " + to_string(literal.atom) + ")" : to_string(literal.atom);
}

bool is_variable(std::string_view token) { return !token.empty() && token.front() == '?'; }

GroundAction instantiate(const ActionSchema& schema, const std::vector<std::string>& args) {
  if (args.size() != schema.params.size()) {
    throw InvalidModel("action " + schema.name + " expects " + std::to_string(schema.params.size()) +
                       " arguments, got " + std::to_string(args.size()));
  }
  std::unordered_map<std::string, std::string> binding;
  for (std::size_t i = 0; i < args.size(); ++i) binding.emplace(schema.params[i].name, args[i]);

  auto bind = [&](const Atom& atom) {
    Atom ground{atom.predicate, {}};
    ground.args.reserve(atom.args.size());
    for (const auto& arg : atom.args) {
      auto it = binding.find(arg);
      ground.args.push_back(it == binding.end() ? arg : it->second);
    }
    return ground;
  };

  GroundAction action;
  action.name = schema.name;
  action.args = args;
  for (const auto& lit : schema.precondition) action.pre.push_back({bind(lit.atom), lit.negated});
  for (const auto& lit : schema.effect) {
    (lit.negated ? action.del : action.add).push_back(bind(lit.atom));
  }
  return action;
}

std::optional<std::string> check_binding(const Domain& domain, const Problem& problem, const ActionSchema& schema,
                                         const std::vector<std::string>& args) {
  if (args.size() != schema.params.size()) return "arity mismatch for " + schema.name;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const TypedName* object = problem.find_object(args[i]);
    if (!object) return "undeclared object " + args[i];
    if (!domain.is_subtype(object->type, schema.params[i].type)) {
      return args[i] + " is not of type " + schema.params[i].type;
    }
  }
  return std::nullopt;
}

GroundAction make_ground_action(const Domain& domain, const Problem& problem, std::string_view name,
                                const std::vector<std::string>& args) {
  const ActionSchema* schema = domain.find_action(name);
  if (!schema) throw UndeclaredSymbol(std::string(name));
  for (const auto& a : args) {
    if (!problem.find_object(a)) throw UndeclaredSymbol(a);
  }
  if (auto problem_msg = check_binding(domain, problem, *schema, args)) throw InvalidModel(*problem_msg);
  return instantiate(*schema, args);
}

}  // namespace symgoal::pddl
