#include "symgoal/goal/goal_triple.hpp"

#include <algorithm>

#include "../pddl/sexpr.hpp"
#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/util/io.hpp"

namespace symgoal::goal {
namespace {

pddl::Literal parse_goal_literal(const std::string& text) {
  const pddl::detail::SExpr node = pddl::detail::read_sexpr(text);
  auto atom_of = [&](const pddl::detail::SExpr& n) {
    if (!n.is_list || n.items.empty()) throw SchemaError("goal template is not an atom: " + text);
    pddl::Atom atom{n.items[0].atom, {}};
    for (std::size_t i = 1; i < n.items.size(); ++i) {
      const std::string& arg = n.items[i].atom;
      if (arg != "?s" && arg != "?o") throw SchemaError("goal template may only use ?s and ?o: " + text);
      atom.args.push_back(arg);
    }
    return atom;
  };
  if (node.is_form("not")) {
    if (node.items.size() != 2) throw SchemaError("malformed negated goal template: " + text);
    return {atom_of(node.items[1]), true};
  }
  return {atom_of(node), false};
}

}  // namespace

std::string_view to_string(Action action) {
  switch (action) {
    case Action::PickPlace: return "PickPlace";
    case Action::Deliver: return "Deliver";
    case Action::Cut: return "Cut";
    case Action::Cook: return "Cook";
    case Action::Clean: return "Clean";
  }
  return "?";
}

Action parse_action(std::string_view name) {
  for (Action a : kAllActions) {
    if (to_string(a) == name) return a;
  }
  throw SchemaError("unknown task action " + std::string(name));
}

std::string to_string(const GoalTriple& goal) {
  return "(" + std::string(to_string(goal.action)) + ", " + goal.subject + ", " + goal.object + ")";
}

bool GoalRule::uses_object() const {
  return std::any_of(goal.begin(), goal.end(), [](const pddl::Literal& l) {
    return std::find(l.atom.args.begin(), l.atom.args.end(), "?o") != l.atom.args.end();
  });
}

GoalTable GoalTable::from_json(std::string_view text) {
  GoalTable table;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& node : doc.at("actions")) {
      GoalRule rule{parse_action(node.at("action").get<std::string>()), {},
                    node.at("subject_requires").get<std::string>(), node.at("object_requires").get<std::string>()};
      for (const auto& lit : node.at("goal")) rule.goal.push_back(parse_goal_literal(lit.get<std::string>()));
      if (rule.goal.empty()) throw SchemaError("empty goal for " + std::string(to_string(rule.action)));
      table.rules_.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("goal table: ") + e.what());
  }
  for (Action a : kAllActions) table.rule(a);
  return table;
}

GoalTable GoalTable::load(const std::filesystem::path& path) { return from_json(read_file(path)); }

const GoalRule& GoalTable::rule(Action action) const {
  auto it = std::find_if(rules_.begin(), rules_.end(), [&](const GoalRule& r) { return r.action == action; });
  if (it == rules_.end()) throw SchemaError("goal table has no entry for " + std::string(to_string(action)));
  return *it;
}

bool GoalTable::fits_subject(const scene::KnowledgeBase& kb, Action action, std::string_view category) const {
  return kb.supports(category, rule(action).subject_requires);
}

bool GoalTable::fits_object(const scene::KnowledgeBase& kb, Action action, std::string_view category) const {
  return kb.supports(category, rule(action).object_requires);
}

std::vector<std::string> GoalTable::subject_categories(const scene::KnowledgeBase& kb, Action action) const {
  return kb.categories_supporting(rule(action).subject_requires);
}

std::vector<std::string> GoalTable::object_categories(const scene::KnowledgeBase& kb, Action action,
                                                      std::string_view subject) const {
  std::vector<std::string> out = kb.categories_supporting(rule(action).object_requires);
  std::erase(out, std::string(subject));
  return out;
}

void GoalTable::check_against(const pddl::Domain& domain) const {
  for (const auto& rule : rules_) {
    for (const auto& lit : rule.goal) {
      const pddl::PredicateSchema* schema = domain.find_predicate(lit.atom.predicate);
      if (!schema) throw pddl::InvalidModel("goal predicate " + lit.atom.predicate + " missing from domain");
      if (schema->params.size() != lit.atom.args.size()) {
        throw pddl::InvalidModel("goal predicate " + lit.atom.predicate + " has the wrong arity");
      }
    }
    for (const auto* p : {&rule.subject_requires, &rule.object_requires}) {
      if (!domain.find_predicate(*p)) throw pddl::InvalidModel("role predicate " + *p + " missing from domain");
    }
  }
}

std::vector<pddl::Literal> compile_goal(const GoalTriple& goal, const scene::ProblemFragment& fragment,
                                        const GoalTable& table) {
  const GoalRule& rule = table.rule(goal.action);
  if (goal.subject == kUnknown) throw MissingObject("subject");
  if (goal.object == kUnknown && rule.uses_object()) throw MissingObject("object");

  auto resolve = [&](const std::string& category, const char* role) {
    const auto constants = fragment.constants_of(category);
    if (constants.empty()) throw MissingObject(std::string(role) + " " + category);
    return constants.front();
  };
  const std::string s = resolve(goal.subject, "subject");
  const std::string o = goal.object == kUnknown ? std::string() : resolve(goal.object, "object");

  std::vector<pddl::Literal> out;
  for (pddl::Literal lit : rule.goal) {
    for (auto& arg : lit.atom.args) arg = arg == "?s" ? s : o;
    out.push_back(std::move(lit));
  }
  return out;
}

}  // namespace symgoal::goal
