#include <set>

#include "sexpr.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/pddl/pddl.hpp"

namespace symgoal::pddl {
namespace {

bool holds(const std::set<Atom>& state, const Literal& lit) { return state.count(lit.atom) != (lit.negated ? 1u : 0u); }

}  // namespace

ValidationResult validate_plan(const Domain& domain, const Problem& problem, const Plan& plan) {
  std::set<Atom> state(problem.init.begin(), problem.init.end());
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const GroundAction& step = plan.steps[i];
    // Re-instantiate from the schema so a step carrying stale literal lists
    // cannot pass.
    const ActionSchema* schema = domain.find_action(step.name);
    if (!schema) return {false, i, "", "unknown action " + step.name};
    if (auto problem_msg = check_binding(domain, problem, *schema, step.args)) {
      return {false, i, "", *problem_msg};
    }
    const GroundAction action = instantiate(*schema, step.args);
    for (const auto& lit : action.pre) {
      if (!holds(state, lit)) {
        return {false, i, to_string(lit), "precondition of " + action.canonical_name() + " unmet"};
      }
    }
    for (const auto& atom : action.del) state.erase(atom);
    for (const auto& atom : action.add) state.insert(atom);
  }
  for (const auto& lit : problem.goal) {
    if (!holds(state, lit)) return {false, plan.steps.size(), to_string(lit), "goal literal unmet"};
  }
  return {};
}

Plan parse_plan(std::string_view text, const Domain& domain, const Problem& problem) {
  // Wrap the step list so the reader sees a single expression.
  const detail::SExpr root = detail::read_sexpr("(\n" + std::string(text) + "\n)");
  Plan plan;
  for (const auto& node : root.items) {
    if (!node.is_list || node.items.empty()) throw SyntaxError(node.pos.line - 1, node.pos.col, "(action arg...)");
    std::vector<std::string> args;
    for (std::size_t i = 1; i < node.items.size(); ++i) {
      if (!node.items[i].is_atom()) throw SyntaxError(node.items[i].pos.line - 1, node.items[i].pos.col, "constant");
      args.push_back(node.items[i].atom);
    }
    if (!node.items.front().is_atom()) throw SyntaxError(node.pos.line - 1, node.pos.col, "action name");
    plan.steps.push_back(make_ground_action(domain, problem, node.items.front().atom, args));
  }
  return plan;
}

}  // namespace symgoal::pddl
