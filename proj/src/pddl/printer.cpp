#include <sstream>

#include "symgoal/pddl/pddl.hpp"

namespace symgoal::pddl {
namespace {

// Consecutive names sharing a type are grouped: "a b - t c - u".
template <typename Item, typename NameOf, typename TypeOf>
std::string typed_list(const std::vector<Item>& items, NameOf name_of, TypeOf type_of) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += name_of(items[i]);
    if (i + 1 == items.size() || type_of(items[i + 1]) != type_of(items[i])) out += " - " + type_of(items[i]);
  }
  return out;
}

std::string typed_names(const std::vector<TypedName>& items) {
  return typed_list(
      items, [](const TypedName& t) { return t.name; }, [](const TypedName& t) { return t.type; });
}

std::string conjunction(const std::vector<Literal>& literals) {
  std::string out = "(and";
  for (const auto& lit : literals) out += " " + to_string(lit);
  return out + ")";
}

}  // namespace

std::string print_domain(const Domain& domain) {
  std::ostringstream out;
  out << "(define (domain " << domain.name << ")";
  if (!domain.requirements.empty()) {
    out << "\n  (:requirements";
    for (const auto& r : domain.requirements) out << ' ' << r;
    out << ")";
  }
  if (!domain.types.empty()) {
    out << "\n  (:types "
        << typed_list(
               domain.types, [](const TypeDecl& t) { return t.name; }, [](const TypeDecl& t) { return t.parent; })
        << ")";
  }
  if (!domain.predicates.empty()) {
    out << "\n  (:predicates";
    for (const auto& p : domain.predicates) {
      out << "\n    (" << p.name;
      if (!p.params.empty()) out << ' ' << typed_names(p.params);
      out << ")";
    }
    out << ")";
  }
  for (const auto& a : domain.actions) {
    out << "\n  (:action " << a.name;
    out << "\n    :parameters (" << typed_names(a.params) << ")";
    if (!a.precondition.empty()) out << "\n    :precondition " << conjunction(a.precondition);
    if (!a.effect.empty()) out << "\n    :effect " << conjunction(a.effect);
    out << ")";
  }
  out << ")\n";
  return out.str();
}

std::string print_problem(const Problem& problem) {
  std::ostringstream out;
  out << "(define (problem " << problem.name << ")";
  out << "\n  (:domain " << problem.domain_name << ")";
  if (!problem.objects.empty()) out << "\n  (:objects " << typed_names(problem.objects) << ")";
  out << "\n  (:init";
  for (const auto& atom : problem.init) out << "\n    " << to_string(atom);
  out << ")";
  out << "\n  (:goal " << conjunction(problem.goal) << "))\n";
  return out.str();
}

std::string print_plan(const Plan& plan) {
  std::string out;
  for (const auto& step : plan.steps) out += step.canonical_name() + "\n";
  return out;
}

}  // namespace symgoal::pddl
