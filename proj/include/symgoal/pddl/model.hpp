#pragma once

// Data model for the STRIPS + typing + negative-preconditions subset of PDDL.
// Identifiers are stored lowercased. Values are immutable once built by the
// parser; equality is structural and order-sensitive (declaration order).

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symgoal::pddl {

inline constexpr std::string_view kRootType = "object";

struct TypedName {
  std::string name;
  std::string type{kRootType};

  friend bool operator==(const TypedName&, const TypedName&) = default;
};

struct TypeDecl {
  std::string name;
  std::string parent{kRootType};

  friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

// Arguments are either variables ("?x") inside schemas or constants in
// ground atoms.
struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Literal {
  Atom atom;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct PredicateSchema {
  std::string name;
  std::vector<TypedName> params;

  friend bool operator==(const PredicateSchema&, const PredicateSchema&) = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<Literal> precondition;
  // Positive literals are add effects, negated literals delete effects.
  std::vector<Literal> effect;

  friend bool operator==(const ActionSchema&, const ActionSchema&) = default;
};

struct Domain {
  std::string name;
  std::vector<std::string> requirements;
  std::vector<TypeDecl> types;
  std::vector<PredicateSchema> predicates;
  std::vector<ActionSchema> actions;

  const PredicateSchema* find_predicate(std::string_view name) const;
  const ActionSchema* find_action(std::string_view name) const;
  bool has_type(std::string_view type) const;
  // Reflexive; every declared type is a subtype of "object".
  bool is_subtype(std::string_view type, std::string_view ancestor) const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

struct Problem {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;
  std::vector<Atom> init;
  std::vector<Literal> goal;

  const TypedName* find_object(std::string_view name) const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

struct GroundAction {
  std::string name;
  std::vector<std::string> args;
  std::vector<Literal> pre;
  std::vector<Atom> add;
  std::vector<Atom> del;

  // "(cut tomato-1 knife-1)"
  std::string canonical_name() const;

  friend bool operator==(const GroundAction&, const GroundAction&) = default;
};

struct Plan {
  std::vector<GroundAction> steps;

  friend bool operator==(const Plan&, const Plan&) = default;
};

std::string to_string(const Atom& atom);
std::string to_string(const Literal& literal);

// Instantiates one schema with the given constants. Throws InvalidModel on
// arity mismatch; the caller is responsible for type checking (see
// check_binding).
GroundAction instantiate(const ActionSchema& schema, const std::vector<std::string>& args);

// Empty when the binding is type-correct against the problem objects;
// otherwise a message naming the offending argument.
std::optional<std::string> check_binding(const Domain& domain, const Problem& problem, const ActionSchema& schema,
                                         const std::vector<std::string>& args);

// Ground action by name and argument constants, e.g. ("cut", {"tomato-1","knife-1"}).
GroundAction make_ground_action(const Domain& domain, const Problem& problem, std::string_view name,
                                const std::vector<std::string>& args);

bool is_variable(std::string_view token);

}  // namespace symgoal::pddl
