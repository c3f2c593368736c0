#pragma once

// Parser, printer, grounder and plan validator for the STRIPS subset.
//
// Accepted grammar (case-insensitive, ';' comments):
//
//   domain  := (define (domain NAME) [requirements] [types] [predicates] action*)
//   requirements := (:requirements :strips | :typing | :negative-preconditions ...)
//   types   := (:types typed-list)            single parent per type
//   predicates := (:predicates (NAME typed-var-list)*)
//   action  := (:action NAME [:parameters (typed-var-list)]
//                            [:precondition GD] [:effect EFF])
//   GD      := (and GD*) | ATOM | (not ATOM)
//   EFF     := (and EFF*) | ATOM | (not ATOM)
//   problem := (define (problem NAME) (:domain NAME) [requirements]
//               [(:objects typed-list)] [(:init ATOM*)] [(:goal GD)])
//
// Anything else that is valid PDDL (forall, when, either, constants, numeric
// fluents, durative actions, ...) raises UnsupportedFeature.

#include <string>
#include <string_view>
#include <vector>

#include "symgoal/pddl/model.hpp"

namespace symgoal::pddl {

Domain parse_domain(std::string_view text);
Problem parse_problem(std::string_view text, const Domain& domain);

// Canonical form: lowercase, declaration order, one clause per line.
std::string print_domain(const Domain& domain);
std::string print_problem(const Problem& problem);

// Every type-correct instantiation of every schema, ordered by action name
// then argument names.
std::vector<GroundAction> ground(const Domain& domain, const Problem& problem);

struct ValidationResult {
  bool ok = true;
  // Index of the first failing step; equals the plan length when every step
  // applied but the final state misses the goal.
  std::size_t failed_step = 0;
  std::string unmet_literal;
  std::string message;

  explicit operator bool() const { return ok; }
};

ValidationResult validate_plan(const Domain& domain, const Problem& problem, const Plan& plan);

// Plan text: one "(action arg...)" per line; ';' comments allowed. Steps are
// resolved and type-checked against the domain/problem.
Plan parse_plan(std::string_view text, const Domain& domain, const Problem& problem);
std::string print_plan(const Plan& plan);

}  // namespace symgoal::pddl
