#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symgoal/pddl/model.hpp"

namespace symgoal::planner {

enum class Strategy { Bfs, GreedyGoalCount };

std::string to_string(Strategy strategy);
Strategy parse_strategy(const std::string& text);

// Ties between equally ranked nodes are broken by generation order, and
// successors are generated in canonical ground-action order, so search is
// deterministic.
struct SearchConfig {
  Strategy strategy = Strategy::GreedyGoalCount;
  std::size_t max_expansions = 200000;
};

enum class Outcome { Plan, NoSolution, ResourceExceeded };

std::string to_string(Outcome outcome);

struct SearchStats {
  std::size_t expansions = 0;
  std::size_t generated = 0;
  double wall_seconds = 0.0;
};

struct PlanResult {
  Outcome outcome = Outcome::NoSolution;
  pddl::Plan plan;
  SearchStats stats;

  bool solved() const { return outcome == Outcome::Plan; }

  // Wall time is excluded: two runs over the same inputs compare equal.
  friend bool operator==(const PlanResult& l, const PlanResult& r) {
    return l.outcome == r.outcome && l.plan == r.plan && l.stats.expansions == r.stats.expansions &&
           l.stats.generated == r.stats.generated;
  }
};

// Throws std::invalid_argument when cfg.max_expansions == 0.
PlanResult plan(const pddl::Domain& domain, const pddl::Problem& problem, const SearchConfig& cfg = {});

// Number of goal literals not satisfied by the state.
std::size_t goal_count_heuristic(const std::vector<pddl::Atom>& state, const std::vector<pddl::Literal>& goal);

// Bitset form of a grounded task. Atoms are interned in first-seen order;
// states are packed 64-bit words.
class CompiledTask {
 public:
  using State = std::vector<std::uint64_t>;

  struct Action {
    std::size_t ground_index;  // index into ground_actions()
    State pre_pos, pre_neg, add, del;
  };

  CompiledTask(const pddl::Domain& domain, const pddl::Problem& problem);

  std::size_t words() const { return words_; }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<pddl::Atom>& atoms() const { return atoms_; }
  const std::vector<pddl::GroundAction>& ground_actions() const { return ground_; }
  // Ground actions surviving static pruning, in canonical order.
  const std::vector<Action>& actions() const { return actions_; }
  const State& initial_state() const { return init_; }

  bool applicable(const State& state, const Action& action) const;
  State successor(const State& state, const Action& action) const;
  bool is_goal(const State& state) const;
  std::size_t heuristic(const State& state) const;
  // False when a goal atom is unknown to the task and can never become true.
  bool goal_reachable_in_principle() const { return !goal_impossible_; }

  std::vector<pddl::Atom> decode(const State& state) const;

 private:
  std::size_t intern(const pddl::Atom& atom);
  State encode(const std::vector<pddl::Atom>& atoms);

  std::vector<pddl::Atom> atoms_;
  std::vector<pddl::GroundAction> ground_;
  std::vector<Action> actions_;
  std::size_t words_ = 0;
  State init_;
  State goal_pos_, goal_neg_;
  bool goal_impossible_ = false;
};

}  // namespace symgoal::planner
