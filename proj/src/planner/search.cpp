#include <chrono>
#include <deque>
#include <queue>
#include <set>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "symgoal/planner/planner.hpp"

namespace symgoal::planner {
namespace {

using State = CompiledTask::State;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(std::uint64_t)));
  }
};

struct Node {
  State state;
  std::size_t parent;
  std::size_t action;  // index into CompiledTask::actions()
  std::size_t depth;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

pddl::Plan extract_plan(const CompiledTask& task, const std::vector<Node>& nodes, std::size_t goal_node) {
  std::vector<std::size_t> chain;
  for (std::size_t n = goal_node; nodes[n].parent != kNoParent; n = nodes[n].parent) chain.push_back(n);
  pddl::Plan plan;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto& action = task.actions()[nodes[*it].action];
    plan.steps.push_back(task.ground_actions()[action.ground_index]);
  }
  return plan;
}

// Open list keyed by (h, depth, generation id) for greedy search, or by
// generation id alone for breadth-first search.
class OpenList {
 public:
  explicit OpenList(Strategy strategy) : strategy_(strategy) {}

  void push(std::size_t node, std::size_t h, std::size_t depth) {
    if (strategy_ == Strategy::Bfs) {
      fifo_.push_back(node);
    } else {
      heap_.push({h, depth, node});
    }
  }

  bool empty() const { return strategy_ == Strategy::Bfs ? fifo_.empty() : heap_.empty(); }

  std::size_t pop() {
    if (strategy_ == Strategy::Bfs) {
      std::size_t n = fifo_.front();
      fifo_.pop_front();
      return n;
    }
    std::size_t n = heap_.top().node;
    heap_.pop();
    return n;
  }

 private:
  struct Entry {
    std::size_t h, depth, node;
    bool operator>(const Entry& o) const {
      if (h != o.h) return h > o.h;
      if (depth != o.depth) return depth > o.depth;
      return node > o.node;
    }
  };
  Strategy strategy_;
  std::deque<std::size_t> fifo_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

}  // namespace

std::string to_string(Strategy strategy) { return strategy == Strategy::Bfs ? "bfs" : "greedy"; }

Strategy parse_strategy(const std::string& text) {
  if (text == "bfs") return Strategy::Bfs;
  if (text == "greedy" || text == "goal-count" || text == "greedy-goal-count") return Strategy::GreedyGoalCount;
  throw std::invalid_argument("unknown planner strategy: " + text);
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Plan:
      return "plan";
    case Outcome::NoSolution:
      return "no-solution";
    case Outcome::ResourceExceeded:
      return "resource-exceeded";
  }
  return "unknown";
}

std::size_t goal_count_heuristic(const std::vector<pddl::Atom>& state, const std::vector<pddl::Literal>& goal) {
  const std::set<pddl::Atom> facts(state.begin(), state.end());
  std::size_t unmet = 0;
  for (const auto& lit : goal) {
    if (facts.count(lit.atom) == (lit.negated ? 1u : 0u)) ++unmet;
  }
  return unmet;
}

PlanResult plan(const pddl::Domain& domain, const pddl::Problem& problem, const SearchConfig& cfg) {
  if (cfg.max_expansions == 0) throw std::invalid_argument("max_expansions must be positive");
  const auto started = std::chrono::steady_clock::now();
  PlanResult result;
  auto finish = [&](Outcome outcome) {
    result.outcome = outcome;
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
  };

  const CompiledTask task(domain, problem);
  std::vector<Node> nodes;
  std::unordered_map<State, std::size_t, StateHash> seen;
  OpenList open(cfg.strategy);

  nodes.push_back({task.initial_state(), kNoParent, 0, 0});
  seen.emplace(task.initial_state(), 0);
  result.stats.generated = 1;
  if (task.is_goal(task.initial_state())) return finish(Outcome::Plan);
  if (!task.goal_reachable_in_principle()) return finish(Outcome::NoSolution);
  open.push(0, task.heuristic(task.initial_state()), 0);

  while (!open.empty()) {
    if (result.stats.expansions >= cfg.max_expansions) return finish(Outcome::ResourceExceeded);
    const std::size_t current = open.pop();
    ++result.stats.expansions;
    const auto& actions = task.actions();
    for (std::size_t a = 0; a < actions.size(); ++a) {
      if (!task.applicable(nodes[current].state, actions[a])) continue;
      State next = task.successor(nodes[current].state, actions[a]);
      if (seen.count(next)) continue;
      ++result.stats.generated;
      const std::size_t depth = nodes[current].depth + 1;
      nodes.push_back({next, current, a, depth});
      const std::size_t id = nodes.size() - 1;
      seen.emplace(std::move(next), id);
      if (task.is_goal(nodes[id].state)) {
        result.plan = extract_plan(task, nodes, id);
        return finish(Outcome::Plan);
      }
      open.push(id, task.heuristic(nodes[id].state), depth);
    }
  }
  return finish(Outcome::NoSolution);
}

}  // namespace symgoal::planner
