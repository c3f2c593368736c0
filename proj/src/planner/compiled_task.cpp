#include <map>
#include <set>

#include "symgoal/pddl/pddl.hpp"
#include "symgoal/planner/planner.hpp"
#include "symgoal/simd/kernels.hpp"

namespace symgoal::planner {
namespace {

void set_bit(CompiledTask::State& bits, std::size_t index) { bits[index / 64] |= std::uint64_t{1} << (index % 64); }

}  // namespace

CompiledTask::CompiledTask(const pddl::Domain& domain, const pddl::Problem& problem)
    : ground_(pddl::ground(domain, problem)) {
  // A predicate is static when no schema mentions it in an effect.
  std::set<std::string> fluent_predicates;
  for (const auto& schema : domain.actions) {
    for (const auto& lit : schema.effect) fluent_predicates.insert(lit.atom.predicate);
  }
  const std::set<pddl::Atom> init_set(problem.init.begin(), problem.init.end());

  std::map<pddl::Atom, std::size_t> index;
  auto id_of = [&](const pddl::Atom& atom) {
    auto [it, inserted] = index.emplace(atom, atoms_.size());
    if (inserted) atoms_.push_back(atom);
    return it->second;
  };

  for (const auto& atom : problem.init) id_of(atom);
  for (const auto& lit : problem.goal) {
    if (!fluent_predicates.count(lit.atom.predicate) && init_set.count(lit.atom) == (lit.negated ? 1u : 0u)) {
      goal_impossible_ = true;
    }
    id_of(lit.atom);
  }

  struct Pending {
    std::size_t ground_index;
    std::vector<std::size_t> pos, neg, add, del;
  };
  std::vector<Pending> pending;
  for (std::size_t g = 0; g < ground_.size(); ++g) {
    const auto& action = ground_[g];
    bool prunable = false;
    for (const auto& lit : action.pre) {
      if (fluent_predicates.count(lit.atom.predicate)) continue;
      if (init_set.count(lit.atom) == (lit.negated ? 1u : 0u)) {
        prunable = true;
        break;
      }
    }
    if (prunable) continue;
    Pending p{g, {}, {}, {}, {}};
    for (const auto& lit : action.pre) (lit.negated ? p.neg : p.pos).push_back(id_of(lit.atom));
    for (const auto& atom : action.add) p.add.push_back(id_of(atom));
    for (const auto& atom : action.del) p.del.push_back(id_of(atom));
    pending.push_back(std::move(p));
  }

  words_ = (atoms_.size() + 63) / 64;
  if (words_ == 0) words_ = 1;
  auto bits = [&](const std::vector<std::size_t>& ids) {
    State out(words_, 0);
    for (std::size_t id : ids) set_bit(out, id);
    return out;
  };
  for (const auto& p : pending) {
    actions_.push_back({p.ground_index, bits(p.pos), bits(p.neg), bits(p.add), bits(p.del)});
  }
  init_ = encode(problem.init);
  goal_pos_.assign(words_, 0);
  goal_neg_.assign(words_, 0);
  for (const auto& lit : problem.goal) set_bit(lit.negated ? goal_neg_ : goal_pos_, index.at(lit.atom));
}

std::size_t CompiledTask::intern(const pddl::Atom& atom) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == atom) return i;
  }
  atoms_.push_back(atom);
  return atoms_.size() - 1;
}

CompiledTask::State CompiledTask::encode(const std::vector<pddl::Atom>& atoms) {
  State out(words_, 0);
  for (const auto& atom : atoms) set_bit(out, intern(atom));
  return out;
}

bool CompiledTask::applicable(const State& state, const Action& action) const {
  return simd::active_kernels().satisfies(state.data(), action.pre_pos.data(), action.pre_neg.data(), words_);
}

CompiledTask::State CompiledTask::successor(const State& state, const Action& action) const {
  State out(words_);
  simd::active_kernels().apply(state.data(), action.add.data(), action.del.data(), out.data(), words_);
  return out;
}

bool CompiledTask::is_goal(const State& state) const {
  return simd::active_kernels().satisfies(state.data(), goal_pos_.data(), goal_neg_.data(), words_);
}

std::size_t CompiledTask::heuristic(const State& state) const {
  return static_cast<std::size_t>(
      simd::active_kernels().count_unmet(state.data(), goal_pos_.data(), goal_neg_.data(), words_));
}

std::vector<pddl::Atom> CompiledTask::decode(const State& state) const {
  std::vector<pddl::Atom> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if ((state[i / 64] >> (i % 64)) & 1u) out.push_back(atoms_[i]);
  }
  return out;
}

}  // namespace symgoal::planner
