#pragma once

// Shared fixtures and independent oracles for the test and acceptance
// binaries. Nothing here calls into the grounder or the planner it checks.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symgoal/eval/eval.hpp"
#include "symgoal/pddl/pddl.hpp"
#include "symgoal/util/io.hpp"
#include "symgoal/util/rng.hpp"

namespace symgoal::testing {

inline std::filesystem::path fixture(const std::string& name) { return data_dir() / "fixtures" / name; }

// (domain, problem text) pairs; empty problem text marks a domain-only entry.
inline std::vector<std::pair<std::filesystem::path, std::string>> pddl_corpus() {
  const auto dir = fixture("pddl");
  return {
      {data_dir() / "kitchen" / "domain.pddl", read_file(fixture("tomato_problem.pddl"))},
      {data_dir() / "kitchen" / "domain.pddl", read_file(fixture("no_knife_problem.pddl"))},
      {dir / "minimal_domain.pddl", ""},
      {dir / "blocks_domain.pddl", read_file(dir / "blocks_problem.pddl")},
      {dir / "switch_domain.pddl", read_file(dir / "switch_problem.pddl")},
      {dir / "switch_domain.pddl", read_file(dir / "empty_problem.pddl")},
      {dir / "hierarchy_domain.pddl", read_file(dir / "hierarchy_problem.pddl")},
  };
}

inline const eval::Toolkit& kit() {
  static const eval::Toolkit k = eval::Toolkit::load(data_dir());
  return k;
}

inline const goal::CooccurrenceTable& baseline_table() {
  static const goal::CooccurrenceTable t = eval::default_baseline_table(kit());
  return t;
}

inline const goal::LexicalPredictor& baseline() {
  static const goal::LexicalPredictor p(kit().lexicon, baseline_table(), kit().res.kb, kit().res.table);
  return p;
}

// Brute-force typed tuple enumeration: every object for every parameter,
// filtered by type afterwards.
struct OracleAction {
  std::string name;
  std::vector<std::string> args;
  std::vector<pddl::Literal> pre;
  std::vector<pddl::Literal> effect;
};

inline std::vector<OracleAction> oracle_ground(const pddl::Domain& d, const pddl::Problem& p) {
  std::vector<OracleAction> out;
  for (const auto& schema : d.actions) {
    const std::size_t n = schema.params.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p.objects.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::string> args;
      std::size_t c = code;
      bool typed = true;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& obj = p.objects[c % p.objects.size()];
        c /= p.objects.size();
        typed = typed && d.is_subtype(obj.type, schema.params[i].type);
        args.push_back(obj.name);
      }
      if (!typed) continue;
      std::map<std::string, std::string> bind;
      for (std::size_t i = 0; i < n; ++i) bind[schema.params[i].name] = args[i];
      auto subst = [&](std::vector<pddl::Literal> lits) {
        for (auto& l : lits) {
          for (auto& a : l.atom.args) {
            if (auto it = bind.find(a); it != bind.end()) a = it->second;
          }
        }
        return lits;
      };
      out.push_back({schema.name, args, subst(schema.precondition), subst(schema.effect)});
    }
  }
  return out;
}

struct OracleResult {
  bool solvable = false;
  std::size_t length = 0;
};

// Exhaustive breadth-first search over explicit atom sets.
inline OracleResult oracle_bfs(const pddl::Domain& d, const pddl::Problem& p) {
  using State = std::set<pddl::Atom>;
  const auto actions = oracle_ground(d, p);
  auto holds = [](const State& s, const pddl::Literal& l) { return s.contains(l.atom) != l.negated; };
  auto goal = [&](const State& s) {
    return std::all_of(p.goal.begin(), p.goal.end(), [&](const auto& l) { return holds(s, l); });
  };
  const State init(p.init.begin(), p.init.end());
  std::map<State, std::size_t> depth{{init, 0}};
  std::deque<State> open{init};
  while (!open.empty()) {
    State s = std::move(open.front());
    open.pop_front();
    const std::size_t ds = depth[s];
    if (goal(s)) return {true, ds};
    for (const auto& a : actions) {
      if (!std::all_of(a.pre.begin(), a.pre.end(), [&](const auto& l) { return holds(s, l); })) continue;
      State next = s;
      for (const auto& e : a.effect) {
        if (e.negated) next.erase(e.atom);
      }
      for (const auto& e : a.effect) {
        if (!e.negated) next.insert(e.atom);
      }
      if (depth.emplace(next, ds + 1).second) open.push_back(std::move(next));
    }
  }
  return {false, 0};
}

// Random kitchen instance with at most six objects: a random task over a
// random scene, with a chance of losing the instrument or a static label so
// that some instances have no plan.
inline pddl::Problem random_kitchen_instance(std::uint64_t seed) {
  const auto& k = kit();
  Rng rng(seed);
  const auto& rules = k.res.table.rules();
  std::vector<std::string> categories;
  // Most instances seed the scene with a fitting pair so that both outcomes occur.
  if (rng.chance(0.6)) {
    const auto& rule = rng.pick(rules);
    const std::string s = rng.pick(k.res.table.subject_categories(k.res.kb, rule.action));
    categories = {s, rng.pick(k.res.table.object_categories(k.res.kb, rule.action, s))};
  }
  const std::size_t n = static_cast<std::size_t>(rng.between(1, 4));
  for (std::size_t i = 0; i < n; ++i) categories.push_back(rng.pick(k.res.kb.entries()).category);
  rng.shuffle(categories);
  scene::SceneGraph scene = scene::layout_scene(categories, k.res.kb, rng);
  for (auto& object : scene.objects) {
    const auto* entry = k.res.kb.find(object.category);
    if (!entry->optional.empty() && rng.chance(0.5)) object.attributes.push_back(entry->optional.front());
  }
  const auto fragment = scene::build_initial_state(scene, k.res.kb, k.domain);

  auto problem = scene::make_problem(fragment, {}, "random", k.domain);
  if (!problem.init.empty() && rng.chance(0.3)) {
    problem.init.erase(problem.init.begin() + static_cast<long>(rng.below(problem.init.size())));
  }
  // Goal: one to two literals of the task goal shapes, preferring constants
  // whose category fits the role.
  auto pick = [&](goal::Action action, bool subject_role) {
    std::vector<std::string> fitting;
    for (const auto& o : scene.objects) {
      const bool fits = subject_role ? k.res.table.fits_subject(k.res.kb, action, o.category)
                                     : k.res.table.fits_object(k.res.kb, action, o.category);
      if (fits) fitting.push_back(o.id);
    }
    if (!fitting.empty() && rng.chance(0.8)) return rng.pick(fitting);
    return rng.pick(fragment.objects).name;
  };
  const std::size_t goals = static_cast<std::size_t>(rng.between(1, 2));
  for (std::size_t g = 0; g < goals; ++g) {
    const auto& rule = rng.pick(rules);
    const std::string s = pick(rule.action, true);
    const std::string o = pick(rule.action, false);
    for (auto lit : rule.goal) {
      for (auto& a : lit.atom.args) a = a == "?s" ? s : o;
      if (std::find(problem.goal.begin(), problem.goal.end(), lit) == problem.goal.end()) problem.goal.push_back(lit);
    }
  }
  return problem;
}

// Participants of a rendered sentence, recovered by matching it against the
// task's templates. Surface words map back to their category.
struct Recovered {
  std::string subject, object;
};

inline std::optional<Recovered> recover_participants(const std::string& sentence,
                                                     const std::vector<std::string>& patterns) {
  const auto& kb = kit().res.kb;
  auto category_of = [&](const std::string& word) -> std::optional<std::string> {
    for (const auto& e : kb.entries()) {
      if (kit().res.templates.surface(e.category) == word) return e.category;
    }
    return std::nullopt;
  };
  for (const auto& pattern : patterns) {
    std::string re;
    std::vector<char> order;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern.compare(i, 3, "{s}") == 0 || pattern.compare(i, 3, "{o}") == 0) {
        order.push_back(pattern[i + 1]);
        re += "([a-z]+)";
        i += 2;
      } else if (std::isalnum(static_cast<unsigned char>(pattern[i])) || pattern[i] == ' ') {
        re += pattern[i];
      } else {
        re += std::string("\\") + pattern[i];
      }
    }
    std::smatch m;
    if (!std::regex_match(sentence, m, std::regex(re))) continue;
    Recovered r;
    bool ok = true;
    for (std::size_t g = 0; g < order.size(); ++g) {
      const auto category = category_of(m[g + 1].str());
      if (!category) {
        ok = false;
        break;
      }
      (order[g] == 's' ? r.subject : r.object) = *category;
    }
    if (ok) return r;
  }
  return std::nullopt;
}

// The scoring rule restated over recovered participants.
inline double expected_sts_score(const Recovered& a, const Recovered& b) {
  const int shared = (a.subject == b.subject ? 1 : 0) + (a.object == b.object ? 1 : 0);
  return shared == 2 ? 5.0 : shared == 1 ? 3.3 : 1.7;
}

inline std::vector<pddl::Atom> sorted(std::vector<pddl::Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

}  // namespace symgoal::testing
