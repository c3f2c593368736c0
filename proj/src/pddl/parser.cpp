#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "sexpr.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/pddl/pddl.hpp"

namespace symgoal::pddl {
namespace {

using detail::SExpr;

const std::set<std::string, std::less<>> kSupportedRequirements = {":strips", ":typing", ":negative-preconditions"};

// Constructs that are PDDL but outside the subset.
const std::set<std::string, std::less<>> kUnsupportedOperators = {
    "forall", "exists", "or", "imply", "when", "=", "increase", "decrease", "assign", "scale-up", "scale-down",
    "either", "preference", "<", ">", "<=", ">="};

// "at" and "over" are ordinary predicate names unless they open a temporal
// qualifier: (at start ..), (at end ..), (over all ..) or a timed literal (at 10 (p)).
bool is_temporal(const SExpr& node) {
  if (node.items.size() < 2 || !node.items[0].is_atom()) return false;
  const std::string& head = node.items[0].atom;
  const SExpr& next = node.items[1];
  if (head == "over") return next.is_atom("all");
  if (head != "at") return false;
  if (next.is_list) return true;
  return next.atom == "start" || next.atom == "end" ||
         (!next.atom.empty() && (std::isdigit(static_cast<unsigned char>(next.atom.front())) != 0));
}

[[noreturn]] void fail(const SExpr& at, const std::string& expected) {
  throw SyntaxError(at.pos.line, at.pos.col, expected);
}

std::string strip_colon(std::string_view s) { return std::string(!s.empty() && s.front() == ':' ? s.substr(1) : s); }

const std::string& expect_atom(const SExpr& node, const std::string& what) {
  if (!node.is_atom()) fail(node, what);
  return node.atom;
}

void expect_identifier(const SExpr& node, const std::string& what) {
  const std::string& s = expect_atom(node, what);
  if (s.empty() || s.front() == '?' || s.front() == ':' || s.front() == '-') fail(node, what);
}

// Shared by :types, :objects, :parameters and predicate parameter lists.
std::vector<TypedName> parse_typed_list(const std::vector<SExpr>& items, std::size_t start, bool variables) {
  std::vector<TypedName> out;
  std::size_t pending_from = 0;
  for (std::size_t i = start; i < items.size(); ++i) {
    const SExpr& item = items[i];
    if (item.is_form("either")) throw UnsupportedFeature("either");
    if (item.is_atom("-")) {
      if (i + 1 >= items.size()) fail(item, "type name after '-'");
      const SExpr& type_node = items[i + 1];
      if (type_node.is_form("either")) throw UnsupportedFeature("either");
      expect_identifier(type_node, "type name");
      if (pending_from == out.size()) fail(item, variables ? "variable before '-'" : "name before '-'");
      for (std::size_t k = pending_from; k < out.size(); ++k) out[k].type = type_node.atom;
      pending_from = out.size();
      ++i;
      continue;
    }
    const std::string& name = expect_atom(item, variables ? "variable" : "name");
    if (variables != is_variable(name) || name.size() < (variables ? 2u : 1u)) {
      fail(item, variables ? "variable starting with '?'" : "name");
    }
    out.push_back({name, std::string(kRootType)});
  }
  return out;
}

void check_unique(const std::vector<TypedName>& names, const std::string& what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n.name).second) throw InvalidModel("duplicate " + what + " " + n.name);
  }
}

Atom parse_atom(const SExpr& node) {
  if (!node.is_list || node.items.empty()) fail(node, "atom");
  const SExpr& head = node.items.front();
  if (head.is_atom() && kUnsupportedOperators.count(head.atom)) throw UnsupportedFeature(head.atom);
  if (is_temporal(node)) throw UnsupportedFeature(head.atom);
  expect_identifier(head, "predicate name");
  Atom atom{head.atom, {}};
  for (std::size_t i = 1; i < node.items.size(); ++i) {
    const SExpr& arg = node.items[i];
    if (arg.is_list) {
      if (arg.is_form("either")) throw UnsupportedFeature("either");
      fail(arg, "term");
    }
    atom.args.push_back(arg.atom);
  }
  return atom;
}

Literal parse_literal(const SExpr& node) {
  if (node.is_form("not")) {
    if (node.items.size() != 2) fail(node, "(not ATOM)");
    const SExpr& inner = node.items[1];
    if (inner.is_form("and") || inner.is_form("not")) throw UnsupportedFeature("complex-negation");
    return {parse_atom(inner), true};
  }
  return {parse_atom(node), false};
}

// Flattens nested (and ...) into a literal list.
void parse_conjunction(const SExpr& node, std::vector<Literal>& out) {
  if (!node.is_list) fail(node, "'('");
  if (node.items.empty()) return;  // "()" is the empty conjunction
  if (node.is_form("and")) {
    for (std::size_t i = 1; i < node.items.size(); ++i) parse_conjunction(node.items[i], out);
    return;
  }
  out.push_back(parse_literal(node));
}

const SExpr& expect_define(const SExpr& root, std::string_view kind, std::string& name) {
  if (!root.is_form("define")) fail(root, "(define ...)");
  if (root.items.size() < 2) fail(root, "(" + std::string(kind) + " NAME)");
  const SExpr& header = root.items[1];
  if (!header.is_form(kind) || header.items.size() != 2) fail(header, "(" + std::string(kind) + " NAME)");
  expect_identifier(header.items[1], std::string(kind) + " name");
  name = header.items[1].atom;
  return root;
}

std::vector<std::string> parse_requirements(const SExpr& section) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < section.items.size(); ++i) {
    const std::string& req = expect_atom(section.items[i], "requirement keyword");
    if (req.empty() || req.front() != ':') fail(section.items[i], "requirement keyword");
    if (!kSupportedRequirements.count(req)) throw UnsupportedFeature(strip_colon(req));
    if (std::find(out.begin(), out.end(), req) == out.end()) out.push_back(req);
  }
  return out;
}

class DomainChecker {
 public:
  explicit DomainChecker(const Domain& domain) : domain_(domain) {}

  void check_type(const std::string& type) const {
    if (!domain_.has_type(type)) throw UndeclaredSymbol(type);
  }

  void check_schema_atom(const Atom& atom, const std::vector<TypedName>& params) const {
    const PredicateSchema* pred = domain_.find_predicate(atom.predicate);
    if (!pred) throw UndeclaredSymbol(atom.predicate);
    if (pred->params.size() != atom.args.size()) {
      throw InvalidModel("predicate " + atom.predicate + " expects " + std::to_string(pred->params.size()) +
                         " arguments");
    }
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      const std::string& arg = atom.args[i];
      if (!is_variable(arg)) throw UndeclaredSymbol(arg);  // domain constants are outside the subset
      auto it = std::find_if(params.begin(), params.end(), [&](const auto& p) { return p.name == arg; });
      if (it == params.end()) throw InvalidModel("free variable " + arg + " in " + to_string(atom));
      if (!domain_.is_subtype(it->type, pred->params[i].type)) {
        throw InvalidModel(arg + " of type " + it->type + " does not fit " + pred->name + " parameter type " +
                           pred->params[i].type);
      }
    }
  }

 private:
  const Domain& domain_;
};

std::vector<TypeDecl> parse_types(const SExpr& section) {
  std::vector<TypeDecl> types;
  for (const auto& t : parse_typed_list(section.items, 1, false)) {
    if (t.name == kRootType) continue;  // "object" is implicit
    types.push_back({t.name, t.type});
  }
  std::unordered_set<std::string> seen;
  for (const auto& t : types) {
    if (!seen.insert(t.name).second) throw InvalidModel("duplicate type " + t.name);
  }
  for (const auto& t : types) {
    if (t.parent != kRootType && !seen.count(t.parent)) throw UndeclaredSymbol(t.parent);
  }
  // Reject cycles: every chain must reach the root within |types| hops.
  for (const auto& t : types) {
    std::string current = t.parent;
    std::size_t hops = 0;
    while (current != kRootType) {
      if (++hops > types.size()) throw InvalidModel("cyclic type hierarchy at " + t.name);
      current = std::find_if(types.begin(), types.end(), [&](const auto& d) { return d.name == current; })->parent;
    }
  }
  return types;
}

ActionSchema parse_action(const SExpr& section, const Domain& domain) {
  if (section.items.size() < 2) fail(section, "action name");
  expect_identifier(section.items[1], "action name");
  ActionSchema action;
  action.name = section.items[1].atom;

  bool seen_params = false, seen_pre = false, seen_eff = false;
  for (std::size_t i = 2; i < section.items.size(); i += 2) {
    const SExpr& key = section.items[i];
    const std::string& keyword = expect_atom(key, ":parameters, :precondition or :effect");
    if (i + 1 >= section.items.size()) fail(key, "value after " + keyword);
    const SExpr& value = section.items[i + 1];
    if (keyword == ":parameters") {
      if (seen_params) fail(key, "single :parameters");
      seen_params = true;
      if (!value.is_list) fail(value, "parameter list");
      action.params = parse_typed_list(value.items, 0, true);
    } else if (keyword == ":precondition") {
      if (seen_pre) fail(key, "single :precondition");
      seen_pre = true;
      parse_conjunction(value, action.precondition);
    } else if (keyword == ":effect") {
      if (seen_eff) fail(key, "single :effect");
      seen_eff = true;
      parse_conjunction(value, action.effect);
    } else if (keyword == ":duration" || keyword == ":condition") {
      throw UnsupportedFeature("durative-actions");
    } else {
      fail(key, ":parameters, :precondition or :effect");
    }
  }

  check_unique(action.params, "parameter");
  DomainChecker checker(domain);
  for (const auto& p : action.params) checker.check_type(p.type);
  for (const auto& lit : action.precondition) checker.check_schema_atom(lit.atom, action.params);
  for (const auto& lit : action.effect) checker.check_schema_atom(lit.atom, action.params);

  for (const auto& add : action.effect) {
    if (add.negated) continue;
    for (const auto& del : action.effect) {
      if (del.negated && del.atom == add.atom) {
        throw InvalidModel("action " + action.name + " both adds and deletes " + to_string(add.atom));
      }
    }
  }
  return action;
}

}  // namespace

Domain parse_domain(std::string_view text) {
  const SExpr root = detail::read_sexpr(text);
  Domain domain;
  expect_define(root, "domain", domain.name);

  enum class Stage { Requirements, Types, Predicates, Actions };
  Stage stage = Stage::Requirements;
  auto advance_to = [&](Stage next, const SExpr& at, const std::string& name) {
    if (next < stage || (next == stage && next != Stage::Actions)) fail(at, "section order; unexpected " + name);
    stage = next;
  };

  bool any_section = false;
  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& section = root.items[i];
    if (!section.is_list || section.items.empty() || !section.items.front().is_atom()) fail(section, "section");
    const std::string& head = section.items.front().atom;
    if (head == ":requirements") {
      if (any_section) fail(section, ":requirements before other sections");
      domain.requirements = parse_requirements(section);
    } else if (head == ":types") {
      advance_to(Stage::Types, section, head);
      domain.types = parse_types(section);
    } else if (head == ":predicates") {
      advance_to(Stage::Predicates, section, head);
      for (std::size_t k = 1; k < section.items.size(); ++k) {
        const SExpr& decl = section.items[k];
        if (!decl.is_list || decl.items.empty()) fail(decl, "(predicate ?var...)");
        expect_identifier(decl.items.front(), "predicate name");
        PredicateSchema pred{decl.items.front().atom, parse_typed_list(decl.items, 1, true)};
        if (domain.find_predicate(pred.name)) throw InvalidModel("duplicate predicate " + pred.name);
        check_unique(pred.params, "parameter");
        for (const auto& p : pred.params) DomainChecker(domain).check_type(p.type);
        domain.predicates.push_back(std::move(pred));
      }
    } else if (head == ":action") {
      advance_to(Stage::Actions, section, head);
      ActionSchema action = parse_action(section, domain);
      if (domain.find_action(action.name)) throw InvalidModel("duplicate action " + action.name);
      domain.actions.push_back(std::move(action));
    } else if (head == ":constants" || head == ":functions" || head == ":derived" || head == ":durative-action" ||
               head == ":constraints") {
      throw UnsupportedFeature(strip_colon(head));
    } else {
      fail(section.items.front(), "domain section");
    }
    any_section = true;
  }
  return domain;
}

Problem parse_problem(std::string_view text, const Domain& domain) {
  const SExpr root = detail::read_sexpr(text);
  Problem problem;
  expect_define(root, "problem", problem.name);

  bool seen_domain = false, seen_objects = false, seen_init = false, seen_goal = false;
  for (std::size_t i = 2; i < root.items.size(); ++i) {
    const SExpr& section = root.items[i];
    if (!section.is_list || section.items.empty() || !section.items.front().is_atom()) fail(section, "section");
    const std::string& head = section.items.front().atom;
    if (head == ":domain") {
      if (seen_domain || section.items.size() != 2) fail(section, "(:domain NAME)");
      seen_domain = true;
      expect_identifier(section.items[1], "domain name");
      problem.domain_name = section.items[1].atom;
    } else if (head == ":requirements") {
      parse_requirements(section);
    } else if (head == ":objects") {
      if (seen_objects) fail(section, "single :objects");
      seen_objects = true;
      problem.objects = parse_typed_list(section.items, 1, false);
    } else if (head == ":init") {
      if (seen_init) fail(section, "single :init");
      seen_init = true;
      for (std::size_t k = 1; k < section.items.size(); ++k) {
        const SExpr& fact = section.items[k];
        if (fact.is_form("not")) throw InvalidModel("negative literal in :init");
        Atom atom = parse_atom(fact);
        if (std::find(problem.init.begin(), problem.init.end(), atom) == problem.init.end()) {
          problem.init.push_back(std::move(atom));
        }
      }
    } else if (head == ":goal") {
      if (seen_goal || section.items.size() != 2) fail(section, "(:goal GD)");
      seen_goal = true;
      std::vector<Literal> goal;
      parse_conjunction(section.items[1], goal);
      for (auto& lit : goal) {
        if (std::find(problem.goal.begin(), problem.goal.end(), lit) == problem.goal.end()) {
          problem.goal.push_back(std::move(lit));
        }
      }
    } else if (head == ":metric" || head == ":constraints" || head == ":timed-initial-literals") {
      throw UnsupportedFeature(strip_colon(head));
    } else {
      fail(section.items.front(), "problem section");
    }
  }
  if (!seen_domain) fail(root, "(:domain NAME)");
  if (problem.domain_name != domain.name) {
    throw InvalidModel("problem targets domain " + problem.domain_name + ", not " + domain.name);
  }

  check_unique(problem.objects, "object");
  for (const auto& o : problem.objects) {
    if (!domain.has_type(o.type)) throw UndeclaredSymbol(o.type);
  }
  auto check_ground = [&](const Atom& atom) {
    const PredicateSchema* pred = domain.find_predicate(atom.predicate);
    if (!pred) throw UndeclaredSymbol(atom.predicate);
    if (pred->params.size() != atom.args.size()) {
      throw InvalidModel("predicate " + atom.predicate + " expects " + std::to_string(pred->params.size()) +
                         " arguments");
    }
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      const TypedName* object = problem.find_object(atom.args[i]);
      if (!object) throw UndeclaredSymbol(atom.args[i]);
      if (!domain.is_subtype(object->type, pred->params[i].type)) {
        throw InvalidModel(atom.args[i] + " is not of type " + pred->params[i].type + " in " + to_string(atom));
      }
    }
  };
  for (const auto& atom : problem.init) check_ground(atom);
  for (const auto& lit : problem.goal) check_ground(lit.atom);
  return problem;
}

}  // namespace symgoal::pddl
