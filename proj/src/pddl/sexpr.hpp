#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace symgoal::pddl::detail {

struct SourcePos {
  std::size_t line = 1;
  std::size_t col = 1;
};

// Node of the s-expression tree. Atoms are lowercased on read.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  SourcePos pos;
  SourcePos end;  // position of the closing paren for lists

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
  // First element is the given keyword, e.g. "(:action ...)".
  bool is_form(std::string_view head) const { return is_list && !items.empty() && items.front().is_atom(head); }
};

// Reads exactly one top-level expression; trailing non-comment text is a
// SyntaxError. ';' starts a comment that runs to end of line.
SExpr read_sexpr(std::string_view text);

}  // namespace symgoal::pddl::detail
