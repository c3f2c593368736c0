#include "sexpr.hpp"

#include <cctype>

#include "symgoal/errors.hpp"

namespace symgoal::pddl::detail {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read_document() {
    skip_blank();
    if (at_end()) throw SyntaxError(pos_.line, pos_.col, "'('");
    SExpr root = read();
    skip_blank();
    if (!at_end()) throw SyntaxError(pos_.line, pos_.col, "end of input");
    return root;
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek() const { return text_[offset_]; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++offset_;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip_blank();
    if (at_end()) throw SyntaxError(pos_.line, pos_.col, "expression");
    SExpr node;
    node.pos = pos_;
    if (peek() == ')') throw SyntaxError(pos_.line, pos_.col, "expression, found ')'");
    if (peek() == '(') {
      node.is_list = true;
      advance();
      for (;;) {
        skip_blank();
        if (at_end()) throw SyntaxError(pos_.line, pos_.col, "')'");
        if (peek() == ')') {
          node.end = pos_;
          advance();
          return node;
        }
        node.items.push_back(read());
      }
    }
    while (!at_end()) {
      char c = peek();
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      node.atom.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      advance();
    }
    return node;
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  SourcePos pos_;
};

}  // namespace

SExpr read_sexpr(std::string_view text) { return Reader(text).read_document(); }

}  // namespace symgoal::pddl::detail
