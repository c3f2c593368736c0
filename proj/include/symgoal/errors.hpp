#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symgoal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Raised on malformed JSON / config documents (schema violations).
class SchemaError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

namespace pddl {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t col, std::string expected)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": expected " + expected),
        line_(line),
        col_(col),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t col_;
  std::string expected_;
};

class UnsupportedFeature : public Error {
 public:
  explicit UnsupportedFeature(std::string name) : Error("unsupported feature: " + name), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UndeclaredSymbol : public Error {
 public:
  explicit UndeclaredSymbol(std::string name) : Error("undeclared symbol: " + name), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Structurally well-formed input that violates a model invariant (arity,
// typing, duplicate names, contradictory effects, free variables).
class InvalidModel : public Error {
 public:
  using Error::Error;
};

}  // namespace pddl

namespace scene {

class UnknownCategory : public Error {
 public:
  explicit UnknownCategory(std::string name) : Error("unknown category: " + name), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace scene

namespace goal {

class EmptyInstruction : public Error {
 public:
  EmptyInstruction() : Error("instruction is empty after tokenization") {}
};

class UnresolvableAction : public Error {
 public:
  explicit UnresolvableAction(const std::string& instruction)
      : Error("no verb, intent pattern or learned association resolves an action for: " + instruction) {}
};

class EmptyDataset : public Error {
 public:
  EmptyDataset() : Error("training dataset is empty") {}
};

class MissingObject : public Error {
 public:
  explicit MissingObject(std::string role) : Error("goal participant has no grounded object: " + role) {}
};

}  // namespace goal

namespace text {

class EmptyBatch : public Error {
 public:
  EmptyBatch() : Error("sts loss over an empty batch") {}
};

}  // namespace text

}  // namespace symgoal
