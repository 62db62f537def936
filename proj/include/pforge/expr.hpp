#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pforge/evaluable.hpp"

namespace pforge {

// AST for the closed expression grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' factor)?          right-associative
//   atom    := number | 'x' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//   name    := sin | cos | tan | exp | log | sqrt | abs
//
// '^' binds tighter than unary minus, so "-x^2" reads as -(x^2).
// 'log' is the natural logarithm.

enum class BinaryOp { add, sub, mul, div, pow };
enum class UnaryOp { negate };
enum class FunctionId { sin, cos, tan, exp, log, sqrt, abs };
enum class ConstantId { pi, e };

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

struct NumberNode {
  double value;
};
struct VariableNode {};
struct ConstantNode {
  ConstantId id;
};
struct UnaryNode {
  UnaryOp op;
  AstPtr operand;
};
struct BinaryNode {
  BinaryOp op;
  AstPtr lhs;
  AstPtr rhs;
};
struct CallNode {
  FunctionId fn;
  AstPtr arg;
};

struct AstNode {
  std::variant<NumberNode, VariableNode, ConstantNode, UnaryNode, BinaryNode, CallNode> v;
};

/// A parsed expression in the single variable x. Immutable after parse;
/// evaluation is pure and safe to call concurrently.
class Expression {
 public:
  /// Parses UTF-8 text against the grammar above. Throws SyntaxError with
  /// the byte offset and an expected-token hint on malformed input, and
  /// UnknownIdentifier for names outside the grammar.
  static Expression parse(std::string_view text);

  Expression(Expression&&) noexcept = default;
  Expression& operator=(Expression&&) noexcept = default;
  Expression(const Expression& other);
  Expression& operator=(const Expression& other);

  /// Value at x. Throws DomainError if any sub-expression leaves the
  /// reals (log of non-positive, division by zero, sqrt of negative,
  /// zero to a negative power, negative base with non-integer exponent,
  /// or overflow to a non-finite value).
  double value(double x) const;

  /// Canonical form: fully parenthesized infix, '.' decimal separator,
  /// lowercase function names, shortest round-trip numeric literals.
  /// Parsing the canonical form reproduces the AST structurally.
  std::string canonical() const;

  const std::string& source() const { return source_; }
  const AstNode& root() const { return *root_; }

  /// Adapter for the library entry points that accept any callable.
  RealFunction evaluator() const;

 private:
  Expression(AstPtr root, std::string source);

  AstPtr root_;
  std::string source_;
};

bool structurally_equal(const AstNode& a, const AstNode& b);
bool structurally_equal(const Expression& a, const Expression& b);

const char* function_name(FunctionId fn);

}  // namespace pforge
