#include "pforge/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "pforge/errors.hpp"

namespace pforge {

namespace {

struct FunctionEntry {
  const char* name;
  FunctionId id;
};

constexpr std::array<FunctionEntry, 7> kFunctions = {{
    {"sin", FunctionId::sin},
    {"cos", FunctionId::cos},
    {"tan", FunctionId::tan},
    {"exp", FunctionId::exp},
    {"log", FunctionId::log},
    {"sqrt", FunctionId::sqrt},
    {"abs", FunctionId::abs},
}};

std::optional<FunctionId> lookup_function(std::string_view name) {
  for (const auto& entry : kFunctions)
    if (name == entry.name) return entry.id;
  return std::nullopt;
}

// ---- lexer ----

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string_view text;  // identifiers and numbers
  double value = 0.0;     // numbers
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {TokenKind::end, start, {}};
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_ = {TokenKind::plus, start, text_.substr(start, 1)}; ++pos_; return;
      case '-': current_ = {TokenKind::minus, start, text_.substr(start, 1)}; ++pos_; return;
      case '*': current_ = {TokenKind::star, start, text_.substr(start, 1)}; ++pos_; return;
      case '/': current_ = {TokenKind::slash, start, text_.substr(start, 1)}; ++pos_; return;
      case '^': current_ = {TokenKind::caret, start, text_.substr(start, 1)}; ++pos_; return;
      case '(': current_ = {TokenKind::lparen, start, text_.substr(start, 1)}; ++pos_; return;
      case ')': current_ = {TokenKind::rparen, start, text_.substr(start, 1)}; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number(start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      current_ = {TokenKind::identifier, start, text_.substr(start, end - start)};
      pos_ = end;
      return;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " +
                          std::to_string(start),
                      start, "a number, name, operator, or parenthesis");
  }

  void lex_number(std::size_t start) {
    std::size_t end = pos_;
    bool any_digit = false;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
      any_digit = true;
    }
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
        any_digit = true;
      }
    }
    if (!any_digit)
      throw SyntaxError("malformed number at offset " + std::to_string(start), start,
                        "a digit before or after '.'");
    // Exponent part, only when followed by at least one digit.
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp_end = end + 1;
      if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-')) ++exp_end;
      if (exp_end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp_end]))) {
        ++exp_end;
        while (exp_end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp_end])))
          ++exp_end;
        end = exp_end;
      }
    }
    const std::string_view body = text_.substr(start, end - start);
    double value = 0.0;
    const auto result = std::from_chars(body.data(), body.data() + body.size(), value);
    if (result.ec != std::errc{} && result.ec != std::errc::result_out_of_range)
      throw SyntaxError("malformed number at offset " + std::to_string(start), start, "a number");
    current_ = {TokenKind::number, start, body, value};
    pos_ = end;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokenKind::end, 0, {}};
};

// ---- parser (recursive descent) ----

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  AstPtr run() {
    AstPtr e = parse_expr();
    const Token& t = lexer_.peek();
    if (t.kind != TokenKind::end)
      throw SyntaxError("unexpected input at offset " + std::to_string(t.offset), t.offset,
                        "an operator or end of input");
    return e;
  }

 private:
  static constexpr int kMaxDepth = 10000;

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth)
        throw SyntaxError("expression nested too deeply", parser.lexer_.peek().offset,
                          "a shallower expression");
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  AstPtr parse_expr() {
    DepthGuard guard(*this);
    AstPtr lhs = parse_term();
    while (true) {
      const TokenKind k = lexer_.peek().kind;
      if (k != TokenKind::plus && k != TokenKind::minus) return lhs;
      lexer_.take();
      AstPtr rhs = parse_term();
      lhs = make(BinaryNode{k == TokenKind::plus ? BinaryOp::add : BinaryOp::sub, std::move(lhs),
                            std::move(rhs)});
    }
  }

  AstPtr parse_term() {
    DepthGuard guard(*this);
    AstPtr lhs = parse_factor();
    while (true) {
      const TokenKind k = lexer_.peek().kind;
      if (k != TokenKind::star && k != TokenKind::slash) return lhs;
      lexer_.take();
      AstPtr rhs = parse_factor();
      lhs = make(BinaryNode{k == TokenKind::star ? BinaryOp::mul : BinaryOp::div, std::move(lhs),
                            std::move(rhs)});
    }
  }

  AstPtr parse_factor() {
    DepthGuard guard(*this);
    if (lexer_.peek().kind == TokenKind::minus) {
      lexer_.take();
      return make(UnaryNode{UnaryOp::negate, parse_factor()});
    }
    return parse_power();
  }

  AstPtr parse_power() {
    DepthGuard guard(*this);
    AstPtr base = parse_atom();
    if (lexer_.peek().kind != TokenKind::caret) return base;
    lexer_.take();
    // The exponent re-enters at factor level, making '^' right-associative
    // and allowing a signed exponent as in x^-2.
    AstPtr exponent = parse_factor();
    return make(BinaryNode{BinaryOp::pow, std::move(base), std::move(exponent)});
  }

  AstPtr parse_atom() {
    DepthGuard guard(*this);
    const Token t = lexer_.take();
    switch (t.kind) {
      case TokenKind::number:
        return make(NumberNode{t.value});
      case TokenKind::lparen: {
        AstPtr inner = parse_expr();
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::identifier:
        return parse_name(t);
      case TokenKind::end:
        throw SyntaxError("unexpected end of input at offset " + std::to_string(t.offset),
                          t.offset, "an operand");
      default:
        throw SyntaxError("unexpected token '" + std::string(t.text) + "' at offset " +
                              std::to_string(t.offset),
                          t.offset, "an operand");
    }
  }

  AstPtr parse_name(const Token& t) {
    if (t.text == "x") return make(VariableNode{});
    if (t.text == "pi") return make(ConstantNode{ConstantId::pi});
    if (t.text == "e") return make(ConstantNode{ConstantId::e});
    if (const auto fn = lookup_function(t.text)) {
      expect(TokenKind::lparen, "'(' after function name");
      AstPtr arg = parse_expr();
      expect(TokenKind::rparen, "')'");
      return make(CallNode{*fn, std::move(arg)});
    }
    throw UnknownIdentifier("unknown identifier '" + std::string(t.text) + "' at offset " +
                                std::to_string(t.offset),
                            t.offset, std::string(t.text));
  }

  void expect(TokenKind kind, const char* description) {
    const Token& t = lexer_.peek();
    if (t.kind != kind)
      throw SyntaxError("unexpected " +
                            (t.kind == TokenKind::end ? std::string("end of input")
                                                      : "token '" + std::string(t.text) + "'") +
                            " at offset " + std::to_string(t.offset),
                        t.offset, description);
    lexer_.take();
  }

  template <class N>
  static AstPtr make(N&& node) {
    return std::make_unique<AstNode>(AstNode{std::forward<N>(node)});
  }

  Lexer lexer_;
  int depth_ = 0;
};

// ---- evaluation ----

[[noreturn]] void domain_fail(const std::string& what, double x) {
  throw DomainError(what + " (evaluating at x = " + std::to_string(x) + ")", x);
}

bool is_integer_valued(double v) { return std::isfinite(v) && v == std::trunc(v); }

double eval_node(const AstNode& node, double x);

double eval_call(const CallNode& call, double x) {
  const double a = eval_node(*call.arg, x);
  switch (call.fn) {
    case FunctionId::sin: return std::sin(a);
    case FunctionId::cos: return std::cos(a);
    case FunctionId::tan: return std::tan(a);
    case FunctionId::exp: return std::exp(a);
    case FunctionId::log:
      if (!(a > 0.0)) domain_fail("log of non-positive value", x);
      return std::log(a);
    case FunctionId::sqrt:
      if (a < 0.0) domain_fail("sqrt of negative value", x);
      return std::sqrt(a);
    case FunctionId::abs: return std::abs(a);
  }
  domain_fail("unreachable function id", x);
}

double eval_binary(const BinaryNode& bin, double x) {
  const double l = eval_node(*bin.lhs, x);
  const double r = eval_node(*bin.rhs, x);
  switch (bin.op) {
    case BinaryOp::add: return l + r;
    case BinaryOp::sub: return l - r;
    case BinaryOp::mul: return l * r;
    case BinaryOp::div:
      if (r == 0.0) domain_fail("division by zero", x);
      return l / r;
    case BinaryOp::pow:
      if (l == 0.0 && r < 0.0) domain_fail("zero raised to a negative power", x);
      if (l < 0.0 && !is_integer_valued(r))
        domain_fail("negative base with non-integer exponent", x);
      return std::pow(l, r);
  }
  domain_fail("unreachable binary op", x);
}

double eval_node(const AstNode& node, double x) {
  double result = std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          return x;
        } else if constexpr (std::is_same_v<T, ConstantNode>) {
          return n.id == ConstantId::pi ? std::numbers::pi : std::numbers::e;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return -eval_node(*n.operand, x);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return eval_binary(n, x);
        } else {
          return eval_call(n, x);
        }
      },
      node.v);
  if (!std::isfinite(result)) domain_fail("sub-expression is not finite", x);
  return result;
}

// ---- canonical printing ----

void format_number(std::string& out, double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, result.ptr);
}

char binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::sub: return '-';
    case BinaryOp::mul: return '*';
    case BinaryOp::div: return '/';
    case BinaryOp::pow: return '^';
  }
  return '?';
}

void print_node(std::string& out, const AstNode& node) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          format_number(out, n.value);
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          out += 'x';
        } else if constexpr (std::is_same_v<T, ConstantNode>) {
          out += n.id == ConstantId::pi ? "pi" : "e";
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          out += "(-";
          print_node(out, *n.operand);
          out += ')';
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          out += '(';
          print_node(out, *n.lhs);
          out += binary_symbol(n.op);
          print_node(out, *n.rhs);
          out += ')';
        } else {
          out += function_name(n.fn);
          out += '(';
          print_node(out, *n.arg);
          out += ')';
        }
      },
      node.v);
}

AstPtr clone_node(const AstNode& node) {
  return std::visit(
      [&](const auto& n) -> AstPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnaryNode>) {
          return std::make_unique<AstNode>(AstNode{UnaryNode{n.op, clone_node(*n.operand)}});
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return std::make_unique<AstNode>(
              AstNode{BinaryNode{n.op, clone_node(*n.lhs), clone_node(*n.rhs)}});
        } else if constexpr (std::is_same_v<T, CallNode>) {
          return std::make_unique<AstNode>(AstNode{CallNode{n.fn, clone_node(*n.arg)}});
        } else {
          return std::make_unique<AstNode>(AstNode{n});
        }
      },
      node.v);
}

}  // namespace

const char* function_name(FunctionId fn) {
  for (const auto& entry : kFunctions)
    if (entry.id == fn) return entry.name;
  return "?";
}

Expression::Expression(AstPtr root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

Expression::Expression(const Expression& other)
    : root_(clone_node(*other.root_)), source_(other.source_) {}

Expression& Expression::operator=(const Expression& other) {
  if (this != &other) {
    root_ = clone_node(*other.root_);
    source_ = other.source_;
  }
  return *this;
}

Expression Expression::parse(std::string_view text) {
  Parser parser(text);
  return Expression(parser.run(), std::string(text));
}

double Expression::value(double x) const { return eval_node(*root_, x); }

std::string Expression::canonical() const {
  std::string out;
  print_node(out, *root_);
  return out;
}

RealFunction Expression::evaluator() const {
  // Shared ownership so the callable stays valid independently of *this.
  auto owned = std::make_shared<Expression>(*this);
  return [owned](double x) { return owned->value(x); };
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
  if (a.v.index() != b.v.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.v);
        if constexpr (std::is_same_v<T, NumberNode>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, VariableNode>) {
          (void)nb;
          return true;
        } else if constexpr (std::is_same_v<T, ConstantNode>) {
          return na.id == nb.id;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return na.op == nb.op && structurally_equal(*na.operand, *nb.operand);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return na.op == nb.op && structurally_equal(*na.lhs, *nb.lhs) &&
                 structurally_equal(*na.rhs, *nb.rhs);
        } else {
          return na.fn == nb.fn && structurally_equal(*na.arg, *nb.arg);
        }
      },
      a.v);
}

bool structurally_equal(const Expression& a, const Expression& b) {
  return structurally_equal(a.root(), b.root());
}

}  // namespace pforge
