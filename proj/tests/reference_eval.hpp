// Independent expression oracle for the test suites. Accepts the same surface
// grammar as pforge::Expression but takes a different route: a shunting-yard
// translation to postfix steps and a stack machine with an explicit poison
// flag instead of exceptions. A poisoned outcome means the production
// evaluator is expected to reject the same input point.
#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace refeval {

enum class Step {
  push_number,
  push_x,
  push_pi,
  push_e,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  fn_sin,
  fn_cos,
  fn_tan,
  fn_exp,
  fn_log,
  fn_sqrt,
  fn_abs,
};

struct Instruction {
  Step step;
  double number = 0.0;
};

struct Program {
  std::vector<Instruction> code;
};

struct Outcome {
  double value = 0.0;
  bool ok = true;
};

namespace detail {

struct Token {
  enum Kind { number, name, op, lparen, rparen } kind;
  double value = 0.0;
  std::string text;
  char symbol = 0;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Token::op, 0.0, {}, c});
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::lparen, 0.0, {}, 0});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::rparen, 0.0, {}, 0});
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = i;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end < text.size() && text[end] == '.') {
        ++end;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      }
      if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
        std::size_t p = end + 1;
        if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
        if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
          ++p;
          while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
          end = p;
        }
      }
      const std::string body = text.substr(i, end - i);
      out.push_back({Token::number, std::strtod(body.c_str(), nullptr), {}, 0});
      i = end;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = i;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
      Token t;
      t.kind = Token::name;
      t.text = text.substr(i, end - i);
      out.push_back(t);
      i = end;
      continue;
    }
    throw std::runtime_error("reference tokenizer: unexpected character '" + std::string(1, c) +
                             "'");
  }
  return out;
}

inline int function_index(const std::string& name) {
  static const char* const names[] = {"sin", "cos", "tan", "exp", "log", "sqrt", "abs"};
  for (int i = 0; i < 7; ++i)
    if (name == names[i]) return i;
  return -1;
}

struct Pending {
  char symbol;  // '+','-','*','/','^','~' for prefix minus, '(' or 'f'
  int func = -1;
};

inline int precedence(char symbol) {
  if (symbol == '^') return 4;
  if (symbol == '~') return 3;
  if (symbol == '*' || symbol == '/') return 2;
  return 1;
}

inline bool right_associative(char symbol) { return symbol == '^' || symbol == '~'; }

}  // namespace detail

inline Program compile(const std::string& text) {
  const auto tokens = detail::tokenize(text);
  Program prog;
  std::vector<detail::Pending> stack;
  bool expect_operand = true;

  auto emit = [&](const detail::Pending& p) {
    switch (p.symbol) {
      case '+': prog.code.push_back({Step::add}); return;
      case '-': prog.code.push_back({Step::sub}); return;
      case '*': prog.code.push_back({Step::mul}); return;
      case '/': prog.code.push_back({Step::div}); return;
      case '^': prog.code.push_back({Step::pow}); return;
      case '~': prog.code.push_back({Step::neg}); return;
      case 'f': {
        static const Step fn_steps[] = {Step::fn_sin, Step::fn_cos,  Step::fn_tan, Step::fn_exp,
                                        Step::fn_log, Step::fn_sqrt, Step::fn_abs};
        prog.code.push_back({fn_steps[p.func]});
        return;
      }
      default: throw std::runtime_error("reference compiler: unbalanced '('");
    }
  };

  for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
    const auto& t = tokens[ti];
    switch (t.kind) {
      case detail::Token::number:
        prog.code.push_back({Step::push_number, t.value});
        expect_operand = false;
        break;
      case detail::Token::name:
        if (t.text == "x") {
          prog.code.push_back({Step::push_x});
          expect_operand = false;
        } else if (t.text == "pi") {
          prog.code.push_back({Step::push_pi});
          expect_operand = false;
        } else if (t.text == "e") {
          prog.code.push_back({Step::push_e});
          expect_operand = false;
        } else {
          const int idx = detail::function_index(t.text);
          if (idx < 0) throw std::runtime_error("reference compiler: unknown name " + t.text);
          if (ti + 1 >= tokens.size() || tokens[ti + 1].kind != detail::Token::lparen)
            throw std::runtime_error("reference compiler: function without '('");
          stack.push_back({'f', idx});
        }
        break;
      case detail::Token::lparen:
        stack.push_back({'(', -1});
        expect_operand = true;
        break;
      case detail::Token::rparen:
        while (!stack.empty() && stack.back().symbol != '(') {
          emit(stack.back());
          stack.pop_back();
        }
        if (stack.empty()) throw std::runtime_error("reference compiler: unbalanced ')'");
        stack.pop_back();
        if (!stack.empty() && stack.back().symbol == 'f') {
          emit(stack.back());
          stack.pop_back();
        }
        expect_operand = false;
        break;
      case detail::Token::op: {
        const char s = t.symbol;
        if (expect_operand) {
          if (s != '-')
            throw std::runtime_error("reference compiler: operator in operand position");
          // Prefix minus never pops: nothing to its left is complete.
          stack.push_back({'~', -1});
          break;
        }
        while (!stack.empty()) {
          const char top = stack.back().symbol;
          if (top == '(' || top == 'f') break;
          const int pt = detail::precedence(top);
          const int ps = detail::precedence(s);
          if (pt > ps || (pt == ps && !detail::right_associative(s))) {
            emit(stack.back());
            stack.pop_back();
          } else {
            break;
          }
        }
        stack.push_back({s, -1});
        expect_operand = true;
        break;
      }
    }
  }
  while (!stack.empty()) {
    if (stack.back().symbol == '(' || stack.back().symbol == 'f')
      throw std::runtime_error("reference compiler: unbalanced input");
    emit(stack.back());
    stack.pop_back();
  }
  return prog;
}

inline Outcome run(const Program& prog, double x) {
  std::vector<double> st;
  bool poisoned = false;

  auto checked = [&](double v) {
    if (!std::isfinite(v)) poisoned = true;
    return v;
  };
  auto need = [&](std::size_t n) {
    if (st.size() < n) throw std::runtime_error("reference machine: stack underflow");
  };

  for (const auto& ins : prog.code) {
    switch (ins.step) {
      case Step::push_number: st.push_back(checked(ins.number)); break;
      case Step::push_x: st.push_back(checked(x)); break;
      case Step::push_pi: st.push_back(4.0 * std::atan(1.0)); break;
      case Step::push_e: st.push_back(std::exp(1.0)); break;
      case Step::neg:
        need(1);
        st.back() = checked(-st.back());
        break;
      case Step::fn_sin:
        need(1);
        st.back() = checked(std::sin(st.back()));
        break;
      case Step::fn_cos:
        need(1);
        st.back() = checked(std::cos(st.back()));
        break;
      case Step::fn_tan:
        need(1);
        st.back() = checked(std::tan(st.back()));
        break;
      case Step::fn_exp:
        need(1);
        st.back() = checked(std::exp(st.back()));
        break;
      case Step::fn_log:
        need(1);
        if (!(st.back() > 0.0)) poisoned = true;
        st.back() = checked(std::log(st.back()));
        break;
      case Step::fn_sqrt:
        need(1);
        if (st.back() < 0.0) poisoned = true;
        st.back() = checked(std::sqrt(st.back()));
        break;
      case Step::fn_abs:
        need(1);
        st.back() = checked(std::abs(st.back()));
        break;
      default: {
        need(2);
        const double r = st.back();
        st.pop_back();
        const double l = st.back();
        st.pop_back();
        double v = 0.0;
        switch (ins.step) {
          case Step::add: v = l + r; break;
          case Step::sub: v = l - r; break;
          case Step::mul: v = l * r; break;
          case Step::div:
            if (r == 0.0) poisoned = true;
            v = l / r;
            break;
          case Step::pow:
            if (l == 0.0 && r < 0.0) poisoned = true;
            if (l < 0.0 && !(std::isfinite(r) && r == std::trunc(r))) poisoned = true;
            v = std::pow(l, r);
            break;
          default: throw std::runtime_error("reference machine: bad opcode");
        }
        st.push_back(checked(v));
        break;
      }
    }
  }
  if (st.size() != 1) throw std::runtime_error("reference machine: malformed program");
  Outcome out;
  out.ok = !poisoned;
  out.value = st.back();
  return out;
}

inline Outcome evaluate(const std::string& text, double x) { return run(compile(text), x); }

}  // namespace refeval
