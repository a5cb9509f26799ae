#include "algentropy/expr.hpp"

#include <cctype>

#include "algentropy/errors.hpp"

namespace algentropy {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (eat('+')) {
        e = binary(Expr::Kind::add, e, term());
      } else if (eat('-')) {
        e = binary(Expr::Kind::sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (eat('*')) {
        e = binary(Expr::Kind::mul, e, unary());
      } else if (eat('/')) {
        e = binary(Expr::Kind::div, e, unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    if (eat('-')) return binary(Expr::Kind::neg, unary(), nullptr);
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = i_;
    const Integer n = integer();
    if (n <= 0 || n > 1000) {
      i_ = start;
      fail("exponent must be a positive integer at most 1000");
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::pow;
    e->exponent = static_cast<int>(n.get_si());
    e->lhs = std::move(base);
    return e;
  }

  Integer integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  ExprPtr atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    auto e = std::make_shared<Expr>();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e->kind = Expr::Kind::number;
      e->number = integer();
      skip();
      if (i_ < s_.size() && s_[i_] == '.') fail("decimal numbers are not allowed; write p/q");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      e->name = std::string(s_.substr(start, i_ - start));
      if (e->name == "x" || e->name == "y") {
        e->kind = e->name == "x" ? Expr::Kind::x : Expr::Kind::y;
        e->name.clear();
        return e;
      }
      e->kind = Expr::Kind::symbol;
      if (eat('[')) {
        int sign = 0;
        if (eat('+')) {
          sign = 1;
        } else if (eat('-')) {
          sign = -1;
        } else {
          fail("expected '+' or '-' in index shift");
        }
        const Integer k = integer();
        if (k > 100) fail("index shift too large");
        if (!eat(']')) fail("expected ']'");
        e->shift = sign * static_cast<int>(k.get_si());
        e->has_shift = true;
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print_expression(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: return e.number.get_str();
    case Expr::Kind::x: return "x";
    case Expr::Kind::y: return "y";
    case Expr::Kind::symbol:
      if (!e.has_shift) return e.name;
      return e.name + "[" + (e.shift < 0 ? "-" : "+") + std::to_string(std::abs(e.shift)) + "]";
    case Expr::Kind::neg:
      // "- -x" would also parse, but "-(...)" keeps sums readable.
      return "-" + wrap(*e.lhs, precedence(*e.lhs) < 3);
    case Expr::Kind::pow:
      return wrap(*e.lhs, precedence(*e.lhs) < 5) + "^" + std::to_string(e.exponent);
    default: break;
  }
  const int p = precedence(e);
  const char* op = e.kind == Expr::Kind::add ? " + " : e.kind == Expr::Kind::sub ? " - " : e.kind == Expr::Kind::mul ? "*" : "/";
  // Left-associative: the right operand needs parentheses at equal precedence.
  return wrap(*e.lhs, precedence(*e.lhs) < p) + op + wrap(*e.rhs, precedence(*e.rhs) <= p);
}

bool same_expression(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::number: return a.number == b.number;
    case Expr::Kind::x:
    case Expr::Kind::y: return true;
    case Expr::Kind::symbol: return a.name == b.name && a.shift == b.shift && a.has_shift == b.has_shift;
    case Expr::Kind::neg: return same_expression(*a.lhs, *b.lhs);
    case Expr::Kind::pow: return a.exponent == b.exponent && same_expression(*a.lhs, *b.lhs);
    default: return same_expression(*a.lhs, *b.lhs) && same_expression(*a.rhs, *b.rhs);
  }
}

}  // namespace algentropy
