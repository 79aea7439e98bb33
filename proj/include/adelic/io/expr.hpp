#pragma once

// Rational-function expressions over the variables t, u, x, y, z.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'? base ('^' '-'? int)?
//   base   := int | var | '(' expr ')'
//
// t and x name the first coordinate, u and y the second; z is the
// homogenizing coordinate and evaluates to 1 in the affine chart.

#include "adelic/base/ratfunc.hpp"
#include "adelic/surface/factored.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <string>

namespace adelic {

struct Expr {
  enum class Kind { integer, var, neg, add, sub, mul, div, pow };
  Kind kind = Kind::integer;
  long long value = 0;  // integer literal, or exponent for pow
  char var = 0;
  std::shared_ptr<const Expr> lhs, rhs;

  static std::shared_ptr<const Expr> make(Kind k, std::shared_ptr<const Expr> a = nullptr,
                                          std::shared_ptr<const Expr> b = nullptr, long long v = 0, char c = 0) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    e->value = v;
    e->var = c;
    return e;
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value || a.var != b.var) return false;
    auto same = [](const std::shared_ptr<const Expr>& x, const std::shared_ptr<const Expr>& y) {
      return (!x && !y) || (x && y && *x == *y);
    };
    return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(i_, what); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (peek('+')) {
        ++i_;
        e = Expr::make(Expr::Kind::add, e, term());
      } else if (peek('-')) {
        ++i_;
        e = Expr::make(Expr::Kind::sub, e, term());
      } else {
        return e;
      }
    }
  }
  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (peek('*')) {
        ++i_;
        e = Expr::make(Expr::Kind::mul, e, factor());
      } else if (peek('/')) {
        ++i_;
        e = Expr::make(Expr::Kind::div, e, factor());
      } else {
        return e;
      }
    }
  }
  ExprPtr factor() {
    bool neg = false;
    if (peek('-')) {
      ++i_;
      neg = true;
    }
    ExprPtr b = base();
    if (peek('^')) {
      ++i_;
      skip();
      bool eneg = false;
      if (i_ < s_.size() && s_[i_] == '-') {
        eneg = true;
        ++i_;
        skip();
      }
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer exponent");
      const long long v = integer();
      b = Expr::make(Expr::Kind::pow, b, nullptr, eneg ? -v : v);
    }
    return neg ? Expr::make(Expr::Kind::neg, b) : b;
  }
  ExprPtr base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::make(Expr::Kind::integer, nullptr, nullptr, integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      std::string name;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
      if (name.size() != 1 || std::string("tuxyz").find(name[0]) == std::string::npos) {
        i_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Expr::make(Expr::Kind::var, nullptr, nullptr, 0, name[0]);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
  long long integer() {
    long long v = 0;
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > (1LL << 50)) {
        i_ = start;
        fail("integer literal too large");
      }
      v = v * 10 + (s_[i_++] - '0');
    }
    return v;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

inline int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    default: return 5;
  }
}

} // namespace detail

inline ExprPtr parse(const std::string& src) { return detail::Parser(src).parse(); }

/// Prints with the fewest parentheses that parse back to the same tree.
inline std::string to_string(const Expr& e) {
  using K = Expr::Kind;
  auto wrap = [](const Expr& x, bool paren) { return paren ? "(" + to_string(x) + ")" : to_string(x); };
  switch (e.kind) {
    case K::integer: return std::to_string(e.value);
    case K::var: return std::string(1, e.var);
    case K::neg: {
      const K c = e.lhs->kind;
      return "-" + wrap(*e.lhs, !(c == K::integer || c == K::var || c == K::pow));
    }
    case K::pow: {
      const K c = e.lhs->kind;
      return wrap(*e.lhs, !(c == K::integer || c == K::var)) + "^" + std::to_string(e.value);
    }
    case K::add:
    case K::sub:
    case K::mul:
    case K::div: {
      const int p = detail::precedence(e.kind);
      const std::string op = e.kind == K::add ? " + " : e.kind == K::sub ? " - " : e.kind == K::mul ? "*" : "/";
      const bool lp = detail::precedence(e.lhs->kind) < p && e.lhs->kind != K::neg;
      const int rp = detail::precedence(e.rhs->kind);
      // a neg on the right is a factor and needs no parentheses
      const bool rparen = e.rhs->kind != K::neg && rp <= p;
      return wrap(*e.lhs, lp) + op + wrap(*e.rhs, rparen);
    }
  }
  return "";
}

/// Univariate value in t; u and y are rejected.
inline RatFunc eval_ratfunc(const Expr& e, const FqField& k) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::integer: return RatFunc::constant(k.from_int(e.value));
    case K::var:
      if (e.var == 't' || e.var == 'x') return RatFunc(Poly::x(k));
      if (e.var == 'z') return RatFunc::constant(k.one());
      throw DomainError(std::string("variable '") + e.var + "' is not allowed in a function of one variable");
    case K::neg: return -eval_ratfunc(*e.lhs, k);
    case K::add: return eval_ratfunc(*e.lhs, k) + eval_ratfunc(*e.rhs, k);
    case K::sub: return eval_ratfunc(*e.lhs, k) - eval_ratfunc(*e.rhs, k);
    case K::mul: return eval_ratfunc(*e.lhs, k) * eval_ratfunc(*e.rhs, k);
    case K::div: {
      RatFunc d = eval_ratfunc(*e.rhs, k);
      if (d.is_zero()) throw DomainError("division by zero");
      return eval_ratfunc(*e.lhs, k) / d;
    }
    case K::pow: {
      RatFunc b = eval_ratfunc(*e.lhs, k);
      if (b.is_zero() && e.value < 0) throw DomainError("negative power of zero");
      return b.pow(e.value);
    }
  }
  return RatFunc();
}

/// Polynomial value; rejects division.
inline BiPoly eval_bipoly(const Expr& e, const FqField& k) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::integer: return BiPoly::constant(k.from_int(e.value));
    case K::var:
      if (e.var == 't' || e.var == 'x') return BiPoly::t(k);
      if (e.var == 'u' || e.var == 'y') return BiPoly::u(k);
      return BiPoly::constant(k.one());
    case K::neg: return -eval_bipoly(*e.lhs, k);
    case K::add: return eval_bipoly(*e.lhs, k) + eval_bipoly(*e.rhs, k);
    case K::sub: return eval_bipoly(*e.lhs, k) - eval_bipoly(*e.rhs, k);
    case K::mul: return eval_bipoly(*e.lhs, k) * eval_bipoly(*e.rhs, k);
    case K::pow:
      if (e.value < 0) throw DomainError("negative exponent in a polynomial");
      return eval_bipoly(*e.lhs, k).pow(static_cast<int>(e.value));
    case K::div: throw DomainError("division in a polynomial");
  }
  return BiPoly(k);
}

namespace detail {

/// Factors of a polynomial: univariate ones are split completely, others
/// are kept whole as one asserted-irreducible factor.
inline FactoredFunc factored_poly(const BiPoly& P) {
  const FqField& k = P.field();
  if (P.is_zero()) throw DomainError("the function is identically zero");
  if (P.total_degree() == 0) return FactoredFunc(P.coeff(0, 0));
  if (P.degree_u() == 0 || P.degree_t() == 0) {
    const bool in_t = P.degree_u() == 0;
    const Poly p = in_t ? Poly(k, [&] {
      std::vector<Fq> v;
      for (int i = 0; i <= P.degree_t(); ++i) v.push_back(P.coeff(i, 0));
      return v;
    }())
                        : P.coeff_t(0);
    const Factorization fz = factor(p);
    FactoredFunc r(fz.unit);
    for (const auto& [pi, m] : fz.factors) r.multiply(in_t ? BiPoly::in_t(pi) : BiPoly::in_u(pi), m);
    return r;
  }
  FactoredFunc r(k.one());
  r.multiply(P, 1);
  return r;
}

inline FactoredFunc denominator_part(const FactoredFunc& f) {
  FactoredFunc r(f.field().one());
  for (const auto& [P, e] : f.factors())
    if (e < 0) r.multiply(P, -e);
  return r;
}

/// nullopt stands for the zero function.
inline std::optional<FactoredFunc> eval_factored_opt(const Expr& e, const FqField& k) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::integer:
    case K::var: {
      const BiPoly P = eval_bipoly(e, k);
      if (P.is_zero()) return std::nullopt;
      return factored_poly(P);
    }
    case K::neg: {
      auto a = eval_factored_opt(*e.lhs, k);
      if (!a) return a;
      return FactoredFunc(-k.one()) * *a;
    }
    case K::mul: {
      auto a = eval_factored_opt(*e.lhs, k), b = eval_factored_opt(*e.rhs, k);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case K::div: {
      auto a = eval_factored_opt(*e.lhs, k), b = eval_factored_opt(*e.rhs, k);
      if (!b) throw DomainError("division by zero");
      if (!a) return std::nullopt;
      return *a * b->inverse();
    }
    case K::pow: {
      auto b = eval_factored_opt(*e.lhs, k);
      if (!b) {
        if (e.value < 0) throw DomainError("negative power of zero");
        if (e.value == 0) return FactoredFunc(k.one());
        return std::nullopt;
      }
      FactoredFunc r(b->unit().pow_signed(e.value));
      for (const auto& [P, m] : b->factors()) r.multiply(P, static_cast<int>(m * e.value));
      return r;
    }
    case K::add:
    case K::sub: {
      auto a = eval_factored_opt(*e.lhs, k), b = eval_factored_opt(*e.rhs, k);
      if (!a && !b) return std::nullopt;
      if (!a) return e.kind == K::add ? *b : FactoredFunc(-k.one()) * *b;
      if (!b) return *a;
      const FactoredFunc D = denominator_part(*a) * denominator_part(*b);
      BiPoly s = (*a * D).numerator();
      const BiPoly t = (*b * D).numerator();
      s = e.kind == K::add ? s + t : s - t;
      if (s.is_zero()) return std::nullopt;
      return factored_poly(s) * D.inverse();
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Value as a product of factors; every sum becomes a new factor.
inline FactoredFunc eval_factored(const Expr& e, const FqField& k) {
  auto r = detail::eval_factored_opt(e, k);
  if (!r) throw DomainError("the function is identically zero");
  return *r;
}

} // namespace adelic
