#pragma once

#include "adelic/base/poly.hpp"

#include <string>
#include <vector>

namespace adelic {

/// Polynomial in (t, u), stored as a polynomial in t whose coefficients are
/// polynomials in u. t is the outer variable throughout the library.
class BiPoly {
public:
  BiPoly() = default;
  explicit BiPoly(FqField f) : f_(std::move(f)) {}
  BiPoly(FqField f, std::vector<Poly> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

  static BiPoly constant(const Fq& c) { return BiPoly(c.field(), {Poly::constant(c)}); }
  static BiPoly t(const FqField& f) { return BiPoly(f, {Poly(f), Poly::constant(f.one())}); }
  static BiPoly u(const FqField& f) { return BiPoly(f, {Poly::x(f)}); }
  static BiPoly in_t(const Poly& p) {
    std::vector<Poly> v;
    for (const auto& c : p.coeffs()) v.push_back(Poly::constant(c));
    return BiPoly(p.field(), std::move(v));
  }
  static BiPoly in_u(const Poly& p) { return BiPoly(p.field(), {p}); }
  /// c * t^i * u^j
  static BiPoly monomial(const Fq& c, int i, int j) {
    std::vector<Poly> v(i + 1, Poly(c.field()));
    v[i] = Poly::monomial(c, j);
    return BiPoly(c.field(), std::move(v));
  }

  const FqField& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree in t.
  int degree_t() const { return static_cast<int>(c_.size()) - 1; }
  int degree_u() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
      if (!c_[i].is_zero()) d = std::max(d, i + c_[i].degree());
    return d;
  }
  /// Coefficient of t^i, a polynomial in u.
  Poly coeff_t(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Poly(f_); }
  Fq coeff(int i, int j) const { return coeff_t(i).coeff(j); }
  const std::vector<Poly>& t_coeffs() const { return c_; }

  /// Exchanges the roles of t and u.
  BiPoly swapped() const {
    int du = degree_u();
    std::vector<Poly> v;
    for (int j = 0; j <= du; ++j) {
      std::vector<Fq> col;
      for (int i = 0; i <= degree_t(); ++i) col.push_back(coeff(i, j));
      v.emplace_back(f_, std::move(col));
    }
    return BiPoly(f_, std::move(v));
  }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) { return *this += -o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly(a.f_);
    std::vector<Poly> r(a.c_.size() + b.c_.size() - 1, Poly(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return BiPoly(a.f_, std::move(r));
  }
  friend BiPoly operator*(BiPoly a, const Fq& s) {
    for (auto& c : a.c_) c = c * s;
    a.trim();
    return a;
  }
  BiPoly pow(int e) const {
    BiPoly r = BiPoly::constant(f_.one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Fq eval(const Fq& a, const Fq& b) const {
    Fq r = a.field().zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + it->eval(b);
    return r;
  }

  /// F(X, Y) for bivariate X, Y.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const {
    BiPoly r(X.f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      BiPoly inner(X.f_);
      const auto& cc = it->coeffs();
      for (auto jt = cc.rbegin(); jt != cc.rend(); ++jt) inner = inner * Y + BiPoly::constant(X.f_.embed(*jt));
      r = r * X + inner;
    }
    return r;
  }
  /// F(t + a, u + b).
  BiPoly translate(const Fq& a, const Fq& b) const {
    return substitute(t(f_) + constant(a), u(f_) + constant(b));
  }

  BiPoly d_dt() const {
    std::vector<Poly> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * f_.from_int(static_cast<std::int64_t>(i)));
    return BiPoly(f_, std::move(v));
  }
  BiPoly d_du() const {
    std::vector<Poly> v;
    for (const auto& c : c_) v.push_back(c.derivative());
    return BiPoly(f_, std::move(v));
  }

  /// Sum of the terms of total degree m.
  BiPoly homogeneous_part(int m) const {
    BiPoly r(f_);
    for (int i = 0; i <= std::min(m, degree_t()); ++i) {
      Fq c = coeff(i, m - i);
      if (!c.is_zero()) r += monomial(c, i, m - i);
    }
    return r;
  }
  /// Lowest total degree present (multiplicity at the origin).
  int order_at_origin() const {
    for (int m = 0; m <= total_degree(); ++m)
      if (!homogeneous_part(m).is_zero()) return m;
    return -1;
  }

  BiPoly lift_to(const FqField& ext) const {
    std::vector<Poly> v;
    for (const auto& c : c_) v.push_back(c.lift_to(ext));
    return BiPoly(ext, std::move(v));
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  std::string to_string(const std::string& tv = "t", const std::string& uv = "u") const {
    if (is_zero()) return "0";
    std::string s;
    for (int tot = total_degree(); tot >= 0; --tot) {
      for (int i = std::min(tot, degree_t()); i >= 0; --i) {
        Fq c = coeff(i, tot - i);
        if (c.is_zero()) continue;
        int j = tot - i;
        std::string mono;
        auto add = [&](const std::string& v, int e) {
          if (e == 0) return;
          if (!mono.empty()) mono += "*";
          mono += e == 1 ? v : v + "^" + std::to_string(e);
        };
        add(tv, i);
        add(uv, j);
        std::string cs = c.to_string();
        bool compound = cs.find('+') != std::string::npos;
        std::string term;
        if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
        else if (c.is_one()) term = mono;
        else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!s.empty()) s += " + ";
        s += term;
      }
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FqField f_;
  std::vector<Poly> c_;
};

} // namespace adelic
