#pragma once

#include "adelic/base/bipoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace adelic {

/// Leading coefficient in (t-degree, then u-degree) order.
inline Fq bipoly_lead(const BiPoly& p) { return p.coeff_t(p.degree_t()).lead(); }
inline BiPoly bipoly_normalized(const BiPoly& p) { return p * bipoly_lead(p).inverse(); }

/// True when P vanishes on the line a*t + b*u + c = 0.
inline bool vanishes_on_line(const BiPoly& P, const Fq& a, const Fq& b, const Fq& c) {
  const FqField& k = P.field();
  // parametrize by s
  BiPoly s = BiPoly::t(k);
  BiPoly X(k), Y(k);
  if (!b.is_zero()) {
    X = s;
    Y = (s * (-a) + BiPoly::constant(-c)) * b.inverse();
  } else {
    X = BiPoly::constant(-c / a);
    Y = s;
  }
  return P.substitute(X, Y).is_zero();
}

/// Nonzero rational function on A^2 given as c * prod P_i^{e_i}, with the
/// P_i normalized, pairwise distinct and asserted irreducible by the caller.
class FactoredFunc {
public:
  FactoredFunc() = default;
  explicit FactoredFunc(const Fq& unit) : unit_(unit) {
    if (unit.is_zero()) throw DomainError("factored function with zero constant");
  }
  FactoredFunc(const Fq& unit, const std::vector<std::pair<BiPoly, int>>& factors) : FactoredFunc(unit) {
    for (const auto& [p, e] : factors) multiply(p, e);
  }

  /// Multiplies by P^e; constants fold into the unit.
  void multiply(const BiPoly& P, int e) {
    if (P.is_zero()) throw DomainError("factored function with a zero factor");
    if (e == 0) return;
    if (P.total_degree() == 0) {
      unit_ *= P.coeff(0, 0).pow_signed(e);
      return;
    }
    const Fq lc = bipoly_lead(P);
    unit_ *= lc.pow_signed(e);
    const BiPoly Q = P * lc.inverse();
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      if (it->first == Q) {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
        return;
      }
    }
    factors_.emplace_back(Q, e);
  }

  const Fq& unit() const { return unit_; }
  const FqField& field() const { return unit_.field(); }
  const std::vector<std::pair<BiPoly, int>>& factors() const { return factors_; }

  friend FactoredFunc operator*(FactoredFunc a, const FactoredFunc& b) {
    a.unit_ *= b.unit_;
    for (const auto& [p, e] : b.factors_) a.multiply(p, e);
    return a;
  }
  FactoredFunc inverse() const {
    FactoredFunc r(unit_.inverse());
    for (const auto& [p, e] : factors_) r.factors_.emplace_back(p, -e);
    return r;
  }

  BiPoly numerator() const {
    BiPoly r = BiPoly::constant(unit_);
    for (const auto& [p, e] : factors_)
      if (e > 0) r = r * p.pow(e);
    return r;
  }
  BiPoly denominator() const {
    BiPoly r = BiPoly::constant(unit_.field().one());
    for (const auto& [p, e] : factors_)
      if (e < 0) r = r * p.pow(-e);
    return r;
  }

  /// Rejects factors of degree >= 2 that contain a k-rational line. Only
  /// run for small fields, where the line search is cheap.
  void spot_check(std::uint64_t max_order = 49) const {
    const FqField& k = field();
    if (k.order() > max_order) return;
    const auto elems = k.elements();
    for (const auto& [P, e] : factors_) {
      if (P.total_degree() < 2) continue;
      for (const auto& c : elems) {
        if (vanishes_on_line(P, k.one(), k.zero(), c)) throw DomainError("factor " + P.to_string() + " is reducible");
        for (const auto& a : elems)
          if (vanishes_on_line(P, a, k.one(), c)) throw DomainError("factor " + P.to_string() + " is reducible");
      }
    }
  }

  std::string to_string(const std::string& tv = "t", const std::string& uv = "u") const {
    std::string s = unit_.to_string();
    if (unit_.to_string().find('+') != std::string::npos) s = "(" + s + ")";
    for (const auto& [p, e] : factors_) {
      s += "*(" + p.to_string(tv, uv) + ")";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

private:
  Fq unit_;
  std::vector<std::pair<BiPoly, int>> factors_;
};

} // namespace adelic
