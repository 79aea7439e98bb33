#pragma once

#include "adelic/base/ratfunc.hpp"

#include <map>
#include <optional>
#include <string>

namespace adelic {

/// Closed point of P^1 over F_q: a monic irreducible pi(t), or infinity.
class ClosedPoint {
public:
  static ClosedPoint infinity(const FqField& base) {
    ClosedPoint p;
    p.base_ = base;
    p.residue_ = base;
    p.theta_ = base.zero();
    return p;
  }
  /// Validates that pi is monic irreducible and builds k(p) = F_q[theta]/pi.
  static ClosedPoint finite(const Poly& pi) {
    if (!pi.is_monic() || pi.degree() < 1) throw DomainError("closed point needs a monic polynomial of positive degree");
    if (!is_irreducible(pi)) throw DomainError("closed point modulus " + pi.to_string() + " is reducible");
    ClosedPoint p;
    p.base_ = pi.field();
    p.pi_ = pi;
    p.residue_ = extend_by(pi);
    p.theta_ = pi.degree() == 1 ? -pi.coeff(0) : p.residue_.generator();
    return p;
  }
  /// The rational point t = a.
  static ClosedPoint rational(const Fq& a) { return finite(Poly(a.field(), {-a, a.field().one()})); }

  bool is_infinity() const { return !pi_.has_value(); }
  const Poly& modulus() const { return *pi_; }
  int degree() const { return pi_ ? pi_->degree() : 1; }
  const FqField& base_field() const { return base_; }
  /// k(p); the base field for rational points and infinity.
  const FqField& residue_field() const { return residue_; }
  /// Image of t in k(p) (finite points only).
  const Fq& theta() const { return theta_; }

  /// Order of vanishing of a nonzero rational function.
  int order_of(const RatFunc& f) const {
    if (f.is_zero()) throw DomainError("order of the zero function");
    if (!pi_) return f.den().degree() - f.num().degree();
    return multiplicity(f.num(), *pi_) - multiplicity(f.den(), *pi_);
  }

  std::string to_string(const std::string& var = "t") const {
    return pi_ ? "(" + pi_->to_string(var) + ")" : "inf";
  }

  /// Finite points by canonical_less of the modulus; infinity last.
  friend bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return canonical_less(*a.pi_, *b.pi_);
  }
  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return false;
    return a.is_infinity() ? a.base_ == b.base_ : *a.pi_ == *b.pi_;
  }

private:
  FqField base_;
  std::optional<Poly> pi_;
  FqField residue_;
  Fq theta_;
};

/// Finitely supported formal sum of closed points of P^1.
class Divisor {
public:
  Divisor() = default;
  explicit Divisor(FqField base) : base_(std::move(base)) {}

  const FqField& base_field() const { return base_; }
  void add(const ClosedPoint& p, int mult) {
    auto& m = terms_[p];
    m += mult;
    if (m == 0) terms_.erase(p);
  }
  int mult(const ClosedPoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }
  const std::map<ClosedPoint, int>& terms() const { return terms_; }
  int degree() const {
    int d = 0;
    for (const auto& [p, m] : terms_) d += m * p.degree();
    return d;
  }
  int max_abs_mult() const {
    int d = 0;
    for (const auto& [p, m] : terms_) d = std::max(d, std::abs(m));
    return d;
  }
  bool empty() const { return terms_.empty(); }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, m] : b.terms_) a.add(p, m);
    return a;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, m] : terms_) {
      if (!s.empty()) s += m < 0 ? " - " : " + ";
      else if (m < 0) s += "-";
      s += std::to_string(std::abs(m)) + "*" + p.to_string();
    }
    return s;
  }

private:
  FqField base_;
  std::map<ClosedPoint, int> terms_;
};

/// div(f) on P^1 over the base field.
inline Divisor divisor_of(const RatFunc& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw DomainError("divisor of the zero function");
  Divisor d(f.field());
  for (const auto& [pi, m] : factor(f.num(), rng).factors) d.add(ClosedPoint::finite(pi), m);
  for (const auto& [pi, m] : factor(f.den(), rng).factors) d.add(ClosedPoint::finite(pi), -m);
  const int at_inf = f.den().degree() - f.num().degree();
  if (at_inf) d.add(ClosedPoint::infinity(f.field()), at_inf);
  return d;
}

inline Divisor divisor_of(const RatFunc& f) {
  std::mt19937_64 rng(0x5eed);
  return divisor_of(f, rng);
}

} // namespace adelic
