#pragma once

#include "adelic/base/poly.hpp"

namespace adelic {

/// Element of F_q(t) in canonical form: gcd(num, den) = 1, den monic.
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field().one())) {}
  RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    Poly g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    Fq l = den_.lead().inverse();
    num_ = num_ * l;
    den_ = den_ * l;
  }

  static RatFunc constant(const Fq& c) { return RatFunc(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FqField& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc pow(std::int64_t e) const {
    if (e >= 0) return RatFunc(num_.pow(e), den_.pow(e));
    if (is_zero()) throw DomainError("negative power of zero");
    return RatFunc(den_.pow(-e), num_.pow(-e));
  }

  /// Structural equality; valid because the form is canonical.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t") const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

private:
  Poly num_;
  Poly den_;
};

} // namespace adelic
