#pragma once

// Laurent series in one variable with an explicit precision bound.
//
// A LaurentSeries stands for  sum_{ord <= n < prec} c_n t^n + O(t^prec):
// coefficients at exponents >= prec are unknown, not zero. Arithmetic
// returns the tightest precision that the inputs certify. Trailing zero
// coefficients below prec are not stored; prec == kExact marks a series
// known exactly (a Laurent polynomial).

#include "adelic/base/poly.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

namespace adelic {

class LaurentSeries {
public:
  static constexpr int kExact = INT_MAX / 8;
  static constexpr int kMaxExpansion = 1 << 16;

  LaurentSeries() = default;

  /// Coefficients for t^ord, t^{ord+1}, ...; missing entries below prec are
  /// known zeros, entries at or beyond prec are dropped.
  LaurentSeries(FqField f, int ord, std::vector<Fq> coeffs, int prec)
      : f_(std::move(f)), ord_(ord), prec_(std::min(prec, kExact)) {
    if (prec_ < ord_) ord_ = prec_;
    const int len = prec_ - ord_;
    if (static_cast<int>(coeffs.size()) > len) coeffs.resize(len);
    c_ = std::move(coeffs);
    normalize();
  }

  static LaurentSeries zero(const FqField& f, int prec) { return LaurentSeries(f, prec, {}, prec); }
  static LaurentSeries monomial(const Fq& c, int n, int prec) {
    return LaurentSeries(c.field(), n, {c}, prec);
  }
  static LaurentSeries from_poly(const Poly& p, int prec = kExact) {
    return LaurentSeries(p.field(), 0, p.coeffs(), prec);
  }
  bool is_exact() const { return prec_ >= kExact; }

  const FqField& field() const { return f_; }
  int prec() const { return prec_; }
  /// Lowest exponent that can be nonzero; equals prec() for a series that
  /// is zero to its precision.
  int lower_bound() const { return ord_; }
  bool is_zero_to_precision() const { return c_.empty(); }
  bool is_known_nonzero() const { return !c_.empty(); }
  int relative_precision() const { return prec_ - ord_; }

  int valuation() const {
    if (c_.empty()) throw IndeterminateError("series is zero to precision O(t^" + std::to_string(prec_) + ")");
    return ord_;
  }
  Fq lead() const {
    if (c_.empty()) throw IndeterminateError("series is zero to precision O(t^" + std::to_string(prec_) + ")");
    return c_[0];
  }
  Fq coeff(int n) const {
    if (n >= prec_) throw PrecisionError("coefficient of t^" + std::to_string(n) + " beyond precision " + std::to_string(prec_));
    if (n < ord_ || n - ord_ >= static_cast<int>(c_.size())) return f_.zero();
    return c_[n - ord_];
  }
  /// Stored coefficients, starting at the valuation; later ones below prec are zero.
  const std::vector<Fq>& coeffs() const { return c_; }

  LaurentSeries truncated(int prec) const {
    if (prec >= prec_) return *this;
    std::vector<Fq> v;
    for (int n = ord_; n < prec && n - ord_ < static_cast<int>(c_.size()); ++n) v.push_back(c_[n - ord_]);
    return LaurentSeries(f_, std::min(ord_, prec), std::move(v), prec);
  }
  /// Multiplication by t^k.
  LaurentSeries shifted(int k) const {
    LaurentSeries r = *this;
    r.ord_ += k;
    if (!r.is_exact()) r.prec_ += k;
    if (r.c_.empty()) r.ord_ = r.prec_;
    return r;
  }
  LaurentSeries lift_to(const FqField& ext) const {
    std::vector<Fq> v;
    for (const auto& c : c_) v.push_back(ext.embed(c));
    return LaurentSeries(ext, ord_, std::move(v), prec_);
  }
  /// Multiplication by a scalar of the coefficient field.
  LaurentSeries scaled(const Fq& s) const {
    std::vector<Fq> v = c_;
    for (auto& c : v) c *= s;
    return LaurentSeries(f_, ord_, std::move(v), prec_);
  }

  LaurentSeries operator-() const { return scaled(-f_.one()); }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    return add(a, b, false);
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return add(a, b, true);
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int prec = std::min({a.ord_ + b.prec_, b.ord_ + a.prec_, kExact});
    if (a.c_.empty() || b.c_.empty()) return zero(a.f_, prec);
    const int ord = a.ord_ + b.ord_;
    const int len = std::min<long>(prec - ord, static_cast<long>(a.c_.size() + b.c_.size()));
    std::vector<Fq> r(std::max(0, len), a.f_.zero());
    for (int i = 0; i < len && i < static_cast<int>(a.c_.size()); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j < len && j < static_cast<int>(b.c_.size()); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries(a.f_, ord, std::move(r), prec);
  }

  LaurentSeries inverse() const {
    if (c_.empty()) throw IndeterminateError("inverse of a series that is zero to precision O(t^" + std::to_string(prec_) + ")");
    if (c_.size() == 1) return LaurentSeries(f_, -ord_, {c_[0].inverse()}, -ord_ + relative_precision());
    const int len = prec_ - ord_;
    if (len > kMaxExpansion) throw PrecisionError("inverse of an exact series needs a finite precision; truncate first");
    std::vector<Fq> b(len, f_.zero());
    Fq inv0 = c_[0].inverse();
    b[0] = inv0;
    const int stored = static_cast<int>(c_.size());
    for (int k = 1; k < len; ++k) {
      Fq s = f_.zero();
      for (int i = 1; i <= k && i < stored; ++i) s += c_[i] * b[k - i];
      b[k] = -(s * inv0);
    }
    return LaurentSeries(f_, -ord_, std::move(b), -ord_ + len);
  }
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.inverse();
  }

  LaurentSeries pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) {
      if (c_.empty()) throw IndeterminateError("zeroth power of an unknown series");
      return LaurentSeries(f_, 0, {f_.one()}, relative_precision());
    }
    LaurentSeries r;
    bool have = false;
    LaurentSeries b = *this;
    while (e) {
      if (e & 1) {
        r = have ? r * b : b;
        have = true;
      }
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  /// Same precision, valuation and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.prec_ != b.prec_ || a.ord_ != b.ord_ || a.c_.size() != b.c_.size()) return false;
    if (a.c_.empty()) return a.f_ == b.f_;
    if (!(a.f_ == b.f_)) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  /// Agreement on the exponents both series certify.
  bool agrees_with(const LaurentSeries& o) const {
    int lo = INT_MAX, hi = INT_MIN;
    for (const LaurentSeries* s : {this, &o}) {
      if (s->c_.empty()) continue;
      lo = std::min(lo, s->ord_);
      hi = std::max(hi, s->ord_ + static_cast<int>(s->c_.size()));
    }
    const int p = std::min({prec_, o.prec_, hi});
    for (int n = lo; n < p; ++n)
      if (!(coeff(n) == o.coeff(n))) return false;
    return true;
  }

  std::string to_string(const std::string& var = "t") const {
    std::string s;
    for (int n = ord_; n - ord_ < static_cast<int>(c_.size()); ++n) {
      const Fq& c = c_[n - ord_];
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool compound = cs.find('+') != std::string::npos;
      std::string mono = n == 0 ? "" : (n == 1 ? var : var + "^" + std::to_string(n));
      std::string term;
      if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
      else if (c.is_one()) term = mono;
      else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
      if (!s.empty()) s += " + ";
      s += term;
    }
    if (is_exact()) return s.empty() ? "0" : s;
    if (!s.empty()) s += " + ";
    return s + "O(" + var + "^" + std::to_string(prec_) + ")";
  }

private:
  static LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b, bool negate) {
    const int prec = std::min(a.prec_, b.prec_);
    if (b.c_.empty()) return a.truncated(prec);
    if (a.c_.empty()) return negate ? (-b).truncated(prec) : b.truncated(prec);
    const int ord = std::min(a.ord_, b.ord_);
    const int end = std::min(prec, std::max(a.ord_ + static_cast<int>(a.c_.size()), b.ord_ + static_cast<int>(b.c_.size())));
    std::vector<Fq> r;
    for (int n = ord; n < end; ++n) {
      Fq x = a.coeff(n);
      Fq y = b.coeff(n);
      r.push_back(negate ? x - y : x + y);
    }
    return LaurentSeries(a.f_, std::min(ord, prec), std::move(r), prec);
  }

  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k == c_.size()) {
      c_.clear();
      ord_ = prec_;
      return;
    }
    if (k) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    ord_ += static_cast<int>(k);
  }

  FqField f_;
  int ord_ = 0;
  std::vector<Fq> c_;
  int prec_ = 0;
};

/// p(s) for a polynomial p over a subfield of the series' field.
inline LaurentSeries evaluate(const Poly& p, const LaurentSeries& s) {
  const FqField& f = s.field();
  LaurentSeries r = LaurentSeries::zero(f, LaurentSeries::kExact);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    r = r * s + LaurentSeries::monomial(f.embed(*it), 0, LaurentSeries::kExact);
  return r;
}

} // namespace adelic
