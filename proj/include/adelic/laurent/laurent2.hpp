#pragma once

// Iterated Laurent series in k((t2))((t1)), t1 outermost.
//
// An element is sum_{ord1 <= i < prec1} a_i(t2) t1^i + O(t1^prec1) with each
// a_i a LaurentSeries carrying its own inner precision. Outer coefficients
// that are not stored are exactly zero; a stored coefficient that is zero
// only to its inner precision is kept, since it may hide a nonzero term.

#include "adelic/laurent/series.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace adelic {

/// Rectangular exponent region [ord1, prec1) x [ord2, prec2).
struct Window {
  int ord1 = -8;
  int prec1 = 8;
  int ord2 = -8;
  int prec2 = 8;

  Window doubled() const { return {2 * ord1, 2 * prec1, 2 * ord2, 2 * prec2}; }
  bool valid() const { return ord1 < prec1 && ord2 < prec2; }
  friend bool operator==(const Window&, const Window&) = default;
};

class Laurent2 {
public:
  static constexpr int kExact = LaurentSeries::kExact;

  Laurent2() = default;
  /// coeffs[i] is the coefficient of t1^{ord1 + i}.
  Laurent2(FqField f, int ord1, std::vector<LaurentSeries> coeffs, int prec1, std::string param = "t1")
      : f_(std::move(f)), ord1_(ord1), prec1_(std::min(prec1, kExact)), c_(std::move(coeffs)),
        param_(std::move(param)) {
    if (prec1_ < ord1_) ord1_ = prec1_;
    if (static_cast<int>(c_.size()) > prec1_ - ord1_) c_.resize(prec1_ - ord1_);
    normalize();
  }

  static Laurent2 zero(const FqField& f, int prec1, std::string param = "t1") {
    return Laurent2(f, prec1, {}, prec1, std::move(param));
  }
  /// c * t1^i * t2^j, exact.
  static Laurent2 monomial(const Fq& c, int i, int j, std::string param = "t1") {
    return Laurent2(c.field(), i, {LaurentSeries::monomial(c, j, kExact)}, kExact, std::move(param));
  }
  /// Embeds a series of k((t2)) as a constant in t1.
  static Laurent2 constant(const LaurentSeries& s, std::string param = "t1") {
    return Laurent2(s.field(), 0, {s}, kExact, std::move(param));
  }

  const FqField& field() const { return f_; }
  const std::string& param() const { return param_; }
  Laurent2 with_param(std::string p) const {
    Laurent2 r = *this;
    r.param_ = std::move(p);
    return r;
  }
  int prec1() const { return prec1_; }
  int lower_bound1() const { return ord1_; }
  bool is_exact() const { return prec1_ >= kExact; }
  /// True when every certified coefficient vanishes.
  bool is_zero_on_window() const {
    for (const auto& c : c_)
      if (c.is_known_nonzero()) return false;
    return true;
  }
  bool is_known_nonzero() const { return !c_.empty() && c_[0].is_known_nonzero(); }
  const std::vector<LaurentSeries>& coeffs() const { return c_; }

  /// Coefficient of t1^i.
  LaurentSeries coeff(int i) const {
    if (i >= prec1_) throw PrecisionError("outer coefficient t1^" + std::to_string(i) + " beyond precision " + std::to_string(prec1_));
    if (i < ord1_ || i - ord1_ >= static_cast<int>(c_.size())) return LaurentSeries::zero(f_, kExact);
    return c_[i - ord1_];
  }
  /// Outer valuation nu_1.
  int valuation1() const {
    if (!is_known_nonzero())
      throw IndeterminateError("leading outer coefficient of t1^" + std::to_string(ord1_) + " is not certified");
    return ord1_;
  }
  /// Leading inner series a_{nu_1}(t2).
  const LaurentSeries& leading() const {
    if (!is_known_nonzero()) throw IndeterminateError("leading outer coefficient is not certified");
    return c_[0];
  }

  /// Caller certifies that the first n stored outer coefficients are
  /// exactly zero (e.g. a branch equation vanishing on its own germ).
  Laurent2 drop_leading(int n) const {
    std::vector<LaurentSeries> v(c_.begin() + std::min<std::size_t>(n, c_.size()), c_.end());
    return Laurent2(f_, ord1_ + n, std::move(v), prec1_, param_);
  }

  Laurent2 truncated(int prec1, int prec2) const {
    std::vector<LaurentSeries> v;
    for (int i = ord1_; i < std::min(prec1, ord1_ + static_cast<int>(c_.size())); ++i)
      v.push_back(c_[i - ord1_].truncated(prec2));
    return Laurent2(f_, std::min(ord1_, prec1), std::move(v), std::min(prec1, prec1_), param_);
  }
  Laurent2 truncated(const Window& w) const { return truncated(w.prec1, w.prec2); }

  /// Multiplication by t1^k.
  Laurent2 shifted(int k) const {
    return Laurent2(f_, ord1_ + k, c_, is_exact() ? prec1_ : prec1_ + k, param_);
  }
  Laurent2 lift_to(const FqField& ext) const {
    std::vector<LaurentSeries> v;
    for (const auto& c : c_) v.push_back(c.lift_to(ext));
    return Laurent2(ext, ord1_, std::move(v), prec1_, param_);
  }
  Laurent2 scaled(const Fq& s) const {
    std::vector<LaurentSeries> v;
    for (const auto& c : c_) v.push_back(c.scaled(s));
    return Laurent2(f_, ord1_, std::move(v), prec1_, param_);
  }

  Laurent2 operator-() const { return scaled(-f_.one()); }
  friend Laurent2 operator+(const Laurent2& a, const Laurent2& b) { return add(a, b, false); }
  friend Laurent2 operator-(const Laurent2& a, const Laurent2& b) { return add(a, b, true); }

  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    check_param(a, b);
    const int prec = std::min({a.ord1_ + b.prec1_, b.ord1_ + a.prec1_, kExact});
    if (a.c_.empty() || b.c_.empty()) return zero(a.f_, prec, a.param_);
    const int ord = a.ord1_ + b.ord1_;
    const int len = static_cast<int>(std::min<long>(prec - ord, static_cast<long>(a.c_.size() + b.c_.size() - 1)));
    std::vector<LaurentSeries> r(std::max(0, len), LaurentSeries::zero(a.f_, kExact));
    for (int i = 0; i < len && i < static_cast<int>(a.c_.size()); ++i)
      for (int j = 0; i + j < len && j < static_cast<int>(b.c_.size()); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Laurent2(a.f_, ord, std::move(r), prec, a.param_);
  }

  /// Inverts the leading inner coefficient in k((t2)), then runs the
  /// geometric series in t1.
  Laurent2 inverse() const {
    if (!is_known_nonzero()) throw IndeterminateError("inverse: leading outer coefficient of t1^" + std::to_string(ord1_) + " is not certified");
    const LaurentSeries inv0 = c_[0].inverse();
    if (c_.size() == 1) return Laurent2(f_, -ord1_, {inv0}, is_exact() ? kExact : -ord1_ + (prec1_ - ord1_), param_);
    const int len = prec1_ - ord1_;
    if (len > LaurentSeries::kMaxExpansion) throw PrecisionError("inverse of an outer-exact element needs a finite t1 precision");
    std::vector<LaurentSeries> b;
    b.reserve(len);
    b.push_back(inv0);
    const int stored = static_cast<int>(c_.size());
    for (int k = 1; k < len; ++k) {
      LaurentSeries s = LaurentSeries::zero(f_, kExact);
      for (int i = 1; i <= k && i < stored; ++i) s = s + c_[i] * b[k - i];
      b.push_back(-(s * inv0));
    }
    return Laurent2(f_, -ord1_, std::move(b), -ord1_ + len, param_);
  }
  friend Laurent2 operator/(const Laurent2& a, const Laurent2& b) { return a * b.inverse(); }

  Laurent2 pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) {
      if (!is_known_nonzero()) throw IndeterminateError("zeroth power of an uncertified element");
      return Laurent2(f_, 0, {LaurentSeries(f_, 0, {f_.one()}, c_[0].relative_precision())},
                      is_exact() ? kExact : prec1_ - ord1_, param_);
    }
    Laurent2 r;
    bool have = false;
    Laurent2 b = *this;
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

  /// Coefficient agreement wherever both sides are certified.
  bool agrees_with(const Laurent2& o) const {
    int lo = INT_MAX, top = INT_MIN;
    for (const Laurent2* s : {this, &o}) {
      if (s->c_.empty()) continue;
      lo = std::min(lo, s->ord1_);
      top = std::max(top, s->ord1_ + static_cast<int>(s->c_.size()));
    }
    const int hi = std::min({prec1_, o.prec1_, top});
    for (int i = lo; i < hi; ++i)
      if (!coeff(i).agrees_with(o.coeff(i))) return false;
    return true;
  }

  std::string to_string(const std::string& outer = "t", const std::string& inner = "u") const {
    std::string s;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
      const LaurentSeries& a = c_[i];
      if (a.is_zero_to_precision() && a.is_exact()) continue;
      const int n = ord1_ + i;
      std::string term = "(" + a.to_string(inner) + ")";
      if (n != 0) term += "*" + outer + (n == 1 ? "" : "^" + std::to_string(n));
      if (!s.empty()) s += " + ";
      s += term;
    }
    if (is_exact()) return s.empty() ? "0" : s;
    if (!s.empty()) s += " + ";
    return s + "O(" + outer + "^" + std::to_string(prec1_) + ")";
  }

private:
  static void check_param(const Laurent2& a, const Laurent2& b) {
    if (a.param_ != b.param_)
      throw DomainError("mixing expansions in different outer parameters: " + a.param_ + " vs " + b.param_);
  }

  static Laurent2 add(const Laurent2& a, const Laurent2& b, bool negate) {
    check_param(a, b);
    const int prec = std::min(a.prec1_, b.prec1_);
    if (b.c_.empty()) return a.truncated(prec, kExact);
    if (a.c_.empty()) return negate ? (-b).truncated(prec, kExact) : b.truncated(prec, kExact);
    const int ord = std::min(a.ord1_, b.ord1_);
    const int end = std::min(prec, std::max(a.ord1_ + static_cast<int>(a.c_.size()), b.ord1_ + static_cast<int>(b.c_.size())));
    std::vector<LaurentSeries> r;
    for (int i = ord; i < end; ++i) r.push_back(negate ? a.coeff(i) - b.coeff(i) : a.coeff(i) + b.coeff(i));
    return Laurent2(a.f_, std::min(ord, prec), std::move(r), prec, a.param_);
  }

  static bool exact_zero(const LaurentSeries& s) { return s.is_zero_to_precision() && s.is_exact(); }

  void normalize() {
    while (!c_.empty() && exact_zero(c_.back())) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && exact_zero(c_[k])) ++k;
    if (k == c_.size()) {
      c_.clear();
      ord1_ = prec1_;
      return;
    }
    if (k) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    ord1_ += static_cast<int>(k);
  }

  FqField f_;
  int ord1_ = 0;
  int prec1_ = 0;
  std::vector<LaurentSeries> c_;
  std::string param_ = "t1";
};

} // namespace adelic
