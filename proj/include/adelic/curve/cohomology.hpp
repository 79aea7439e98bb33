#pragma once

// H^0, H^1 of O(D) on P^1 from window-truncated two-term complexes.

#include "adelic/curve/subspace.hpp"
#include "adelic/curve/weil.hpp"

#include <cstdlib>
#include <set>

namespace adelic {

struct H01 {
  int h0 = 0;
  int h1 = 0;
  int window = 0;  // pole bound actually used
  bool stable = false;

  friend bool operator==(const H01& a, const H01& b) { return a.h0 == b.h0 && a.h1 == b.h1; }
};

namespace detail {

/// Coordinates of c in k(p) over the base field k.
inline std::vector<Fq> over_base(const Fq& c, const FqField& k) {
  if (c.field() == k) return {c};
  std::vector<Fq> v;
  for (int j = 0; j < c.field().degree(); ++j) v.push_back(c.component(j));
  return v;
}

/// One target block: the image of f in u^lo O_p / u^hi O_p at a point.
struct Block {
  ClosedPoint point;
  int lo = 0;
  int hi = 0;
  int offset = 0;
  LaurentSeries tau;  // cached expansion of t (finite points)

  int size() const { return std::max(hi - lo, 0) * point.degree(); }

  void scatter(const RatFunc& f, SparseVec& v, const FqField& k) const {
    if (hi <= lo) return;
    const int ord = point.order_of(f);
    if (ord >= hi) return;
    const int rel = hi - ord;
    const LaurentSeries s = expand_ratfunc_at_point(f, point, rel, point.is_infinity() ? nullptr : &tau);
    const int e = point.degree();
    for (int n = std::max(lo, ord); n < hi; ++n) {
      const Fq c = s.coeff(n);
      if (c.is_zero()) continue;
      const auto comps = over_base(c, k);
      for (int j = 0; j < static_cast<int>(comps.size()); ++j)
        if (!comps[j].is_zero()) v.emplace(offset + (n - lo) * e + j, comps[j]);
    }
  }
};

inline Block make_block(const ClosedPoint& p, int lo, int hi, int offset) {
  Block b{p, lo, hi, offset, {}};
  if (!p.is_infinity() && hi > lo) b.tau = newton_expand(p.modulus(), hi - lo + 2).tau;
  return b;
}

/// dim ker and dim coker of span(funcs) -> blocks.
inline H01 two_term(const std::vector<RatFunc>& funcs, const std::vector<Block>& blocks, const FqField& k) {
  SubspaceBasis image(k);
  for (const auto& f : funcs) {
    SparseVec v;
    for (const auto& b : blocks) b.scatter(f, v, k);
    image.insert(std::move(v));
  }
  int target = 0;
  for (const auto& b : blocks) target += b.size();
  H01 r;
  r.h0 = static_cast<int>(funcs.size()) - image.dim();
  r.h1 = target - image.dim();
  return r;
}

/// Product of pi_q^{-D_q} over finite q (skipping `skip`).
inline RatFunc divisor_denominator(const Divisor& D, const ClosedPoint* skip) {
  RatFunc h = RatFunc::constant(D.base_field().one());
  for (const auto& [q, m] : D.terms()) {
    if (q.is_infinity() || (skip && q == *skip)) continue;
    h = h * RatFunc(q.modulus()).pow(-m);
  }
  return h;
}

inline int auto_bound(const Divisor& D) { return D.max_abs_mult() + std::abs(D.degree()) + 2; }

template <class F>
H01 stabilized(F compute, int L) {
  H01 a = compute(L);
  H01 b = compute(2 * L);
  if (!(a == b))
    throw WindowUnstableError("(" + std::to_string(a.h0) + "," + std::to_string(a.h1) + ") at bound " + std::to_string(L) +
                              " vs (" + std::to_string(b.h0) + "," + std::to_string(b.h1) + ") at " + std::to_string(2 * L));
  a.window = L;
  a.stable = true;
  return a;
}

} // namespace detail

/// Adelic complex on S = supp D + {inf}: L(D + L*S) -> prod_p u^{-E_p}O / u^{-D_p}O.
inline H01 adelic_h01(const Divisor& D, int window = 0) {
  const FqField& k = D.base_field();
  auto compute = [&](int L) {
    std::set<ClosedPoint> S;
    for (const auto& [p, m] : D.terms()) S.insert(p);
    S.insert(ClosedPoint::infinity(k));
    Poly h = Poly::constant(k.one());
    int degE = 0;
    std::vector<detail::Block> blocks;
    int offset = 0;
    for (const auto& p : S) {
      const int Ep = D.mult(p) + L;
      degE += Ep * p.degree();
      if (!p.is_infinity()) h = h * p.modulus().pow(static_cast<std::uint64_t>(Ep));
      blocks.push_back(detail::make_block(p, -Ep, -D.mult(p), offset));
      offset += blocks.back().size();
    }
    std::vector<RatFunc> funcs;
    for (int i = 0; i <= degE; ++i) funcs.emplace_back(Poly::monomial(k.one(), i), h);
    return detail::two_term(funcs, blocks, k);
  };
  return detail::stabilized(compute, std::max(window, detail::auto_bound(D)));
}

/// Restricted complex: Gamma(P^1 - p, O(D)) + u^{-D_p}O_p -> K_p, with
/// poles at p bounded by the window.
inline H01 restricted_h01(const Divisor& D, const ClosedPoint& p, int window = 0) {
  const FqField& k = D.base_field();
  auto compute = [&](int L) {
    std::vector<RatFunc> funcs;
    const RatFunc H = detail::divisor_denominator(D, &p);
    const int degH = H.num().degree() - H.den().degree();
    const int Dp = D.mult(p);
    if (p.is_infinity()) {
      for (int n = 0; n <= L; ++n) funcs.push_back(RatFunc(Poly::monomial(k.one(), n)) * H);
      const int lo = std::min(-L - degH, -Dp);
      return detail::two_term(funcs, {detail::make_block(p, lo, -Dp, 0)}, k);
    }
    const int e = p.degree();
    const RatFunc base = H / RatFunc(p.modulus().pow(static_cast<std::uint64_t>(L)));
    const int maxdeg = e * L - degH + D.mult(ClosedPoint::infinity(k));
    for (int i = 0; i <= maxdeg; ++i) funcs.push_back(RatFunc(Poly::monomial(k.one(), i)) * base);
    return detail::two_term(funcs, {detail::make_block(p, std::min(-L, -Dp), -Dp, 0)}, k);
  };
  return detail::stabilized(compute, std::max(window, detail::auto_bound(D)));
}

inline H01 restricted_h01(const Divisor& D, int window = 0) {
  return restricted_h01(D, ClosedPoint::infinity(D.base_field()), window);
}

} // namespace adelic
