#pragma once

#include "adelic/base/bipoly.hpp"
#include "adelic/curve/point.hpp"
#include "adelic/laurent/laurent2.hpp"
#include "adelic/laurent/newton.hpp"

#include <functional>

namespace adelic {

inline Poly reversed(const Poly& p, int deg) {
  std::vector<Fq> v(deg + 1, p.field().zero());
  for (int i = 0; i <= p.degree(); ++i) v[deg - i] = p.coeff(i);
  return Poly(p.field(), std::move(v));
}

/// Image of f in k(p)((u)), with relative precision n. A precomputed
/// expansion tau of t at p (precision >= n) may be passed in.
inline LaurentSeries expand_ratfunc_at_point(const RatFunc& f, const ClosedPoint& p, int n,
                                             const LaurentSeries* tau = nullptr) {
  if (f.is_zero()) throw DomainError("expansion of the zero function");
  if (n < 1) throw PrecisionError("expansion needs precision >= 1");
  if (p.is_infinity()) {
    const int dn = f.num().degree(), dd = f.den().degree();
    LaurentSeries a = LaurentSeries::from_poly(reversed(f.num(), dn)).truncated(n);
    LaurentSeries b = LaurentSeries::from_poly(reversed(f.den(), dd)).truncated(n);
    return (a / b).shifted(dd - dn);
  }
  Poly rn(f.field()), rd(f.field());
  const int m = multiplicity(f.num(), p.modulus(), &rn) - multiplicity(f.den(), p.modulus(), &rd);
  const LaurentSeries t = tau && tau->prec() >= n ? tau->truncated(n) : newton_expand(p.modulus(), n).tau;
  LaurentSeries a = evaluate(rn, t);
  LaurentSeries b = evaluate(rd, t);
  return (a / b).shifted(m);
}

/// Expansion of a polynomial in the curve coordinate, to the given
/// relative precision. The zero polynomial maps to the exact zero.
using InnerExpander = std::function<LaurentSeries(const Poly&, int)>;

/// Curve coordinate u expanded at u = 0 (the standard flag).
inline InnerExpander origin_expander(const FqField& f) {
  return [f](const Poly& P, int r) {
    if (P.is_zero()) return LaurentSeries::zero(f, LaurentSeries::kExact);
    LaurentSeries s = LaurentSeries::from_poly(P);
    return s.truncated(s.valuation() + r);
  };
}

/// Curve coordinate expanded at a closed point of the curve.
inline InnerExpander point_expander(const ClosedPoint& p) {
  return [p](const Poly& P, int r) {
    if (P.is_zero()) return LaurentSeries::zero(p.residue_field(), LaurentSeries::kExact);
    return expand_ratfunc_at_point(RatFunc(P), p, r);
  };
}

/// num/den in k(p)((s))((t)), where t is the BiPoly outer variable (the
/// curve equation) and the coefficients in u are expanded by `inner`.
/// Inner precision is doubled until every certified outer coefficient
/// reaches w.prec2.
inline Laurent2 expand_along_curve(const BiPoly& num, const BiPoly& den, const InnerExpander& inner, const Window& w,
                                   const std::string& param = "t1") {
  if (den.is_zero()) throw IndeterminateError("denominator vanishes identically");
  auto low = [](const BiPoly& b) {
    int i = 0;
    while (b.coeff_t(i).is_zero()) ++i;
    return i;
  };
  if (num.is_zero()) {
    LaurentSeries z = inner(Poly(num.field()), 1);
    return Laurent2::zero(z.field(), Laurent2::kExact, param);
  }
  const int a = low(num), b = low(den);
  const int rel1 = std::max(w.prec1 - (a - b), 1);
  auto build = [&](const BiPoly& P, int start, int r) {
    std::vector<LaurentSeries> v;
    for (int i = start; i < start + rel1 && i <= P.degree_t(); ++i) v.push_back(inner(P.coeff_t(i), r));
    const bool exact = P.degree_t() < start + rel1;
    FqField k = v.front().field();
    return Laurent2(k, 0, std::move(v), exact ? Laurent2::kExact : rel1, param);
  };
  int r = std::max(w.prec2 - w.ord2, 4);
  for (int attempt = 0; attempt < 10; ++attempt, r *= 2) {
    Laurent2 N = build(num, a, r);
    Laurent2 D = build(den, b, r);
    if (D.is_exact() && D.coeffs().size() > 1) D = D.truncated(rel1, Laurent2::kExact);
    Laurent2 q = (N / D).shifted(a - b);
    bool ok = true;
    for (const auto& c : q.coeffs())
      if (c.prec() < w.prec2) ok = false;
    if (ok) return q;
  }
  throw PrecisionError("inner precision did not reach t2^" + std::to_string(w.prec2));
}

/// Standard flag: C = {t = 0}, p = origin, t1 = t, t2 = u.
inline Laurent2 expand_at_flag(const BiPoly& num, const BiPoly& den, const Window& w) {
  return expand_along_curve(num, den, origin_expander(num.field()), w);
}

} // namespace adelic
