#pragma once

#include "adelic/laurent/series.hpp"

#include <vector>

namespace adelic {

/// Evaluates Q(w) = sum_k q[k] w^k with series coefficients.
inline LaurentSeries evaluate_series_poly(const std::vector<LaurentSeries>& q, const LaurentSeries& w) {
  LaurentSeries r = LaurentSeries::zero(w.field(), LaurentSeries::kExact);
  for (auto it = q.rbegin(); it != q.rend(); ++it) r = r * w + *it;
  return r;
}

/// Power-series root of Q(x, w) = sum_k q[k](x) w^k with w(0) = w0, to
/// precision x^n. Requires Q(0, w0) = 0 and dQ/dw(0, w0) != 0; each step
/// doubles the number of certified terms.
inline LaurentSeries newton_root(const std::vector<LaurentSeries>& q, const Fq& w0, int n) {
  const FqField& f = w0.field();
  std::vector<LaurentSeries> dq;
  for (std::size_t k = 1; k < q.size(); ++k) dq.push_back(q[k].scaled(f.from_int(static_cast<std::int64_t>(k))));
  if (!evaluate_series_poly(q, LaurentSeries::monomial(w0, 0, 1)).is_zero_to_precision())
    throw DomainError("newton_root: initial value is not a root mod x");
  if (evaluate_series_poly(dq, LaurentSeries::monomial(w0, 0, 1)).is_zero_to_precision())
    throw DomainError("newton_root: root is not simple");
  LaurentSeries w = LaurentSeries::monomial(w0, 0, 1);
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    LaurentSeries wp(f, 0, w.coeffs(), prec);
    if (w.is_known_nonzero()) wp = LaurentSeries(f, w.lower_bound(), w.coeffs(), prec);
    LaurentSeries val = evaluate_series_poly(q, wp).truncated(prec);
    LaurentSeries der = evaluate_series_poly(dq, wp).truncated(prec);
    w = (wp - val / der).truncated(prec);
  }
  if (n <= 1) w = w.truncated(n);
  // certificate
  LaurentSeries check = evaluate_series_poly(q, w);
  if (!check.is_zero_to_precision() || check.prec() < n)
    throw PrecisionError("newton_root failed to certify the root to x^" + std::to_string(n));
  return w;
}

/// Expansion of t at a closed point pi: tau in k(p)[[u]] with
/// tau = theta mod u and pi(tau) = u mod u^n.
struct PointExpansion {
  FqField residue;
  Fq theta;
  LaurentSeries tau;
};

inline PointExpansion newton_expand(const Poly& pi, int n) {
  if (pi.degree() < 1) throw DomainError("newton_expand: point modulus must have positive degree");
  if (pi.derivative().is_zero()) throw WildPointError("modulus " + pi.to_string() + " is inseparable");
  FqField k = extend_by(pi.monic());
  Fq theta = pi.degree() == 1 ? -(pi.coeff(0) / pi.coeff(1)) : k.generator();
  std::vector<LaurentSeries> q;
  for (int i = 0; i <= pi.degree(); ++i)
    q.push_back(LaurentSeries::monomial(k.embed(pi.coeff(i)), 0, LaurentSeries::kExact));
  // pi(w) - u
  q[0] = q[0] - LaurentSeries::monomial(k.one(), 1, LaurentSeries::kExact);
  LaurentSeries tau = newton_root(q, theta, n);
  return {k, theta, tau};
}

} // namespace adelic
