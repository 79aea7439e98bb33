#pragma once

// Branches of plane curves at rational points and their 2-dimensional
// local fields. A germ is u = phi(t) (graph over t) or t = phi(u); its
// local parameters are t1 = u - phi(t), t2 = t (resp. t1 = t - phi(u),
// t2 = u).

#include "adelic/base/bipoly.hpp"
#include "adelic/laurent/laurent2.hpp"
#include "adelic/laurent/newton.hpp"

#include <string>
#include <vector>

namespace adelic {

struct Germ {
  BiPoly equation;      // component, translated so that p is the origin
  bool graph_over_t = true;
  Fq slope;             // tangent direction: u = slope*t, or t = slope*u
  LaurentSeries phi;    // branch series in the inner parameter
  int precision = 0;

  std::string inner_name() const { return graph_over_t ? "t" : "u"; }
  std::string outer_name() const {
    const std::string dep = graph_over_t ? "u" : "t";
    const std::string ph =
        phi.is_zero_to_precision() ? "" : phi.truncated(std::min(phi.prec(), phi.lower_bound() + 4)).to_string(inner_name());
    return ph.empty() ? dep : dep + " - (" + ph + ")";
  }
};

namespace detail {

/// Newton branch of Q (origin on Q, tangent u = c*t, simple in the cone):
/// u = t*w(t) with w(0) = c.
inline LaurentSeries graph_branch(const BiPoly& Q, int m, const Fq& c, int n) {
  const FqField& k = Q.field();
  // Q(t, t w) = t^m R(t, w),  R = sum_j r_j(t) w^j
  std::vector<std::vector<Fq>> r(Q.degree_u() + 1);
  for (int i = 0; i <= Q.degree_t(); ++i) {
    const Poly& col = Q.coeff_t(i);
    for (int j = 0; j <= col.degree(); ++j) {
      if (col.coeff(j).is_zero()) continue;
      auto& v = r[j];
      const int e = i + j - m;
      if (static_cast<int>(v.size()) <= e) v.resize(e + 1, k.zero());
      v[e] += col.coeff(j);
    }
  }
  std::vector<LaurentSeries> q;
  for (auto& v : r) q.push_back(LaurentSeries(k, 0, v, LaurentSeries::kExact));
  return newton_root(q, c, n).shifted(1);
}

} // namespace detail

/// Branches of P through the rational point (a, b).
inline std::vector<Germ> branches_at(const BiPoly& P, const Fq& a, const Fq& b, int n) {
  const BiPoly Q = P.translate(a, b);
  const int m = Q.order_at_origin();
  if (m <= 0) throw DomainError("curve " + P.to_string() + " does not pass through the point");
  const BiPoly H = Q.homogeneous_part(m);
  const FqField& k = P.field();
  // H = sum_i h_i t^i u^{m-i};  H(1, w) = sum_i h_i w^{m-i}
  int mu = 0;
  while (H.coeff(mu, m - mu).is_zero()) ++mu;
  if (mu > 1) throw UnsupportedSingularityError("tangent cone " + H.to_string() + " has a repeated vertical line");
  std::vector<Fq> hw(m + 1 - mu, k.zero());
  for (int i = mu; i <= m; ++i) hw[m - i] = H.coeff(i, m - i);
  std::vector<Fq> slopes;
  const Poly cone(k, hw);
  if (cone.degree() > 0) {
    const Factorization fz = factor(cone);
    for (const auto& [pi, e] : fz.factors) {
      if (pi.degree() != 1 || e != 1)
        throw UnsupportedSingularityError("tangent cone " + H.to_string() + " is not squarefree and split");
      slopes.push_back(-pi.coeff(0));
    }
  }
  std::vector<Germ> out;
  for (const auto& c : slopes) out.push_back({Q, true, c, detail::graph_branch(Q, m, c, n), n});
  if (mu == 1) out.push_back({Q, false, k.zero(), detail::graph_branch(Q.swapped(), m, k.zero(), n), n});
  return out;
}

inline std::vector<Germ> branches_at(const BiPoly& P, int n) {
  return branches_at(P, P.field().zero(), P.field().zero(), n);
}

/// F (translated to the germ's point) in k((t2))((t1)). The result is
/// exact in t1 with inner precision limited by the branch.
inline Laurent2 expand_at_germ(const BiPoly& F, const Germ& g, const std::string& param) {
  const BiPoly G = g.graph_over_t ? F.swapped() : F;  // outer variable: the dependent coordinate
  const FqField& k = F.field();
  const Laurent2 X(k, 0, {g.phi, LaurentSeries::monomial(k.one(), 0, Laurent2::kExact)}, Laurent2::kExact, param);
  Laurent2 r = Laurent2::zero(k, Laurent2::kExact, param);
  for (int i = G.degree_t(); i >= 0; --i)
    r = r * X + Laurent2::constant(LaurentSeries::from_poly(G.coeff_t(i), g.precision), param);
  return r;
}

/// Expansion of a component at one of its own germs: the t1^0 coefficient
/// vanishes identically on the branch and is dropped.
inline Laurent2 expand_own_component(const BiPoly& F, const Germ& g, const std::string& param) {
  Laurent2 r = expand_at_germ(F, g, param);
  if (r.lower_bound1() == 0) {
    if (r.coeffs().front().is_known_nonzero())
      throw DomainError("component does not vanish on its own branch");
    r = r.drop_leading(1);
  }
  if (!r.is_known_nonzero())
    throw PrecisionError("branch precision " + std::to_string(g.precision) + " does not certify the t1 coefficient");
  return r;
}

/// One factor of K_delta per germ: the field k((t2))((t1)) with its
/// parameters.
struct KDeltaFactor {
  Germ germ;
  std::string t1;
  std::string t2;
  std::string field;
};

inline std::vector<KDeltaFactor> k_delta_split(const BiPoly& C, const Fq& a, const Fq& b, int n) {
  std::vector<KDeltaFactor> out;
  for (auto& g : branches_at(C, a, b, n)) {
    KDeltaFactor f{g, g.outer_name(), g.inner_name(), ""};
    f.field = C.field().describe_short() + "((" + f.t2 + "))((" + f.t1 + "))";
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace adelic
