#pragma once

#include "adelic/curve/point.hpp"
#include "adelic/laurent/expand.hpp"
#include "adelic/surface/factored.hpp"
#include "adelic/surface/germs.hpp"
#include "adelic/symbols/symbols.hpp"

#include <set>
#include <string>
#include <vector>

namespace adelic {

struct LocusRow {
  std::string locus;    // germ or point label
  std::string t1;       // outer parameter
  int degree = 1;       // [k(p):k]
  Rank2Val vf, vg, vh;
  int nu = 0;           // nu_K(f,g)
  Fq symbol;            // (f,g,h)_K in k(p)
  Fq normed;            // norm to k
};

struct ReciprocityReport {
  std::vector<LocusRow> rows;
  long nu_sum = 0;
  Fq product;
  int precision = 0;
  bool stable = false;
  bool pass = false;
};

namespace detail {

/// c * prod F_i^{e_i} from per-factor expansions, each truncated to
/// relative outer precision `rel` before powering.
template <class Expand>
Laurent2 combine(const FactoredFunc& f, const FqField& k, const std::string& param, int rel, Expand expand) {
  Laurent2 r = Laurent2::monomial(k.embed(f.unit()), 0, 0, param);
  for (const auto& [P, e] : f.factors()) {
    Laurent2 x = expand(P);
    if (!x.is_known_nonzero()) throw PrecisionError("leading outer coefficient of factor " + P.to_string() + " is not certified");
    x = x.truncated(x.valuation1() + rel, Laurent2::kExact);
    r = r * x.pow(e);
  }
  return r;
}

inline void fill_row(LocusRow& row, const Laurent2& F, const Laurent2& G, const Laurent2& H, const FqField& k,
                     const std::string& where) {
  row.vf = rank2_valuation(F);
  row.vg = rank2_valuation(G);
  row.vh = rank2_valuation(H);
  row.nu = nu_symbol(row.vf, row.vg);
  row.symbol = parshin_symbol(F, G, H, where).value;
  row.normed = row.symbol.field() == k ? row.symbol : row.symbol.norm_to(k);
}

inline bool same_rows(const ReciprocityReport& a, const ReciprocityReport& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.locus != y.locus || !(x.vf == y.vf) || !(x.vg == y.vg) || !(x.vh == y.vh) || !(x.symbol == y.symbol)) return false;
  }
  return true;
}

inline std::vector<BiPoly> components_of(const std::vector<const FactoredFunc*>& fs) {
  std::vector<BiPoly> out;
  for (const auto* f : fs)
    for (const auto& [P, e] : f->factors()) {
      bool seen = false;
      for (const auto& Q : out) seen = seen || Q == P;
      if (!seen) out.push_back(P);
    }
  return out;
}

} // namespace detail

/// Sum of nu_K(f,g) and product of (f,g,h)_K over the germs through the
/// rational point (a, b) of components of div f, div g, div h.
inline ReciprocityReport point_reciprocity(const FactoredFunc& f, const FactoredFunc& g, const FactoredFunc& h,
                                           const Fq& a, const Fq& b, int precision = 0) {
  const FqField& k = f.field();
  const std::vector<BiPoly> comps = detail::components_of({&f, &g, &h});
  int bezout = 8;
  for (const auto& P : comps)
    for (const auto& Q : comps) bezout += P.total_degree() * Q.total_degree();
  const int n0 = std::max(precision, bezout);

  auto compute = [&](int n) {
    ReciprocityReport rep;
    rep.precision = n;
    rep.product = k.one();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      const BiPoly Q = comps[ci].translate(a, b);
      if (Q.order_at_origin() == 0) continue;
      const auto germs = branches_at(comps[ci], a, b, n);
      for (std::size_t gi = 0; gi < germs.size(); ++gi) {
        const Germ& germ = germs[gi];
        const std::string label = "C" + std::to_string(ci) + "." + std::to_string(gi);
        auto expand = [&](const BiPoly& P) {
          if (P == comps[ci]) return expand_own_component(P.translate(a, b), germ, label);
          Laurent2 x = expand_at_germ(P.translate(a, b), germ, label);
          if (!x.is_known_nonzero() || x.lower_bound1() != 0)
            throw PrecisionError("branch precision " + std::to_string(n) + " does not separate " + P.to_string() +
                                 " from " + comps[ci].to_string());
          return x;
        };
        const int rel = 4;
        const Laurent2 F = detail::combine(f, k, label, rel, expand);
        const Laurent2 G = detail::combine(g, k, label, rel, expand);
        const Laurent2 H = detail::combine(h, k, label, rel, expand);
        LocusRow row;
        row.locus = label + " " + comps[ci].to_string();
        row.t1 = germ.outer_name();
        detail::fill_row(row, F, G, H, k, label);
        rep.nu_sum += row.nu;
        rep.product *= row.normed;
        rep.rows.push_back(std::move(row));
      }
    }
    return rep;
  };
  ReciprocityReport r1 = compute(n0);
  ReciprocityReport r2 = compute(2 * n0);
  if (!detail::same_rows(r1, r2)) throw WindowUnstableError("point reciprocity changed between precision " + std::to_string(n0) + " and " + std::to_string(2 * n0));
  r1.stable = true;
  r1.pass = r1.nu_sum == 0 && r1.product.is_one();
  return r1;
}

/// Affine line alpha*t + beta*u + gamma = 0 in A^2.
struct Line {
  Fq alpha, beta, gamma;

  /// Substitution (t, u) in terms of (a, b): a is the line equation, b
  /// the coordinate along the line.
  std::pair<BiPoly, BiPoly> chart() const {
    const FqField& k = alpha.field();
    const BiPoly A = BiPoly::t(k), B = BiPoly::u(k);
    if (!beta.is_zero())
      return {B, (A - B * alpha - BiPoly::constant(gamma)) * beta.inverse()};
    return {(A - BiPoly::constant(gamma)) * alpha.inverse(), B};
  }
  std::string to_string() const {
    return (BiPoly::constant(alpha) * BiPoly::t(alpha.field()) + BiPoly::constant(beta) * BiPoly::u(alpha.field()) +
            BiPoly::constant(gamma))
               .to_string() +
           " = 0";
  }
};

/// Sum of [k(p):k] nu_K(f,g) and product of Nm (f,g,h)_K over closed
/// points p of the line.
inline ReciprocityReport curve_reciprocity(const FactoredFunc& f, const FactoredFunc& g, const FactoredFunc& h,
                                           const Line& C, Window w = {}) {
  const FqField& k = f.field();
  if (C.alpha.is_zero() && C.beta.is_zero()) throw DomainError("degenerate line");
  const auto [X, Y] = C.chart();
  auto moved = [&](const FactoredFunc& x) {
    FactoredFunc r(x.unit());
    for (const auto& [P, e] : x.factors()) r.multiply(P.substitute(X, Y), e);
    return r;
  };
  const FactoredFunc mf = moved(f), mg = moved(g), mh = moved(h);

  std::set<ClosedPoint> points;
  for (const auto* x : {&mf, &mg, &mh})
    for (const auto& [P, e] : x->factors()) {
      int i = 0;
      while (P.coeff_t(i).is_zero()) ++i;
      const Poly lead = P.coeff_t(i);
      if (lead.degree() > 0)
        for (const auto& [pi, m] : factor(lead).factors) points.insert(ClosedPoint::finite(pi));
    }
  points.insert(ClosedPoint::infinity(k));

  auto compute = [&](const Window& win) {
    ReciprocityReport rep;
    rep.precision = win.prec2;
    rep.product = k.one();
    const int rel = std::max(win.prec1, 2);
    for (const auto& p : points) {
      const std::string label = "u@" + p.to_string("b");
      Laurent2 F, G, H;
      if (!p.is_infinity()) {
        const InnerExpander inner = point_expander(p);
        auto expand = [&](const BiPoly& P) {
          return expand_along_curve(P, BiPoly::constant(k.one()), inner, win, label);
        };
        const FqField kp = p.residue_field();
        F = detail::combine(mf, kp, label, rel, expand);
        G = detail::combine(mg, kp, label, rel, expand);
        H = detail::combine(mh, kp, label, rel, expand);
      } else {
        // a' = a/b, b' = 1/b:  P(a, b) = b'^{-d} P~(a', b')
        auto expand = [&](const BiPoly& P) {
          const int d = P.total_degree();
          BiPoly T(k);
          for (int i = 0; i <= P.degree_t(); ++i)
            for (int j = 0; j <= P.coeff_t(i).degree(); ++j)
              if (!P.coeff(i, j).is_zero()) T += BiPoly::monomial(P.coeff(i, j), i, d - i - j);
          return expand_along_curve(T, BiPoly::constant(k.one()), origin_expander(k), win, label) *
                 Laurent2::monomial(k.one(), 0, -d, label);
        };
        F = detail::combine(mf, k, label, rel, expand);
        G = detail::combine(mg, k, label, rel, expand);
        H = detail::combine(mh, k, label, rel, expand);
      }
      LocusRow row;
      row.locus = p.to_string("b");
      row.t1 = p.is_infinity() ? "a/b" : "a";
      row.degree = p.degree();
      detail::fill_row(row, F, G, H, k, label);
      rep.nu_sum += static_cast<long>(row.degree) * row.nu;
      rep.product *= row.normed;
      rep.rows.push_back(std::move(row));
    }
    return rep;
  };
  ReciprocityReport r1 = compute(w);
  ReciprocityReport r2 = compute(w.doubled());
  if (!detail::same_rows(r1, r2)) throw WindowUnstableError("curve reciprocity changed under window doubling");
  r1.stable = true;
  r1.pass = r1.nu_sum == 0 && r1.product.is_one();
  return r1;
}

} // namespace adelic
