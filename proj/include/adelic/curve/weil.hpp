#pragma once

#include "adelic/curve/point.hpp"
#include "adelic/laurent/expand.hpp"
#include "adelic/symbols/symbols.hpp"

#include <set>
#include <vector>

namespace adelic {

struct LocalSymbol {
  ClosedPoint point;
  int ord_f = 0;
  int ord_g = 0;
  Fq local;  // in k(p)
  Fq normed; // in the base field
};

struct WeilReport {
  std::vector<LocalSymbol> locals;
  Fq product;
  int precision = 0;
  bool pass = false;
};

/// Product over closed points of Nm_{k(p)/k} (f,g)_p.
inline WeilReport weil_verify(const RatFunc& f, const RatFunc& g, std::mt19937_64& rng) {
  if (f.is_zero() || g.is_zero()) throw DomainError("weil reciprocity needs nonzero functions");
  const FqField& k = f.field();
  const Divisor df = divisor_of(f, rng), dg = divisor_of(g, rng);
  std::set<ClosedPoint> support;
  for (const auto& [p, m] : df.terms()) support.insert(p);
  for (const auto& [p, m] : dg.terms()) support.insert(p);
  support.insert(ClosedPoint::infinity(k));

  WeilReport rep;
  rep.precision = 2 + std::max(df.max_abs_mult(), dg.max_abs_mult());
  rep.product = k.one();
  for (const auto& p : support) {
    const LaurentSeries ef = expand_ratfunc_at_point(f, p, rep.precision);
    const LaurentSeries eg = expand_ratfunc_at_point(g, p, rep.precision);
    LocalSymbol ls{p, ef.valuation(), eg.valuation(), tame_symbol(ef, eg).value, k.zero()};
    ls.normed = ls.local.field() == k ? ls.local : ls.local.norm_to(k);
    rep.product *= ls.normed;
    rep.locals.push_back(std::move(ls));
  }
  rep.pass = rep.product.is_one();
  return rep;
}

inline WeilReport weil_verify(const RatFunc& f, const RatFunc& g) {
  std::mt19937_64 rng(0x5eed);
  return weil_verify(f, g, rng);
}

} // namespace adelic
