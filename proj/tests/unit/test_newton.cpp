#include "adelic/base/random.hpp"
#include "adelic/laurent/expand.hpp"
#include "adelic/laurent/newton.hpp"

#include <gtest/gtest.h>

using namespace adelic;

TEST(Newton, Examples) {
  const FqField f5 = FqField::prime(5), f3 = FqField::prime(3);
  {
    const PointExpansion e = newton_expand(Poly::x(f5), 3);
    EXPECT_EQ(e.residue, f5);
    EXPECT_EQ(e.tau.to_string("u"), "u + O(u^3)");
  }
  {
    const PointExpansion e = newton_expand(Poly::from_ints(f5, {-2, 0, 1}), 2);
    EXPECT_EQ(e.residue.order(), 25u);
    EXPECT_EQ(e.theta * e.theta, e.residue.from_int(2));
    EXPECT_EQ(e.tau.coeff(0), e.theta);
    EXPECT_EQ(e.tau.coeff(1), e.theta * e.residue.from_int(4));
    EXPECT_EQ(e.tau.prec(), 2);
  }
  {
    const PointExpansion e = newton_expand(Poly::from_ints(f3, {-1, 1}), 4);
    EXPECT_EQ(e.tau.to_string("u"), "1 + u + O(u^4)");
  }
}

TEST(Newton, WildPointRejected) {
  const FqField f2 = FqField::prime(2);
  // t^2 + t + 1 is separable; t^2 + 1 = (t+1)^2 has zero derivative
  EXPECT_THROW(newton_expand(Poly::from_ints(f2, {1, 0, 1}), 4), WildPointError);
}

// Oracle: substitute tau into pi with plain series arithmetic; the result
// must be u + O(u^n).
TEST(Newton, RootCertifiedBySubstitution) {
  std::mt19937_64 rng(6);
  for (int p : {3, 5, 7}) {
    const FqField k = FqField::prime(p);
    for (int it = 0; it < 20; ++it) {
      Poly pi = random_poly(k, 4, rng);
      if (pi.degree() < 1) continue;
      pi = pi.monic();
      if (!is_irreducible(pi) || pi.derivative().is_zero()) continue;
      const int n = 12;
      const PointExpansion e = newton_expand(pi, n);
      const LaurentSeries v = evaluate(pi.lift_to(e.residue), e.tau);
      EXPECT_TRUE(v.agrees_with(LaurentSeries::monomial(e.residue.one(), 1, LaurentSeries::kExact)));
      EXPECT_GE(v.prec(), n);
    }
  }
}

TEST(Expand, Examples) {
  const FqField f5 = FqField::prime(5);
  const RatFunc t(Poly::x(f5));
  const ClosedPoint zero = ClosedPoint::rational(f5.zero()), one = ClosedPoint::rational(f5.one());
  EXPECT_EQ(expand_ratfunc_at_point(t, zero, 4).to_string("u"), "u");
  const LaurentSeries s = expand_ratfunc_at_point(RatFunc::constant(f5.one()) / (t - RatFunc::constant(f5.one())), one, 4);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_TRUE(s.lead().is_one());
  const ClosedPoint q = ClosedPoint::finite(Poly::from_ints(f5, {-2, 0, 1}));
  const LaurentSeries tq = expand_ratfunc_at_point(t, q, 2);
  EXPECT_EQ(tq.coeff(0), q.theta());
  EXPECT_EQ(tq.coeff(1), q.theta() * q.residue_field().from_int(4));
  EXPECT_THROW(expand_ratfunc_at_point(RatFunc::constant(f5.zero()), zero, 3), DomainError);
}

// Expansion at a point is a ring homomorphism k(t) -> k(p)((u)).
TEST(Expand, RingHomomorphism) {
  std::mt19937_64 rng(7);
  const FqField k = FqField::prime(5);
  std::vector<ClosedPoint> pts{ClosedPoint::infinity(k), ClosedPoint::rational(k.from_int(2)),
                               ClosedPoint::finite(Poly::from_ints(k, {2, 0, 1})),
                               ClosedPoint::finite(Poly::from_ints(k, {1, 1, 0, 1}))};
  for (int it = 0; it < 25; ++it) {
    const RatFunc f = random_ratfunc(k, 4, rng), g = random_ratfunc(k, 4, rng);
    for (const auto& p : pts) {
      const int n = 8;
      const LaurentSeries ef = expand_ratfunc_at_point(f, p, n), eg = expand_ratfunc_at_point(g, p, n);
      EXPECT_TRUE((ef * eg).agrees_with(expand_ratfunc_at_point(f * g, p, n))) << p.to_string();
      if (!(f + g).is_zero()) EXPECT_TRUE((ef + eg).agrees_with(expand_ratfunc_at_point(f + g, p, 2 * n)));
      EXPECT_EQ(ef.valuation(), p.order_of(f));
    }
  }
}

TEST(ExpandFlag, Examples) {
  const FqField k = FqField::prime(5);
  const BiPoly t = BiPoly::t(k), u = BiPoly::u(k), one = BiPoly::constant(k.one());
  const Window w{-4, 4, -6, 6};
  const Laurent2 a = expand_at_flag(t, one, w);
  EXPECT_EQ(a.valuation1(), 1);
  EXPECT_TRUE(a.agrees_with(Laurent2::monomial(k.one(), 1, 0)));
  EXPECT_TRUE(expand_at_flag(u, t, w).agrees_with(Laurent2::monomial(k.one(), -1, 1)));
  // 1/(t+u) times (t+u) is 1 on the window
  const Laurent2 inv = expand_at_flag(one, t + u, w);
  EXPECT_TRUE((inv * expand_at_flag(t + u, one, w)).agrees_with(Laurent2::monomial(k.one(), 0, 0)));
  EXPECT_EQ(inv.coeff(0).valuation(), -1);
  EXPECT_EQ(inv.coeff(1).lead(), -k.one());
  EXPECT_EQ(inv.coeff(1).valuation(), -2);
  EXPECT_EQ(inv.coeff(2).valuation(), -3);
  EXPECT_THROW(expand_at_flag(one, BiPoly::constant(k.zero()), w), IndeterminateError);
}
