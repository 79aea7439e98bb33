#include "adelic/base/bipoly.hpp"
#include "adelic/base/poly.hpp"
#include "adelic/base/random.hpp"
#include "adelic/base/ratfunc.hpp"

#include <gtest/gtest.h>

using namespace adelic;

namespace {

// All monic polynomials of degree d over a small field.
std::vector<Poly> monics(const FqField& k, int d) {
  std::vector<Poly> out;
  const auto els = k.elements();
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<Fq> c;
    for (int i = 0; i < d; ++i) c.push_back(els[idx[i]]);
    c.push_back(k.one());
    out.emplace_back(k, c);
    int i = 0;
    while (i < d && ++idx[i] == els.size()) idx[i++] = 0;
    if (i == d) break;
  }
  return out;
}

// Oracle: trial division by every monic polynomial of degree <= deg/2.
bool irreducible_by_trial_division(const Poly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& g : monics(f.field(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

} // namespace

TEST(Factor, Examples) {
  const FqField f5 = FqField::prime(5), f2 = FqField::prime(2);
  auto a = factor(Poly::from_ints(f5, {0, -1, 1}));
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].first, Poly::from_ints(f5, {0, 1}));
  EXPECT_EQ(a.factors[1].first, Poly::from_ints(f5, {-1, 1}));
  auto b = factor(Poly::from_ints(f5, {-2, 0, 1}));
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0].second, 1);
  auto c = factor(Poly::from_ints(f2, {0, 0, 1, 0, 1}));
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[0], std::make_pair(Poly::from_ints(f2, {0, 1}), 2));
  EXPECT_EQ(c.factors[1], std::make_pair(Poly::from_ints(f2, {1, 1}), 2));
  EXPECT_THROW(factor(Poly(f5, {})), DomainError);
}

TEST(Factor, RandomAgainstTrialDivision) {
  std::mt19937_64 rng(17);
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    const FqField k = make_extension(p, d);
    for (int it = 0; it < 60; ++it) {
      const Poly f = random_poly(k, 7, rng);
      const Factorization fz = factor(f);
      Poly prod = Poly::constant(fz.unit);
      for (const auto& [g, e] : fz.factors) {
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(irreducible_by_trial_division(g)) << g.to_string();
        EXPECT_EQ(is_irreducible(g), true);
        prod = prod * g.pow(e);
      }
      EXPECT_EQ(prod, f);
      for (std::size_t i = 1; i < fz.factors.size(); ++i) EXPECT_FALSE(fz.factors[i - 1].first == fz.factors[i].first);
    }
  }
}

TEST(Factor, IrreducibilityCountMatchesNecklaceFormula) {
  // number of monic irreducibles of degree n over F_q: (1/n) sum_{d|n} mu(d) q^{n/d}
  const FqField f3 = FqField::prime(3);
  const int want[] = {0, 3, 3, 8, 18};
  for (int n = 1; n <= 4; ++n) {
    int c = 0;
    for (const auto& g : monics(f3, n)) c += is_irreducible(g);
    EXPECT_EQ(c, want[n]) << n;
  }
}

TEST(Poly, DivmodAndGcd) {
  std::mt19937_64 rng(5);
  const FqField k = make_extension(2, 3);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(k, 8, rng), b = random_poly(k, 5, rng);
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    const auto [g, s, t] = xgcd(a, b);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
  }
}

TEST(Poly, MultiplicityAndDerivative) {
  const FqField f5 = FqField::prime(5);
  const Poly t = Poly::x(f5), pi = Poly::from_ints(f5, {-2, 0, 1});
  Poly rest;
  EXPECT_EQ(multiplicity(pi.pow(3) * (t + Poly::constant(f5.one())), pi, &rest), 3);
  EXPECT_EQ(rest, t + Poly::constant(f5.one()));
  EXPECT_TRUE(t.pow(5).derivative().is_zero());
}

TEST(RatFunc, FieldLaws) {
  std::mt19937_64 rng(8);
  const FqField k = FqField::prime(7);
  for (int i = 0; i < 50; ++i) {
    const RatFunc a = random_ratfunc(k, 4, rng), b = random_ratfunc(k, 4, rng), c = random_ratfunc(k, 3, rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a / a, RatFunc::constant(k.one()));
    EXPECT_EQ(a.pow(3) * a.pow(-2), a);
  }
}

TEST(BiPoly, SubstitutionIsARingMap) {
  std::mt19937_64 rng(21);
  const FqField k = FqField::prime(5);
  auto rnd = [&] {
    BiPoly r = BiPoly::constant(k.zero());
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) r += BiPoly::monomial(k.random(rng), i, j);
    return r;
  };
  for (int it = 0; it < 30; ++it) {
    const BiPoly a = rnd(), b = rnd(), X = rnd(), Y = rnd();
    EXPECT_EQ((a * b).substitute(X, Y), a.substitute(X, Y) * b.substitute(X, Y));
    const Fq x = k.random(rng), y = k.random(rng);
    EXPECT_EQ(a.translate(x, y).eval(k.zero(), k.zero()), a.eval(x, y));
    EXPECT_EQ(a.swapped().swapped(), a);
  }
}
