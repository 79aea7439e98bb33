#include "adelic/base/random.hpp"
#include "adelic/laurent/laurent2.hpp"
#include "adelic/laurent/series.hpp"

#include <gtest/gtest.h>

using namespace adelic;

namespace {

LaurentSeries poly_series(const FqField& k, std::initializer_list<std::int64_t> c, int ord, int prec) {
  std::vector<Fq> v;
  for (auto x : c) v.push_back(k.from_int(x));
  return LaurentSeries(k, ord, v, prec);
}

// Oracle: power series of a/b (b(0) != 0) to n terms by long division.
std::vector<Fq> long_division(const Poly& a, const Poly& b, int n) {
  const FqField& k = a.field();
  std::vector<Fq> out;
  Poly r = a;
  const Fq inv = b.coeff(0).inverse();
  for (int i = 0; i < n; ++i) {
    const Fq c = r.coeff(0) * inv;
    out.push_back(c);
    r = r - b * c;
    // divide by t
    std::vector<Fq> s;
    for (int j = 1; j <= r.degree(); ++j) s.push_back(r.coeff(j));
    r = Poly(k, s);
  }
  return out;
}

} // namespace

TEST(Series, Examples) {
  const FqField f5 = FqField::prime(5), f3 = FqField::prime(3);
  const LaurentSeries a = poly_series(f5, {1, 1}, 0, 5), b = poly_series(f5, {1, -1}, 0, 5);
  const LaurentSeries p = a * b;
  EXPECT_EQ(p.prec(), 5);
  EXPECT_EQ(p, poly_series(f5, {1, 0, -1}, 0, 5));

  const LaurentSeries g = poly_series(f5, {1, -1}, 0, 4).inverse();
  EXPECT_EQ(g, poly_series(f5, {1, 1, 1, 1}, 0, 4));

  const LaurentSeries x = poly_series(f3, {1, 1}, -1, 2), y = poly_series(f3, {1, -1}, -1, 2);
  const LaurentSeries z = x * y;
  EXPECT_EQ(z.prec(), 1);
  EXPECT_EQ(z, poly_series(f3, {1, 0, -1}, -2, 1));
  EXPECT_EQ(z.to_string(), "t^-2 + 2 + O(t^1)");
}

TEST(Series, ZeroToPrecisionIsIndeterminate) {
  const FqField f5 = FqField::prime(5);
  const LaurentSeries z = LaurentSeries::zero(f5, 3);
  EXPECT_THROW(z.inverse(), IndeterminateError);
  EXPECT_THROW(z.valuation(), IndeterminateError);
  EXPECT_THROW(poly_series(f5, {1}, 0, 3) / z, IndeterminateError);
}

TEST(Series, PrecisionRules) {
  std::mt19937_64 rng(1);
  const FqField k = FqField::prime(7);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> d(-3, 3), r(1, 6);
    const int oa = d(rng), ob = d(rng), pa = oa + r(rng), pb = ob + r(rng);
    std::vector<Fq> ca{k.random_nonzero(rng)}, cb{k.random_nonzero(rng)};
    for (int j = 1; j < pa - oa; ++j) ca.push_back(k.random(rng));
    for (int j = 1; j < pb - ob; ++j) cb.push_back(k.random(rng));
    const LaurentSeries a(k, oa, ca, pa), b(k, ob, cb, pb);
    EXPECT_EQ((a + b).prec(), std::min(pa, pb));
    EXPECT_EQ((a * b).prec(), std::min(oa + pb, ob + pa));
    EXPECT_EQ((a / b).prec(), std::min(oa + pb - 2 * ob, pa - ob));
  }
}

// Every coefficient a result certifies must agree with the exact answer.
TEST(Series, PrecisionSoundness) {
  std::mt19937_64 rng(2);
  const FqField k = make_extension(3, 2);
  for (int it = 0; it < 150; ++it) {
    Poly a = random_poly(k, 5, rng), b = random_poly(k, 5, rng);
    if (b.coeff(0).is_zero()) b = b + Poly::constant(k.one());
    if (b.coeff(0).is_zero()) continue;
    Poly c = random_poly(k, 5, rng);
    if (c.coeff(0).is_zero()) c = c + Poly::constant(k.one());
    if (c.coeff(0).is_zero()) continue;
    const int N = 40;
    const LaurentSeries ab(k, 0, long_division(a, b, N), N), cc(k, 0, long_division(Poly::constant(k.one()), c, N), N);
    // truncated copies
    std::uniform_int_distribution<int> pr(1, 10);
    const LaurentSeries x = ab.truncated(pr(rng)), y = cc.truncated(pr(rng));
    const LaurentSeries exact_prod(k, 0, long_division(a, b * c, N), N);
    const LaurentSeries exact_sum(k, 0, long_division(a * c + b, b * c, N), N);
    EXPECT_TRUE((x * y).agrees_with(exact_prod));
    EXPECT_TRUE((x + y).agrees_with(exact_sum));
    if (x.is_known_nonzero()) EXPECT_TRUE(((y / x) * x).agrees_with(y));
  }
}

TEST(Series, RingLaws) {
  std::mt19937_64 rng(3);
  const FqField k = FqField::prime(5);
  auto rnd = [&] {
    std::vector<Fq> c{k.random_nonzero(rng)};
    for (int j = 0; j < 6; ++j) c.push_back(k.random(rng));
    return LaurentSeries(k, std::uniform_int_distribution<int>(-2, 2)(rng), c, 7);
  };
  for (int i = 0; i < 100; ++i) {
    const LaurentSeries a = rnd(), b = rnd(), c = rnd();
    EXPECT_TRUE(((a + b) * c).agrees_with(a * c + b * c));
    EXPECT_TRUE((a * b).agrees_with(b * a));
    EXPECT_TRUE((a * a.inverse()).agrees_with(LaurentSeries::monomial(k.one(), 0, LaurentSeries::kExact)));
    EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
  }
}

TEST(Laurent2, Examples) {
  const FqField k = FqField::prime(5);
  const Laurent2 t1 = Laurent2::monomial(k.one(), 1, 0), t2 = Laurent2::monomial(k.one(), 0, 1);
  const Laurent2 one = Laurent2::monomial(k.one(), 0, 0);
  EXPECT_TRUE((t1 * t1.inverse()).agrees_with(one));
  const Laurent2 a = (one + t1) * (one + t2), b = (one + t2) * (one + t1);
  EXPECT_TRUE((a - b).is_zero_on_window());
}

TEST(Laurent2, InverseAgreesOnWindow) {
  std::mt19937_64 rng(4);
  const FqField k = FqField::prime(3);
  for (int it = 0; it < 40; ++it) {
    std::vector<LaurentSeries> cs;
    for (int i = 0; i < 4; ++i) {
      std::vector<Fq> c{i == 0 ? k.random_nonzero(rng) : k.random(rng)};
      for (int j = 0; j < 5; ++j) c.push_back(k.random(rng));
      cs.emplace_back(k, std::uniform_int_distribution<int>(-2, 2)(rng), c, 8);
    }
    const Laurent2 x(k, std::uniform_int_distribution<int>(-2, 2)(rng), cs, 6);
    const Laurent2 prod = x * x.inverse();
    EXPECT_TRUE(prod.agrees_with(Laurent2::monomial(k.one(), 0, 0)));
    EXPECT_EQ(prod.valuation1(), 0);
  }
}

TEST(Laurent2, ParamMismatchRejected) {
  const FqField k = FqField::prime(5);
  EXPECT_THROW(Laurent2::monomial(k.one(), 1, 0, "a") + Laurent2::monomial(k.one(), 1, 0, "b"), DomainError);
}
