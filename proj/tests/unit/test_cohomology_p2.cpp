#include "adelic/surface/cohomology.hpp"

#include <gtest/gtest.h>

using namespace adelic;

namespace {

int binom2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Oracle: monomial counts. h0 = C(d+2, 2), h2 = C(-d-1, 2), h1 = 0.
Betti3 expected(int d) { return {binom2(d + 2), 0, binom2(-d - 1)}; }

} // namespace

TEST(CohomologyP2, Examples) {
  EXPECT_EQ(restricted_surface_cohomology(1), (Betti3{3, 0, 0}));
  EXPECT_EQ(restricted_surface_cohomology(-1), (Betti3{0, 0, 0}));
  EXPECT_EQ(restricted_surface_cohomology(-3), (Betti3{0, 0, 1}));
}

TEST(CohomologyP2, MonomialCountOracle) {
  for (int d = -5; d <= 5; ++d) {
    const Betti3 b = restricted_surface_cohomology(d);
    EXPECT_EQ(b, expected(d)) << d;
    EXPECT_TRUE(b.stable);
  }
}

TEST(CohomologyP2, IndependentOfField) {
  for (int d : {-4, 0, 2}) EXPECT_EQ(restricted_surface_cohomology(d, 0, FqField::prime(3)), expected(d));
}

TEST(CohomologyP2, H0IsSpannedByDegreeDMonomials) {
  // X^a Y^b Z^c / Y^d = t2^a t1^c with a + c <= d
  for (int d = 0; d <= 3; ++d) {
    const SurfaceComplex c = SurfaceComplex::reconstructed(d, default_surface_window(d), FqField::prime(2));
    SubspaceBasis want(FqField::prime(2));
    for (int a = 0; a <= d; ++a)
      for (int cc = 0; a + cc <= d; ++cc) want.insert_unit(c.index(cc, a));
    EXPECT_TRUE(c.space(0) == want) << d;
  }
}

TEST(CohomologyP2, IntersectionLattice) {
  for (int d = -3; d <= 3; ++d) {
    const LatticeReport r = intersection_lattice_check(d);
    EXPECT_TRUE(r.pass) << d;
    EXPECT_EQ(r.h0_dim, expected(d).h0);
    EXPECT_EQ(r.rows.size(), 21u);
  }
}

TEST(CohomologyP2, ReconstructionFromA01) {
  for (int d = -3; d <= 3; ++d) {
    const ReconstructionReport r = reconstruction_check(d);
    EXPECT_TRUE(r.pass) << d;
    EXPECT_EQ(r.rebuilt, expected(d));
  }
}
