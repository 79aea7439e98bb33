#pragma once

// Restricted adelic complex of O(d) on P^2 for the flag
//   X = P^2  >  C = {Z = 0}  >  p = [0:1:0],
// with t1 = Z/Y, t2 = X/Y and trivialization e_p = Y^d. Spaces are
// truncated to the window [-W, W]^2 of exponents (i1, i2).
//
// Faces of the 2-simplex are bitmasks: bit 0 <-> X, bit 1 <-> C, bit 2 <-> p.

#include "adelic/curve/subspace.hpp"
#include "adelic/laurent/laurent2.hpp"

#include <array>
#include <string>
#include <vector>

namespace adelic {

struct Betti3 {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;
  int window = 0;
  bool stable = false;

  friend bool operator==(const Betti3& a, const Betti3& b) { return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2; }
};

inline std::string face_name(int mask) {
  if (mask == 0) return "{}";
  std::string s;
  for (int i = 0; i < 3; ++i)
    if (mask & (1 << i)) s += static_cast<char>('0' + i);
  return s;
}

class SurfaceComplex {
public:
  static constexpr int kF0 = 1, kF1 = 2, kF2 = 4, kF01 = 3, kF02 = 5, kF12 = 6, kF012 = 7;

  /// Builds A_01 from sections and derives every other space from it and
  /// the standard subspaces.
  static SurfaceComplex reconstructed(int d, int W, const FqField& k) {
    SurfaceComplex c(d, W, k);
    c.a_[kF01] = c.span_A01_sections();
    c.a_[kF02] = c.standard([](int, int i2) { return i2 >= 0; });
    c.a_[kF12] = c.standard([](int i1, int) { return i1 >= 0; });
    c.a_[kF2] = c.standard([](int i1, int i2) { return i1 >= 0 && i2 >= 0; });
    c.a_[kF012] = c.standard([](int, int) { return true; });
    c.a_[kF0] = SubspaceBasis::intersection(c.a_[kF01], c.a_[kF02]);
    c.a_[kF1] = SubspaceBasis::intersection(c.a_[kF01], c.a_[kF12]);
    c.a_[0] = SubspaceBasis::intersection(SubspaceBasis::intersection(c.a_[kF0], c.a_[kF1]), c.a_[kF2]);
    return c;
  }

  /// Builds A_0, A_1, A_01 independently from sections over the two
  /// affine charts.
  static SurfaceComplex direct(int d, int W, const FqField& k) {
    SurfaceComplex c = reconstructed(d, W, k);
    c.a_[kF0] = c.span_A0_sections();
    c.a_[kF1] = c.span_A1_sections();
    c.a_[0] = SubspaceBasis::intersection(SubspaceBasis::intersection(c.a_[kF0], c.a_[kF1]), c.a_[kF2]);
    return c;
  }

  int degree() const { return d_; }
  int window() const { return W_; }
  const SubspaceBasis& space(int mask) const { return a_[mask]; }
  int ambient_dim() const { return (2 * W_ + 1) * (2 * W_ + 1); }

  Betti3 betti() const {
    Betti3 b;
    b.window = W_;
    b.h0 = a_[0].dim();
    const int c0 = a_[kF0].dim() + a_[kF1].dim() + a_[kF2].dim();
    const int c1 = a_[kF01].dim() + a_[kF02].dim() + a_[kF12].dim();
    const int rank0 = c0 - b.h0;
    const int rank1 = (a_[kF01] + a_[kF02] + a_[kF12]).dim();
    b.h2 = ambient_dim() - rank1;
    b.h1 = c1 - rank0 - rank1;
    return b;
  }

  int index(int i1, int i2) const { return (i1 + W_) * (2 * W_ + 1) + (i2 + W_); }
  bool in_window(int i1, int i2) const { return i1 >= -W_ && i1 <= W_ && i2 >= -W_ && i2 <= W_; }

  /// Coefficients of an expansion inside the window.
  SparseVec window_vector(const Laurent2& x) const {
    SparseVec v;
    for (int i1 = -W_; i1 <= W_; ++i1) {
      const LaurentSeries c = x.coeff(i1);
      for (int i2 = -W_; i2 <= W_; ++i2) {
        const Fq a = c.coeff(i2);
        if (!a.is_zero()) v.emplace(index(i1, i2), a);
      }
    }
    return v;
  }

private:
  SurfaceComplex(int d, int W, const FqField& k) : d_(d), W_(W), k_(k) {
    for (auto& s : a_) s = SubspaceBasis(k_);
  }

  template <class Pred>
  SubspaceBasis standard(Pred keep) const {
    SubspaceBasis s(k_);
    for (int i1 = -W_; i1 <= W_; ++i1)
      for (int i2 = -W_; i2 <= W_; ++i2)
        if (keep(i1, i2)) s.insert_unit(index(i1, i2));
    return s;
  }

  Laurent2 mono(int i1, int i2) const { return Laurent2::monomial(k_.one(), i1, i2); }

  // x = X/Z = t2/t1, y = Y/Z = 1/t1, Z^d/Y^d = t1^d
  SubspaceBasis span_A0_sections() const {
    SubspaceBasis s(k_);
    const Laurent2 x = mono(-1, 1), y = mono(-1, 0), z = mono(d_, 0);
    for (int a = 0; a <= W_; ++a)
      for (int b = std::max(0, d_ - a - W_); b <= d_ - a + W_; ++b) s.insert(window_vector(x.pow(a) * y.pow(b) * z));
    return s;
  }

  // b' = Z/X = t1/t2, a' = Y/X = 1/t2, X^d/Y^d = t2^d
  SubspaceBasis span_sections_X_chart(int mlo) const {
    SubspaceBasis s(k_);
    const Laurent2 bp = mono(1, -1), ap = mono(0, -1), e = mono(0, d_);
    for (int m = mlo; m <= W_; ++m)
      for (int n = std::max(0, d_ - m - W_); n <= d_ - m + W_; ++n) s.insert(window_vector(bp.pow(m) * ap.pow(n) * e));
    return s;
  }
  SubspaceBasis span_A1_sections() const { return span_sections_X_chart(0); }
  SubspaceBasis span_A01_sections() const { return span_sections_X_chart(-W_); }

  int d_;
  int W_;
  FqField k_;
  std::array<SubspaceBasis, 8> a_;
};

inline int default_surface_window(int d) { return std::abs(d) + 4; }

/// (h0, h1, h2) of O(d) on P^2, stable under window doubling.
inline Betti3 restricted_surface_cohomology(int d, int W = 0, const FqField& k = FqField::prime(2)) {
  if (W <= 0) W = default_surface_window(d);
  Betti3 a = SurfaceComplex::reconstructed(d, W, k).betti();
  Betti3 b = SurfaceComplex::reconstructed(d, 2 * W, k).betti();
  if (!(a == b)) throw WindowUnstableError("surface cohomology differs between windows " + std::to_string(W) + " and " + std::to_string(2 * W));
  a.stable = true;
  return a;
}

struct LatticeRow {
  int s1 = 0;
  int s2 = 0;
  int dim = 0;       // dim A_s1 ∩ A_s2
  int expected = 0;  // dim A_{s1 ∩ s2}
  bool ok = false;
};

struct LatticeReport {
  int degree = 0;
  int window = 0;
  int h0_dim = 0;
  std::vector<LatticeRow> rows;
  bool pass = false;
};

/// A_s1 ∩ A_s2 = A_{s1 ∩ s2} for every pair of faces; disjoint faces meet
/// in H^0.
inline LatticeReport intersection_lattice_check(int d, int W = 0, const FqField& k = FqField::prime(2)) {
  if (W <= 0) W = default_surface_window(d);
  LatticeReport rep;
  rep.degree = d;
  rep.window = W;
  rep.pass = true;
  for (int w : {W, 2 * W}) {
    const SurfaceComplex c = SurfaceComplex::reconstructed(d, w, k);
    for (int s1 = 1; s1 < 8; ++s1)
      for (int s2 = s1 + 1; s2 < 8; ++s2) {
        const SubspaceBasis x = SubspaceBasis::intersection(c.space(s1), c.space(s2));
        const SubspaceBasis& y = c.space(s1 & s2);
        LatticeRow row{s1, s2, x.dim(), y.dim(), x == y};
        rep.pass = rep.pass && row.ok;
        if (w == W) rep.rows.push_back(row);
      }
    if (w == W) rep.h0_dim = c.space(0).dim();
    else if (c.space(0).dim() != rep.h0_dim) throw WindowUnstableError("H^0 dimension changed under window doubling");
  }
  return rep;
}

struct ReconstructionRow {
  int face = 0;
  int direct = 0;
  int rebuilt = 0;
  bool equal = false;
};

struct ReconstructionReport {
  int degree = 0;
  std::vector<ReconstructionRow> rows;
  Betti3 direct, rebuilt;
  bool pass = false;
};

/// Compares the complex rebuilt from A_01 alone with the one built from
/// sections on each chart.
inline ReconstructionReport reconstruction_check(int d, int W = 0, const FqField& k = FqField::prime(2)) {
  if (W <= 0) W = default_surface_window(d);
  const SurfaceComplex a = SurfaceComplex::direct(d, W, k), b = SurfaceComplex::reconstructed(d, W, k);
  ReconstructionReport rep;
  rep.degree = d;
  rep.pass = true;
  for (int f = 0; f < 8; ++f) {
    ReconstructionRow row{f, a.space(f).dim(), b.space(f).dim(), a.space(f) == b.space(f)};
    rep.pass = rep.pass && row.equal;
    rep.rows.push_back(row);
  }
  rep.direct = a.betti();
  rep.rebuilt = b.betti();
  rep.pass = rep.pass && rep.direct == rep.rebuilt;
  return rep;
}

} // namespace adelic
