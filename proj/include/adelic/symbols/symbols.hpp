#pragma once

#include "adelic/laurent/laurent2.hpp"

#include <string>

namespace adelic {

/// (nu_1, nu_2) on k((t2))((t1)); nu_2 depends on the outer parameter.
struct Rank2Val {
  int nu1 = 0;
  int nu2 = 0;
  std::string t1_choice = "t1";

  friend bool operator==(const Rank2Val&, const Rank2Val&) = default;
  Rank2Val operator+(const Rank2Val& o) const {
    require_same(o);
    return {nu1 + o.nu1, nu2 + o.nu2, t1_choice};
  }
  void require_same(const Rank2Val& o) const {
    if (t1_choice != o.t1_choice)
      throw DomainError("rank-2 valuations taken with different outer parameters: " + t1_choice + " vs " + o.t1_choice);
  }
};

struct SymbolValue {
  Fq value;
  std::string provenance;
};

inline Fq minus_one_pow(const FqField& f, long e) { return (e % 2 == 0) ? f.one() : -f.one(); }

/// (f,g) = (-1)^{v(f)v(g)} f^{v(g)} / g^{v(f)} mod m.
inline SymbolValue tame_symbol(const LaurentSeries& f, const LaurentSeries& g, const std::string& where = "") {
  const int vf = f.valuation(), vg = g.valuation();
  Fq v = minus_one_pow(f.field(), static_cast<long>(vf) * vg) * f.lead().pow_signed(vg) * g.lead().pow_signed(-vf);
  return {v, "tame" + (where.empty() ? "" : "@" + where)};
}

inline Rank2Val rank2_valuation(const Laurent2& f) {
  return {f.valuation1(), f.leading().valuation(), f.param()};
}

/// nu_K(f,g) = nu1(f) nu2(g) - nu2(f) nu1(g).
inline int nu_symbol(const Rank2Val& a, const Rank2Val& b) {
  a.require_same(b);
  return a.nu1 * b.nu2 - a.nu2 * b.nu1;
}
inline int nu_symbol(const Laurent2& f, const Laurent2& g) { return nu_symbol(rank2_valuation(f), rank2_valuation(g)); }

/// B mod 2 for the sign (-1)^B of the two-dimensional symbol.
inline int sign_exponent_B(const Rank2Val& f, const Rank2Val& g, const Rank2Val& h) {
  const long b = static_cast<long>(f.nu1) * g.nu2 * h.nu2 + static_cast<long>(g.nu1) * f.nu2 * h.nu2 +
                 static_cast<long>(h.nu1) * g.nu2 * f.nu2 + static_cast<long>(f.nu2) * g.nu1 * h.nu1 +
                 static_cast<long>(g.nu2) * f.nu1 * h.nu1 + static_cast<long>(h.nu2) * f.nu1 * g.nu1;
  return static_cast<int>(((b % 2) + 2) % 2);
}

/// The pairwise form: A = xy + xz + yz + xyz with x = nu(f,g), y = nu(f,h),
/// z = nu(g,h). Agrees with B mod 2.
inline int sign_exponent_A(const Rank2Val& f, const Rank2Val& g, const Rank2Val& h) {
  const long x = nu_symbol(f, g), y = nu_symbol(f, h), z = nu_symbol(g, h);
  const long a = x * y + x * z + y * z + x * y * z;
  return static_cast<int>(((a % 2) + 2) % 2);
}

/// The exponent as printed in the source: 3xy + xyz.
inline int sign_exponent_A_printed(const Rank2Val& f, const Rank2Val& g, const Rank2Val& h) {
  const long x = nu_symbol(f, g), y = nu_symbol(f, h);
  const long z = nu_symbol(g, h);
  const long a = 3 * x * y + x * y * z;
  return static_cast<int>(((a % 2) + 2) % 2);
}

namespace detail {

/// Leading monomial c t1^a t2^b with O(t1^{a+1}) and O(t2^{b+1}).
inline Laurent2 leading_part(const Laurent2& x) {
  const int a = x.valuation1();
  const LaurentSeries& l = x.leading();
  return Laurent2(x.field(), a, {l.truncated(l.valuation() + 1)}, a + 1, x.param());
}

} // namespace detail

/// (f,g,h)_K = (-1)^B f^{nu(g,h)} g^{nu(h,f)} h^{nu(f,g)} mod m_K mod m_Kbar.
inline SymbolValue parshin_symbol(const Laurent2& f, const Laurent2& g, const Laurent2& h, const std::string& where = "") {
  const Rank2Val vf = rank2_valuation(f), vg = rank2_valuation(g), vh = rank2_valuation(h);
  const int egh = nu_symbol(vg, vh), ehf = nu_symbol(vh, vf), efg = nu_symbol(vf, vg);
  Laurent2 prod = detail::leading_part(f).pow(egh) * detail::leading_part(g).pow(ehf) * detail::leading_part(h).pow(efg);
  const Rank2Val v = rank2_valuation(prod);
  if (v.nu1 != 0 || v.nu2 != 0)
    throw PrecisionError("normalized product has valuation (" + std::to_string(v.nu1) + "," + std::to_string(v.nu2) + ")");
  const LaurentSeries c0 = prod.coeff(0);
  if (c0.prec() < 1) throw PrecisionError("residue of the normalized product is not certified");
  Fq r = minus_one_pow(f.field(), sign_exponent_B(vf, vg, vh)) * c0.coeff(0);
  return {r, "parshin" + (where.empty() ? "" : "@" + where)};
}

} // namespace adelic
