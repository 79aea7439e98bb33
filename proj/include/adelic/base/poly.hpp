#pragma once

#include "adelic/base/field.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

/// Dense univariate polynomial over a finite field. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is nonzero and the
/// zero polynomial has no coefficients.
class Poly {
public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(FqField f) : f_(std::move(f)) {}
  Poly(FqField f, std::vector<Fq> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Fq& c) { return Poly(c.field(), {c}); }
  static Poly x(const FqField& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly monomial(const Fq& c, int n) {
    std::vector<Fq> v(n + 1, c.field().zero());
    v[n] = c;
    return Poly(c.field(), std::move(v));
  }
  /// From small integer coefficients, low degree first.
  static Poly from_ints(const FqField& f, std::initializer_list<std::int64_t> low_first) {
    std::vector<Fq> v;
    for (auto c : low_first) v.push_back(f.from_int(c));
    return Poly(f, std::move(v));
  }

  const FqField& field() const { return f_; }
  const std::vector<Fq>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Fq lead() const { return c_.empty() ? f_.zero() : c_.back(); }
  Fq coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : f_.zero(); }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), f_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), f_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Fq> r(a.c_.size() + b.c_.size() - 1, a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.f_, std::move(r));
  }
  friend Poly operator*(Poly a, const Fq& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(f_), *this};
    std::vector<Fq> r = c_;
    std::vector<Fq> q(c_.size() - d.c_.size() + 1, f_.zero());
    Fq inv = d.lead().inverse();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      Fq coef = r[k + d.degree()] * inv;
      q[k] = coef;
      if (coef.is_zero()) continue;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= coef * d.c_[j];
    }
    return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Fq> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * f_.from_int(static_cast<std::int64_t>(i)));
    return Poly(f_, std::move(r));
  }

  Fq eval(const Fq& x) const {
    Fq r = x.field().zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + x.field().embed(*it);
    return r;
  }
  /// Horner composition this(g).
  Poly compose(const Poly& g) const {
    Poly r(g.f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + Poly::constant(g.f_.embed(*it));
    return r;
  }
  /// The same polynomial over an extension field.
  Poly lift_to(const FqField& ext) const {
    std::vector<Fq> v;
    for (const auto& c : c_) v.push_back(ext.embed(c));
    return Poly(ext, std::move(v));
  }

  Poly pow(std::uint64_t e) const {
    Poly r = Poly::constant(f_.one());
    Poly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }
  /// this^e mod m.
  Poly powmod(u128 e, const Poly& m) const {
    Poly r = Poly::constant(f_.one()) % m;
    Poly b = *this % m;
    while (e) {
      if (e & 1) r = (r * b) % m;
      e >>= 1;
      if (e) b = (b * b) % m;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Degree first, then coefficients from x^{deg-1} down to x^0.
  friend bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (lex_less(a.c_[i], b.c_[i])) return true;
      if (lex_less(b.c_[i], a.c_[i])) return false;
    }
    return false;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].to_string();
      bool compound = cs.find('+') != std::string::npos;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string term;
      if (i == 0) term = compound && !s.empty() ? "(" + cs + ")" : cs;
      else if (c_[i].is_one()) term = mono;
      else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
      if (!s.empty()) s += " + ";
      s += term;
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FqField f_;
  std::vector<Fq> c_;
};

/// Monic gcd (zero if both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  const FqField& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1); r1 = std::move(r);
    Poly s2 = s0 - q * s1; s0 = std::move(s1); s1 = std::move(s2);
    Poly t2 = t0 - q * t1; t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fq inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Multiplicity of the irreducible `pi` in nonzero `f`; `rest` receives f / pi^m.
inline int multiplicity(const Poly& f, const Poly& pi, Poly* rest = nullptr) {
  if (f.is_zero()) throw DomainError("multiplicity in zero polynomial");
  int m = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = g.divmod(pi);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++m;
  }
  if (rest) *rest = std::move(g);
  return m;
}

namespace detail {

// x^(q^k) mod m by iterated Frobenius.
inline Poly frobenius_power_of_x(const Poly& m, int k) {
  const FqField& f = m.field();
  Poly h = Poly::x(f) % m;
  for (int i = 0; i < k; ++i) h = h.powmod(f.order(), m);
  return h;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// p-th root of a polynomial whose derivative vanishes.
inline Poly pth_root(const Poly& f) {
  const std::uint32_t p = f.field().characteristic();
  std::vector<Fq> v;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(f.coeff(i).pth_root());
  return Poly(f.field(), std::move(v));
}

inline void squarefree_into(const Poly& f, std::uint64_t mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() <= 0) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), static_cast<int>(i * mult));
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_into(pth_root(c.monic()), mult * f.field().characteristic(), out);
}

// Splits a squarefree monic into products of irreducibles of equal degree.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const FqField& fld = f.field();
  Poly h = Poly::x(fld) % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = h.powmod(fld.order(), f);
    Poly g = gcd(f, h - Poly::x(fld));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
inline void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const FqField& fld = f.field();
  const bool even = fld.characteristic() == 2;
  for (;;) {
    std::vector<Fq> rc;
    for (int i = 0; i < f.degree(); ++i) rc.push_back(fld.random(rng));
    Poly a(fld, rc);
    if (a.degree() <= 0) continue;
    Poly b(fld);
    if (even) {
      // absolute trace to F_2: a + a^2 + ... + a^{2^{k d - 1}}
      int steps = fld.abs_degree() * d;
      Poly term = a % f;
      b = term;
      for (int i = 1; i < steps; ++i) {
        term = (term * term) % f;
        b += term;
      }
    } else {
      // a^{(q^d - 1)/2} = prod_{i<d} (a^{(q-1)/2})^{q^i}
      Poly base = a.powmod((fld.order() - 1) / 2, f);
      b = Poly::constant(fld.one());
      Poly frob = base;
      for (int i = 0; i < d; ++i) {
        b = (b * frob) % f;
        frob = frob.powmod(fld.order(), f);
      }
      b -= Poly::constant(fld.one());
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

} // namespace detail

/// Rabin's irreducibility test.
inline bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  Poly m = f.monic();
  const int n = m.degree();
  const FqField& fld = m.field();
  Poly x = Poly::x(fld);
  if (!(detail::frobenius_power_of_x(m, n) == x % m)) return false;
  for (int r : detail::prime_divisors(n)) {
    Poly h = detail::frobenius_power_of_x(m, n / r);
    if (gcd(m, h - x).degree() != 0) return false;
  }
  return true;
}

struct Factorization {
  Fq unit;
  std::vector<std::pair<Poly, int>> factors;
};

/// Squarefree + distinct-degree + equal-degree factorization. Output
/// factors are monic irreducible and sorted by canonical_less.
inline Factorization factor(const Poly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization res{f.lead(), {}};
  std::vector<std::pair<Poly, int>> sqf;
  detail::squarefree_into(f.monic(), 1, sqf);
  for (auto& [g, m] : sqf) {
    for (auto& [h, d] : detail::distinct_degree(g)) {
      std::vector<Poly> parts;
      detail::equal_degree(h, d, rng, parts);
      for (auto& p : parts) res.factors.emplace_back(std::move(p), m);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  // squarefree parts are coprime, but merge defensively equal irreducibles
  std::vector<std::pair<Poly, int>> merged;
  for (auto& fm : res.factors) {
    if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
    else merged.push_back(std::move(fm));
  }
  res.factors = std::move(merged);
  return res;
}

/// Deterministic overload with the library's default seed.
inline Factorization factor(const Poly& f) {
  std::mt19937_64 rng(0x5eed);
  return factor(f, rng);
}

/// F_{p^d} with the lexicographically smallest monic irreducible modulus
/// (coefficients compared from x^{d-1} down to x^0).
inline FqField make_extension(std::uint32_t p, int d, const std::string& gen = "g") {
  FqField fp = FqField::prime(p);
  if (d < 1) throw DomainError("extension degree must be at least 1");
  if (d == 1) return fp;
  if (d > kMaxDegree) throw DomainError("extension degree too large");
  u128 count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (u128 idx = 0; idx < count; ++idx) {
    // digit for x^{d-1} is the most significant
    std::vector<Fq> low(d, fp.zero());
    u128 v = idx;
    for (int i = 0; i < d; ++i) {
      low[i] = fp.from_int(static_cast<std::int64_t>(v % p));
      v /= p;
    }
    std::vector<Fq> all = low;
    all.push_back(fp.one());
    if (is_irreducible(Poly(fp, all))) return FqField::extension(fp, low, gen);
  }
  throw DomainError("no irreducible polynomial found");
}

/// k(pi) = F[theta]/(pi) for a monic irreducible pi over F.
inline FqField extend_by(const Poly& pi, const std::string& gen = "th") {
  if (pi.degree() < 1 || !pi.is_monic()) throw DomainError("point modulus must be monic of positive degree");
  if (pi.degree() == 1) return pi.field();
  if (!is_irreducible(pi)) throw DomainError("point modulus " + pi.to_string() + " is reducible");
  std::vector<Fq> low(pi.coeffs().begin(), pi.coeffs().end() - 1);
  return FqField::extension(pi.field(), low, gen);
}

/// Nm_{F_{q^d}/F_q} down to the immediate base.
inline Fq norm_to_base(const Fq& a) { return a.norm_to(a.field().base()); }

/// Nm down to the prime field.
inline Fq norm_to_prime(const Fq& a) {
  FqField f = a.field();
  while (!f.is_prime_field()) f = f.base();
  return a.norm_to(f);
}

} // namespace adelic
