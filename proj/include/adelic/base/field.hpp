#pragma once

// Finite fields as towers F_p ⊂ F_q ⊂ k(p) ⊂ ...
//
// Every level is a simple extension of the level below by a monic
// irreducible polynomial. Elements are stored flat: an element of a level
// of degree e over a base of absolute degree d is e consecutive blocks of d
// coordinates, block i holding the coefficient of theta^i. With this layout
// a subfield element embeds by zero padding, and addition is coordinatewise
// over F_p at every level.

#include "adelic/base/errors.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace adelic {

inline constexpr int kMaxDegree = 16;
using u128 = unsigned __int128;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) { s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10))); v /= 10; }
  return s;
}

using Coords = std::array<std::uint32_t, kMaxDegree>;

namespace detail {

struct FieldNode {
  std::uint32_t p = 0;
  int degree = 1;     // over base
  int abs_degree = 1; // over F_p
  std::shared_ptr<const FieldNode> base;
  // m_0 .. m_{e-1} of the monic modulus, each in base coordinates.
  std::vector<Coords> modulus;
  u128 order = 0;
  std::string gen;

  bool is_prime() const { return base == nullptr; }
};

inline bool same_node(const FieldNode* a, const FieldNode* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->p != b->p || a->degree != b->degree || a->abs_degree != b->abs_degree) return false;
  if (a->is_prime() || b->is_prime()) return a->is_prime() && b->is_prime();
  if (!same_node(a->base.get(), b->base.get())) return false;
  int bd = a->base ? a->base->abs_degree : 1;
  for (int i = 0; i < a->degree; ++i)
    for (int j = 0; j < bd; ++j)
      if (a->modulus[i][j] != b->modulus[i][j]) return false;
  return true;
}

inline std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// out may alias neither a nor b.
inline void mul_coords(const FieldNode& f, const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) {
  const std::uint32_t p = f.p;
  if (f.is_prime()) {
    out[0] = mulp(a[0], b[0], p);
    return;
  }
  const FieldNode& base = *f.base;
  const int e = f.degree;
  const int bd = base.abs_degree;
  std::array<std::uint32_t, 2 * kMaxDegree> prod{};
  std::array<std::uint32_t, kMaxDegree> tmp{};
  for (int i = 0; i < e; ++i) {
    bool zi = true;
    for (int k = 0; k < bd; ++k)
      if (a[i * bd + k]) { zi = false; break; }
    if (zi) continue;
    for (int j = 0; j < e; ++j) {
      mul_coords(base, a + i * bd, b + j * bd, tmp.data());
      std::uint32_t* dst = prod.data() + (i + j) * bd;
      for (int k = 0; k < bd; ++k) dst[k] = addp(dst[k], tmp[k], p);
    }
  }
  // theta^e = -sum m_i theta^i
  for (int k = 2 * e - 2; k >= e; --k) {
    std::uint32_t* ck = prod.data() + k * bd;
    bool zk = true;
    for (int s = 0; s < bd; ++s)
      if (ck[s]) { zk = false; break; }
    if (zk) continue;
    for (int i = 0; i < e; ++i) {
      mul_coords(base, ck, f.modulus[i].data(), tmp.data());
      std::uint32_t* dst = prod.data() + (k - e + i) * bd;
      for (int s = 0; s < bd; ++s) dst[s] = subp(dst[s], tmp[s], p);
    }
    for (int s = 0; s < bd; ++s) ck[s] = 0;
  }
  for (int s = 0; s < f.abs_degree; ++s) out[s] = prod[s];
}

} // namespace detail

class Fq;

/// Handle to an immutable finite field. Cheap to copy.
class FqField {
public:
  FqField() = default;
  explicit FqField(std::shared_ptr<const detail::FieldNode> node) : node_(std::move(node)) {}

  static FqField prime(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw DomainError("characteristic too large");
    auto n = std::make_shared<detail::FieldNode>();
    n->p = p;
    n->order = p;
    return FqField(std::move(n));
  }

  /// Extension of `base` by the monic polynomial with low coefficients
  /// `low_coeffs` (m_0..m_{e-1}). Irreducibility is the caller's job; see
  /// make_extension / extend_by in poly.hpp for checked constructors.
  static FqField extension(const FqField& base, const std::vector<Fq>& low_coeffs, std::string gen);

  bool valid() const { return node_ != nullptr; }
  std::uint32_t characteristic() const { return node_->p; }
  int degree() const { return node_->degree; }
  int abs_degree() const { return node_->abs_degree; }
  u128 order() const { return node_->order; }
  bool is_prime_field() const { return node_->is_prime(); }
  FqField base() const { return node_->base ? FqField(node_->base) : *this; }
  const std::string& generator_name() const { return node_->gen; }
  const detail::FieldNode* node() const { return node_.get(); }
  const std::shared_ptr<const detail::FieldNode>& node_ptr() const { return node_; }

  /// True when `sub` is this field or lies below it in the tower.
  bool contains(const FqField& sub) const {
    for (const detail::FieldNode* n = node_.get(); n; n = n->base.get())
      if (detail::same_node(n, sub.node())) return true;
    return false;
  }

  Fq zero() const;
  Fq one() const;
  Fq from_int(std::int64_t v) const;
  Fq generator() const;
  Fq embed(const Fq& sub) const;
  Fq element_at(u128 index) const;
  Fq random(std::mt19937_64& rng) const;
  Fq random_nonzero(std::mt19937_64& rng) const;
  std::vector<Fq> elements() const;

  /// Monic modulus over the base, highest coefficient included.
  std::vector<Fq> modulus() const;
  std::string describe() const;
  std::string describe_short() const { return "F_" + u128_to_string(order()); }

  friend bool operator==(const FqField& a, const FqField& b) {
    return detail::same_node(a.node(), b.node());
  }

private:
  std::shared_ptr<const detail::FieldNode> node_;
};

/// Element of a finite field.
class Fq {
public:
  Fq() = default;
  Fq(FqField f, const Coords& c) : f_(std::move(f)), c_(c) {}

  const FqField& field() const { return f_; }
  const Coords& coords() const { return c_; }
  std::uint32_t coord(int i) const { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < f_.abs_degree(); ++i)
      if (c_[i]) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < f_.abs_degree(); ++i)
      if (c_[i]) return false;
    return true;
  }

  Fq operator-() const {
    Fq r = *this;
    const std::uint32_t p = f_.characteristic();
    for (int i = 0; i < f_.abs_degree(); ++i) r.c_[i] = c_[i] ? p - c_[i] : 0;
    return r;
  }
  Fq& operator+=(const Fq& o) {
    check(o);
    const std::uint32_t p = f_.characteristic();
    for (int i = 0; i < f_.abs_degree(); ++i) c_[i] = detail::addp(c_[i], o.c_[i], p);
    return *this;
  }
  Fq& operator-=(const Fq& o) {
    check(o);
    const std::uint32_t p = f_.characteristic();
    for (int i = 0; i < f_.abs_degree(); ++i) c_[i] = detail::subp(c_[i], o.c_[i], p);
    return *this;
  }
  Fq& operator*=(const Fq& o) {
    check(o);
    Coords out{};
    detail::mul_coords(*f_.node(), c_.data(), o.c_.data(), out.data());
    c_ = out;
    return *this;
  }
  Fq& operator/=(const Fq& o) { return *this *= o.inverse(); }

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

  Fq pow(u128 e) const {
    Fq result = f_.one();
    Fq b = *this;
    while (e) {
      if (e & 1) result *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return result;
  }
  /// Integer power; negative exponents invert.
  Fq pow_signed(std::int64_t e) const {
    if (e >= 0) return pow(static_cast<u128>(e));
    return inverse().pow(static_cast<u128>(-e));
  }
  Fq inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in " + f_.describe());
    if (f_.is_prime_field()) {
      // extended Euclid on residues
      std::int64_t a = c_[0], m = f_.characteristic(), x0 = 1, x1 = 0;
      while (m) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m; a = m; m = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
      }
      std::int64_t p = f_.characteristic();
      return f_.from_int(((x0 % p) + p) % p);
    }
    return pow(f_.order() - 2);
  }
  /// x -> x^p.
  Fq frobenius() const { return pow(f_.characteristic()); }
  /// The unique p-th root.
  Fq pth_root() const { return pow(f_.order() / f_.characteristic()); }

  /// Nm_{F/S}(a) = a^{(|F|-1)/(|S|-1)} for a subfield S of the tower.
  Fq norm_to(const FqField& sub) const {
    if (!f_.contains(sub)) throw DomainError("norm target is not a subfield");
    if (is_zero()) return sub.zero();
    return pow((f_.order() - 1) / (sub.order() - 1)).restrict_to(sub);
  }
  /// Coordinates in a subfield; throws if the element does not lie there.
  Fq restrict_to(const FqField& sub) const {
    for (int i = sub.abs_degree(); i < f_.abs_degree(); ++i)
      if (c_[i]) throw DomainError("element does not lie in subfield " + sub.describe());
    Coords c{};
    for (int i = 0; i < sub.abs_degree(); ++i) c[i] = c_[i];
    return Fq(sub, c);
  }
  bool lies_in(const FqField& sub) const {
    for (int i = sub.abs_degree(); i < f_.abs_degree(); ++i)
      if (c_[i]) return false;
    return true;
  }

  /// Coefficient of theta^i over the immediate base.
  Fq component(int i) const {
    FqField b = f_.base();
    const int bd = b.abs_degree();
    Coords c{};
    for (int k = 0; k < bd; ++k) c[k] = c_[i * bd + k];
    return Fq(b, c);
  }

  /// Lexicographic order on coordinates, highest first.
  friend bool lex_less(const Fq& a, const Fq& b) {
    for (int i = a.f_.abs_degree() - 1; i >= 0; --i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  friend bool operator==(const Fq& a, const Fq& b) {
    if (!(a.f_ == b.f_)) return false;
    for (int i = 0; i < a.f_.abs_degree(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  std::string to_string() const;

private:
  void check(const Fq& o) const {
    if (f_.node() != o.f_.node() && !(f_ == o.f_))
      throw DomainError("field mismatch: " + f_.describe() + " vs " + o.f_.describe());
  }

  FqField f_;
  Coords c_{};
};

inline FqField FqField::extension(const FqField& base, const std::vector<Fq>& low_coeffs,
                                  std::string gen) {
  const int e = static_cast<int>(low_coeffs.size());
  if (e < 1) throw DomainError("extension degree must be at least 1");
  if (base.abs_degree() * e > kMaxDegree)
    throw DomainError("absolute field degree exceeds " + std::to_string(kMaxDegree));
  auto n = std::make_shared<detail::FieldNode>();
  n->p = base.characteristic();
  n->degree = e;
  n->abs_degree = base.abs_degree() * e;
  n->base = base.node_ptr();
  for (const Fq& c : low_coeffs) {
    if (!(c.field() == base)) throw DomainError("modulus coefficient not in base field");
    n->modulus.push_back(c.coords());
  }
  u128 ord = 1;
  for (int i = 0; i < e; ++i) {
    u128 next = ord * base.order();
    if (next / base.order() != ord || next > (u128(1) << 120)) throw DomainError("field too large");
    ord = next;
  }
  n->order = ord;
  n->gen = std::move(gen);
  return FqField(std::move(n));
}

inline Fq FqField::zero() const { return Fq(*this, Coords{}); }
inline Fq FqField::one() const {
  Coords c{};
  c[0] = 1;
  return Fq(*this, c);
}
inline Fq FqField::from_int(std::int64_t v) const {
  std::int64_t p = characteristic();
  Coords c{};
  c[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
  return Fq(*this, c);
}
inline Fq FqField::generator() const {
  if (is_prime_field()) return one();
  Coords c{};
  c[node_->base->abs_degree] = 1;
  return Fq(*this, c);
}
inline Fq FqField::embed(const Fq& sub) const {
  if (sub.field() == *this) return sub;
  if (!contains(sub.field())) throw DomainError("cannot embed " + sub.field().describe() + " into " + describe());
  return Fq(*this, sub.coords());
}
inline Fq FqField::element_at(u128 index) const {
  Coords c{};
  for (int i = 0; i < abs_degree(); ++i) {
    c[i] = static_cast<std::uint32_t>(index % characteristic());
    index /= characteristic();
  }
  return Fq(*this, c);
}
inline Fq FqField::random(std::mt19937_64& rng) const {
  Coords c{};
  std::uniform_int_distribution<std::uint32_t> dist(0, characteristic() - 1);
  for (int i = 0; i < abs_degree(); ++i) c[i] = dist(rng);
  return Fq(*this, c);
}
inline Fq FqField::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Fq a = random(rng);
    if (!a.is_zero()) return a;
  }
}
inline std::vector<Fq> FqField::elements() const {
  if (order() > 1'000'000) throw DomainError("field too large to enumerate");
  std::vector<Fq> out;
  for (u128 i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}
inline std::vector<Fq> FqField::modulus() const {
  std::vector<Fq> out;
  if (is_prime_field()) return out;
  FqField b = base();
  for (const Coords& c : node_->modulus) out.emplace_back(b, c);
  out.push_back(b.one());
  return out;
}

inline std::string Fq::to_string() const {
  if (f_.is_prime_field()) return std::to_string(c_[0]);
  std::string s;
  const std::string& g = f_.generator_name();
  for (int i = f_.degree() - 1; i >= 0; --i) {
    Fq ci = component(i);
    if (ci.is_zero()) continue;
    std::string cs = ci.to_string();
    bool compound = cs.find_first_of("+*") != std::string::npos;
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string mono = i == 1 ? g : g + "^" + std::to_string(i);
      if (ci.is_one()) term = mono;
      else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (!s.empty()) s += " + ";
    s += term;
  }
  return s.empty() ? "0" : s;
}

inline std::string FqField::describe() const {
  if (is_prime_field()) return "F_" + std::to_string(characteristic());
  std::string m;
  auto mod = modulus();
  for (int i = degree(); i >= 0; --i) {
    if (mod[i].is_zero()) continue;
    std::string cs = mod[i].to_string();
    std::string term;
    std::string mono = i == 0 ? "" : (i == 1 ? generator_name() : generator_name() + "^" + std::to_string(i));
    if (i == 0) term = cs;
    else if (mod[i].is_one()) term = mono;
    else term = (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
    if (!m.empty()) m += " + ";
    m += term;
  }
  return "F_" + u128_to_string(order()) + " = " + base().describe_short() + "[" + generator_name() + "]/(" + m + ")";
}

} // namespace adelic
