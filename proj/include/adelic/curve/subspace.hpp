#pragma once

// Sparse subspaces of a coordinate space over F_q, kept in echelon form.
// A vector is a map from coordinate index to a nonzero coefficient; the
// pivot of a row is its lowest index and is normalized to 1.

#include "adelic/base/field.hpp"

#include <map>
#include <vector>

namespace adelic {

using SparseVec = std::map<int, Fq>;

inline void axpy(SparseVec& y, const Fq& a, const SparseVec& x) {
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

class SubspaceBasis {
public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(FqField f) : f_(std::move(f)) {}

  const FqField& field() const { return f_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

  /// Reduces v against every pivot it touches; zero iff v is in the span.
  SparseVec reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) {
        ++it;
        continue;
      }
      const int idx = it->first;
      axpy(v, -it->second, r->second);
      it = v.upper_bound(idx);
    }
    return v;
  }
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns false when it was already there.
  bool insert(SparseVec v) {
    while (!v.empty()) {
      auto r = rows_.find(v.begin()->first);
      if (r == rows_.end()) break;
      axpy(v, -v.begin()->second, r->second);
    }
    if (v.empty()) return false;
    const Fq inv = v.begin()->second.inverse();
    for (auto& [i, c] : v) c *= inv;
    rows_.emplace(v.begin()->first, std::move(v));
    return true;
  }
  void insert_unit(int i) { insert(SparseVec{{i, f_.one()}}); }

  bool contains_all(const SubspaceBasis& o) const {
    for (const auto& [p, r] : o.rows_)
      if (!contains(r)) return false;
    return true;
  }
  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.dim() == b.dim() && a.contains_all(b);
  }

  friend SubspaceBasis operator+(SubspaceBasis a, const SubspaceBasis& b) {
    for (const auto& [p, r] : b.rows_) a.insert(r);
    return a;
  }

  /// Zassenhaus: echelonize rows (u|u) and (v|0); the rows with pivot in
  /// the second block span the intersection.
  static SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    constexpr int kShift = 1 << 29;
    SubspaceBasis z(a.f_);
    for (const auto& [p, r] : a.rows_) {
      SparseVec v = r;
      for (const auto& [i, c] : r) v.emplace(i + kShift, c);
      z.insert(std::move(v));
    }
    for (const auto& [p, r] : b.rows_) z.insert(r);
    SubspaceBasis out(a.f_);
    for (const auto& [p, r] : z.rows_) {
      if (p < kShift) continue;
      SparseVec v;
      for (const auto& [i, c] : r) v.emplace(i - kShift, c);
      out.insert(std::move(v));
    }
    return out;
  }

  /// Vectors supported in a coordinate set given by a predicate on indices.
  template <class Pred>
  static SubspaceBasis coordinate(const FqField& f, const std::vector<int>& ambient, Pred keep) {
    SubspaceBasis s(f);
    for (int i : ambient)
      if (keep(i)) s.insert_unit(i);
    return s;
  }

private:
  FqField f_;
  std::map<int, SparseVec> rows_;
};

} // namespace adelic
