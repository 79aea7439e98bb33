#pragma once

#include "adelic/base/ratfunc.hpp"

#include <random>

namespace adelic {

/// Uniform polynomial of degree <= max_deg, nonzero.
inline Poly random_poly(const FqField& k, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  while (true) {
    const int d = deg(rng);
    std::vector<Fq> c;
    for (int i = 0; i <= d; ++i) c.push_back(k.random(rng));
    Poly p(k, std::move(c));
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(const FqField& k, int max_deg, std::mt19937_64& rng) {
  return RatFunc(random_poly(k, max_deg, rng), random_poly(k, max_deg, rng));
}

} // namespace adelic
