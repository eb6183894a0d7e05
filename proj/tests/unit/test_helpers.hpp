#pragma once

#include <random>

#include "hpade/hpade.hpp"

namespace hpade::testing {

// Seeded random sparse polynomial; may come out zero.
inline IntPoly random_poly(std::mt19937_64& rng, int arity, int max_deg,
                           int terms, int coeff_range) {
  std::uniform_int_distribution<int> cdist(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> edist(0, max_deg);
  IntPoly p(arity);
  for (int t = 0; t < terms; ++t) {
    Monomial m(arity);
    for (int v = 0; v < arity; ++v)
      m.set_exp(v, static_cast<uint32_t>(edist(rng)));
    p.add_term(m, Int(cdist(rng)));
  }
  return p;
}

inline IntPoly random_nonzero_poly(std::mt19937_64& rng, int arity,
                                   int max_deg, int terms, int coeff_range) {
  while (true) {
    IntPoly p = random_poly(rng, arity, max_deg, terms, coeff_range);
    if (!p.is_zero()) return p;
  }
}

inline IntegerPoint random_point(std::mt19937_64& rng, int arity, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<Int> vals;
  while (static_cast<int>(vals.size()) < arity) {
    Int v(dist(rng));
    if (v == 0) continue;
    bool dup = false;
    for (const Int& w : vals) dup = dup || w == v;
    if (!dup) vals.push_back(v);
  }
  return IntegerPoint(vals);
}

}  // namespace hpade::testing
