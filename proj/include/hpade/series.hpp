#pragma once

#include <vector>

#include "hpade/rational_poly.hpp"

namespace hpade {

namespace detail {
inline bool coeff_is_zero(const Rat& q) { return q == 0; }
inline bool coeff_is_zero(const RatPoly& p) { return p.is_zero(); }
}  // namespace detail

// Truncated formal power series in t with exact coefficients (RatPoly in
// symbolic mode, Rat in specialized mode).
template <typename C>
struct TruncSeries {
  int truncation_order = 0;           // N_max
  std::vector<C> coeffs;              // c_0 .. c_{N_max}

  const C& coeff(int n) const { return coeffs.at(static_cast<size_t>(n)); }
};

// Exact truncation of B(t) * e^{a_j t} where B has RatPoly coefficients and
// a_j is the variable with index `var`:  r_N = sum_{h+n=N} b_h a_j^n / n!.
inline TruncSeries<RatPoly> exp_product(const std::vector<RatPoly>& b, int var,
                                        int arity, int n_max) {
  if (n_max + 1 < static_cast<int>(b.size()))
    throw PreconditionError("exp_product: truncation below deg B");
  TruncSeries<RatPoly> s;
  s.truncation_order = n_max;
  s.coeffs.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    RatPoly acc = RatPoly::zero(arity);
    for (int h = 0; h < static_cast<int>(b.size()) && h <= n; ++h) {
      int k = n - h;
      RatPoly term(IntPoly::variable(arity, var, static_cast<uint32_t>(k)),
                   factorial(static_cast<unsigned long>(k)));
      acc = acc + b[static_cast<size_t>(h)] * term;
    }
    s.coeffs.push_back(acc);
  }
  return s;
}

// Specialized variant: B has rational coefficients and the exponent base is
// the integer a.
inline TruncSeries<Rat> exp_product(const std::vector<Rat>& b, const Int& a,
                                    int n_max) {
  if (n_max + 1 < static_cast<int>(b.size()))
    throw PreconditionError("exp_product: truncation below deg B");
  TruncSeries<Rat> s;
  s.truncation_order = n_max;
  s.coeffs.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rat acc = 0;
    for (int h = 0; h < static_cast<int>(b.size()) && h <= n; ++h) {
      int k = n - h;
      acc += b[static_cast<size_t>(h)] *
             make_rat(int_pow(a, static_cast<unsigned long>(k)),
                      factorial(static_cast<unsigned long>(k)));
    }
    s.coeffs.push_back(acc);
  }
  return s;
}

// Subtract a polynomial (given by its coefficient list) from a series.
template <typename C>
TruncSeries<C> subtract_polynomial(const TruncSeries<C>& s,
                                   const std::vector<C>& poly) {
  if (static_cast<int>(poly.size()) > s.truncation_order + 1)
    throw PreconditionError("subtract_polynomial: degree beyond truncation");
  TruncSeries<C> r = s;
  for (size_t h = 0; h < poly.size(); ++h)
    r.coeffs[h] = r.coeffs[h] - poly[h];
  return r;
}

// Result of an order-of-vanishing check.  first_nonzero == -1 means every
// coefficient up to the truncation order vanished ("ord >= N_max + 1").
struct OrderCertificate {
  long first_nonzero = -1;
  int truncation_order = 0;
  long claimed_min = 0;

  bool order_known_finite() const { return first_nonzero >= 0; }
};

// Verify that coefficients 0..claimed_min-1 all vanish; report the first
// nonzero index within the truncation window.  A nonzero coefficient below
// claimed_min falsifies the order claim.
template <typename C>
OrderCertificate order_at_zero(const TruncSeries<C>& s, long claimed_min) {
  if (claimed_min > static_cast<long>(s.truncation_order) + 1)
    throw PreconditionError("order_at_zero: claimed order beyond truncation");
  OrderCertificate cert;
  cert.truncation_order = s.truncation_order;
  cert.claimed_min = claimed_min;
  for (int n = 0; n <= s.truncation_order; ++n) {
    if (!detail::coeff_is_zero(s.coeffs[static_cast<size_t>(n)])) {
      if (n < claimed_min)
        throw CoefficientNonZero(
            n, "order_at_zero: coefficient " + std::to_string(n) +
                   " nonzero below claimed order " + std::to_string(claimed_min));
      cert.first_nonzero = n;
      return cert;
    }
  }
  return cert;
}

// Truncation window for order certificates: enough extra coefficients beyond
// the claim to usually witness finiteness of the order as well.
inline int certificate_window(long claimed_min, int l_total) {
  return static_cast<int>(claimed_min) + std::max(4, l_total);
}

}  // namespace hpade
