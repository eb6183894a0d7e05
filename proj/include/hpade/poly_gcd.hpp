#pragma once

#include <map>
#include <vector>

#include "hpade/polynomial.hpp"

namespace hpade {

namespace detail {

// Coefficients of p viewed as a polynomial in variable `var` over
// Z[other variables]: exponent of var -> coefficient polynomial (with the
// var slot zeroed, arity unchanged).
inline std::map<long, IntPoly> coefficients_in(const IntPoly& p, int var) {
  std::map<long, IntPoly> out;
  for (const auto& [m, c] : p.terms()) {
    long e = m.exp(var);
    Monomial stripped = m;
    stripped.set_exp(var, 0);
    auto [it, inserted] = out.try_emplace(e, IntPoly(p.arity()));
    it->second.add_term(stripped, c);
  }
  return out;
}

inline IntPoly leading_coefficient_in(const IntPoly& p, int var) {
  long d = p.degree_in(var);
  IntPoly lc(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<long>(m.exp(var)) == d) {
      Monomial stripped = m;
      stripped.set_exp(var, 0);
      lc.add_term(stripped, c);
    }
  }
  return lc;
}

IntPoly gcd2(const IntPoly& a, const IntPoly& b);

// gcd of the coefficients of p with respect to `var` (full polynomial
// content, integer part included).
inline IntPoly content_in(const IntPoly& p, int var) {
  IntPoly g(p.arity());
  for (const auto& [e, coeff] : coefficients_in(p, var)) {
    g = gcd2(g, coeff);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to `var` (deg_var b >= 0,
// b != 0).  Only used inside the primitive remainder sequence, so the
// implied lc(b)-power multiplier is irrelevant.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b, int var) {
  IntPoly r = a;
  const long db = b.degree_in(var);
  const IntPoly lcb = leading_coefficient_in(b, var);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    long dr = r.degree_in(var);
    IntPoly t = leading_coefficient_in(r, var) *
                IntPoly::variable(r.arity(), var,
                                  static_cast<uint32_t>(dr - db));
    r = lcb * r - t * b;
  }
  return r;
}

inline IntPoly gcd2(const IntPoly& a, const IntPoly& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("poly_gcd: arity mismatch");
  const int arity = a.arity();
  if (a.is_zero()) return b.sign_normalized();
  if (b.is_zero()) return a.sign_normalized();
  if (a.is_constant() || b.is_constant())
    return IntPoly::constant(arity, int_gcd(a.content(), b.content()));

  // Main variable: least index occurring in either operand.
  int var = -1;
  for (int v = 0; v < arity && var < 0; ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) var = v;

  const long da = a.degree_in(var);
  const long db = b.degree_in(var);
  if (da == 0) return gcd2(a, content_in(b, var));
  if (db == 0) return gcd2(b, content_in(a, var));

  IntPoly ca = content_in(a, var);
  IntPoly cb = content_in(b, var);
  IntPoly u = exact_div(a, ca);
  IntPoly v = exact_div(b, cb);
  if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);

  // Primitive remainder sequence in `var`.
  while (true) {
    IntPoly r = pseudo_remainder(u, v, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      // v-free remainder of v-primitive operands: the gcd is v-free, hence 1.
      v = IntPoly::constant(arity, 1);
      break;
    }
    u = v;
    v = exact_div(r, content_in(r, var));
  }
  IntPoly prim = exact_div(v, content_in(v, var));
  return (gcd2(ca, cb) * prim).sign_normalized();
}

}  // namespace detail

// Greatest common divisor (integer content included), normalized so that the
// leading coefficient under the canonical order is positive.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  return detail::gcd2(a, b);
}

inline IntPoly poly_gcd(const std::vector<IntPoly>& ps) {
  if (ps.empty()) throw PreconditionError("poly_gcd: empty input");
  IntPoly g = IntPoly::zero(ps.front().arity());
  for (const IntPoly& p : ps) {
    g = detail::gcd2(g, p);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  if (g.is_zero()) throw PreconditionError("poly_gcd: all inputs zero");
  return g;
}

}  // namespace hpade
