#pragma once

#include <gmpxx.h>

#include <string>

#include "hpade/errors.hpp"

namespace hpade {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Falling factorial (n]_k = n (n-1) ... (n-k+1), with (n]_0 = 1.
inline Int falling_factorial(long n, unsigned long k) {
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= Int(n) - Int(i);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool int_divisible(const Int& a, const Int& d) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient a/d; caller must know d | a.
inline Int int_divexact(const Int& a, const Int& d) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

// floor(x^(1/k)) for x >= 0.  Second member is true when the root is exact.
struct RootResult {
  Int root;
  bool exact;
};

inline RootResult iroot_floor(const Int& x, unsigned long k) {
  if (x < 0) throw PreconditionError("iroot_floor: negative radicand");
  if (k == 0) throw PreconditionError("iroot_floor: zeroth root");
  RootResult res;
  int exact = mpz_root(res.root.get_mpz_t(), x.get_mpz_t(), k);
  res.exact = exact != 0;
  return res;
}

// Smallest d >= 0 with d^k >= x (x >= 0).
inline Int iroot_ceil(const Int& x, unsigned long k) {
  RootResult f = iroot_floor(x, k);
  return f.exact ? f.root : f.root + 1;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_abs(const Int& a) { return a >= 0 ? a : Int(-a); }

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace hpade
