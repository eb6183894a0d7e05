#pragma once

#include <optional>
#include <vector>

#include "hpade/linalg.hpp"
#include "hpade/poly_gcd.hpp"
#include "hpade/series.hpp"
#include "hpade/vandermonde.hpp"

namespace hpade {

// Parameter bundle for the classical system: l0 >= 0 and l_1..l_m >= 1,
// with L = sum l_j and L0 = l0 + L.  l0 = 0 is accepted by the expansion and
// solver; the closed-form constant and the factorization certificate require
// l0 >= 1 (their factorial expressions presuppose it).
struct TameProblem {
  int l0;
  std::vector<int> l;

  TameProblem(int l0_, std::vector<int> l_) : l0(l0_), l(std::move(l_)) {
    if (l0 < 0) throw PreconditionError("TameProblem: l0 must be >= 0");
    if (l.empty()) throw PreconditionError("TameProblem: need m >= 1");
    for (int v : l)
      if (v < 1) throw PreconditionError("TameProblem: l_j must be >= 1");
  }

  int m() const { return static_cast<int>(l.size()); }
  int L() const {
    int s = 0;
    for (int v : l) s += v;
    return s;
  }
  int L0() const { return l0 + L(); }
};

// Coefficients sigma_i of w^{l0} prod_j (a_j - w)^{l_j} as a polynomial in w;
// index i runs over 0..L0 with sigma_i = 0 outside [l0, L0].
inline std::vector<IntPoly> sigma_coefficients(const TameProblem& p) {
  const int m = p.m();
  const int L0 = p.L0();
  std::vector<IntPoly> c(static_cast<size_t>(L0) + 1, IntPoly::zero(m));
  c[static_cast<size_t>(p.l0)] = IntPoly::constant(m, 1);
  int top = p.l0;
  for (int j = 0; j < m; ++j) {
    IntPoly alpha = IntPoly::variable(m, j);
    for (int rep = 0; rep < p.l[static_cast<size_t>(j)]; ++rep) {
      ++top;
      for (int i = top; i >= 0; --i) {
        IntPoly next = c[static_cast<size_t>(i)] * alpha;
        if (i > 0) next -= c[static_cast<size_t>(i - 1)];
        c[static_cast<size_t>(i)] = std::move(next);
      }
    }
  }
  return c;
}

// The L x (L+1) coefficient matrix with entries a_j^{L0-k-h} / (L0-k-h)!
// (zero when the exponent is negative); block j holds rows k = 0..l_j-1.
inline Matrix<RatPoly> build_u(const TameProblem& p) {
  const int m = p.m();
  const int L = p.L();
  const int L0 = p.L0();
  Matrix<RatPoly> u(L, L + 1, RatPoly::zero(m));
  int row = 0;
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < p.l[static_cast<size_t>(j)]; ++k, ++row) {
      for (int h = 0; h <= L; ++h) {
        long e = L0 - k - h;
        if (e < 0) continue;
        u.at(row, h) =
            RatPoly(IntPoly::variable(m, j, static_cast<uint32_t>(e)),
                    factorial(static_cast<unsigned long>(e)));
      }
    }
  }
  return u;
}

namespace detail {

// Row-scaled integer version of the coefficient matrix: row (j,k) times
// (L0-k)! has entries (L0-k]_h a_j^{L0-k-h}.  Returns the matrix and the
// accumulated scale prod_rows (L0-k)!.
struct ClearedU {
  PolyMatrix mat;
  Int scale;
};

inline ClearedU build_u_cleared(const TameProblem& p) {
  const int m = p.m();
  const int L = p.L();
  const int L0 = p.L0();
  ClearedU out{PolyMatrix(L, L + 1, IntPoly::zero(m)), Int(1)};
  int row = 0;
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < p.l[static_cast<size_t>(j)]; ++k, ++row) {
      out.scale *= factorial(static_cast<unsigned long>(L0 - k));
      for (int h = 0; h <= L; ++h) {
        long e = L0 - k - h;
        if (e < 0) continue;
        Int c = falling_factorial(L0 - k, static_cast<unsigned long>(h));
        out.mat.at(row, h) =
            IntPoly::variable(m, j, static_cast<uint32_t>(e)) * c;
      }
    }
  }
  return out;
}

}  // namespace detail

// The L+1 maximal minors U[h] (column h removed), h = 0..L, over Q[a1..am].
inline std::vector<RatPoly> tame_minors(const TameProblem& p) {
  detail::ClearedU cu = detail::build_u_cleared(p);
  const int L = p.L();
  std::vector<RatPoly> out;
  out.reserve(static_cast<size_t>(L) + 1);
  for (int h = 0; h <= L; ++h) {
    IntPoly minor =
        maximal_minor(cu.mat, ColumnSelection::excluding(L + 1, h));
    out.emplace_back(std::move(minor), cu.scale);
  }
  return out;
}

// The rational constant F with U[0] = F * prod a_i^{l0 l_i} *
// prod_{i<j} (a_i - a_j)^{l_i l_j}, evaluated as a product of block
// determinant values.  Requires l0 >= 1.
inline Rat tame_minor_constant(const TameProblem& p) {
  if (p.l0 < 1)
    throw PreconditionError("tame_minor_constant: requires l0 >= 1");
  const int L0 = p.L0();
  Rat f = 1;
  int offset = 0;  // l_1 + ... + l_{j-1}
  for (int j = 0; j < p.m(); ++j) {
    int lj = p.l[static_cast<size_t>(j)];
    for (int k = 1; k <= lj; ++k) {
      int c = offset + k;
      f /= Rat(factorial(static_cast<unsigned long>(L0 - c)));
    }
    for (int h = 1; h <= lj; ++h)
      for (int k = h + 1; k <= lj; ++k) f *= Rat(h - k);
    offset += lj;
  }
  return f;
}

// prod a_i^{l0 l_i} * prod_{i<j} (a_i - a_j)^{l_i l_j}, the full polynomial
// factor of every minor of the coefficient matrix.
inline IntPoly tame_minor_polynomial_factor(const TameProblem& p) {
  const int m = p.m();
  IntPoly w = IntPoly::constant(m, 1);
  for (int i = 0; i < m; ++i) {
    unsigned long e = static_cast<unsigned long>(p.l0) *
                      static_cast<unsigned long>(p.l[static_cast<size_t>(i)]);
    if (e > 0) w = w * IntPoly::variable(m, i, static_cast<uint32_t>(e));
  }
  w = w * difference_product(m, [&](int i, int j) {
        return static_cast<unsigned long>(p.l[static_cast<size_t>(i)]) *
               static_cast<unsigned long>(p.l[static_cast<size_t>(j)]);
      });
  return w;
}

struct TameFactorizationCertificate {
  bool ok = false;
  Rat constant;     // the m+1 block-constant entering every minor
  RatPoly scale;    // proportionality between minor vector and coefficients
};

// Verify the complete factorization of all L+1 minors:
//   U[h] = (-1)^h (L0-h)! sigma_{L0-h} * (-1)^L F * prod a_i^{l0 l_i}
//          * prod (a_i - a_j)^{l_i l_j}
// with F the block constant of the extended problem (one extra block of
// size 1).  Exact equality for every h; requires l0 >= 1.
inline TameFactorizationCertificate certify_minor_factorization(
    const TameProblem& p) {
  if (p.l0 < 1)
    throw PreconditionError("certify_minor_factorization: requires l0 >= 1");
  const int L = p.L();
  const int L0 = p.L0();
  std::vector<int> lext = p.l;
  lext.push_back(1);
  Rat f_ext = tame_minor_constant(TameProblem(p.l0, lext));

  IntPoly w = tame_minor_polynomial_factor(p);
  std::vector<IntPoly> sigma = sigma_coefficients(p);
  std::vector<RatPoly> minors = tame_minors(p);

  TameFactorizationCertificate cert;
  Rat signed_f = (L % 2 == 0) ? f_ext : Rat(-f_ext);
  cert.constant = f_ext;
  cert.scale = RatPoly(w) * signed_f;
  for (int h = 0; h <= L; ++h) {
    IntPoly core = sigma[static_cast<size_t>(L0 - h)] *
                   factorial(static_cast<unsigned long>(L0 - h));
    RatPoly rhs = RatPoly(core * w) * signed_f;
    if (h % 2 != 0) rhs = -rhs;
    if (minors[static_cast<size_t>(h)] != rhs)
      throw IdentityFalsified(
          "certify_minor_factorization: minor " + std::to_string(h) +
          " does not match its closed form");
  }
  cert.ok = true;
  return cert;
}

// Full output of the classical solver.
struct TameSolution {
  std::vector<IntPoly> sigma;       // sigma_0 .. sigma_L0
  std::vector<IntPoly> b;           // b_h = (L0-h)! sigma_{L0-h}, h = 0..L
  std::vector<IntPoly> b_normalized;  // b / full gcd, leading sign fixed
  std::vector<RatPoly> minors;      // U[0..L]
  bool cramer_proportional = false; // minor vector == scale * (+-b) vector
  RatPoly cramer_scale;             // the global scalar when proportional
  bool has_block_constant = false;  // set when l0 >= 1
  Rat block_constant;               // F with U[0] = F * polynomial factor
  std::vector<std::vector<RatPoly>> numerators;       // A_j coefficients in t
  std::vector<OrderCertificate> remainder_orders;     // per j, ord >= L0+1
  bool specialized = false;
  std::vector<Int> b_at_point;
  std::vector<std::vector<Rat>> numerators_at_point;
  std::vector<OrderCertificate> remainder_orders_at_point;
};

// Normalize a coefficient vector: divide by the full gcd (integer content
// included) and fix the sign so the first nonzero entry has positive leading
// coefficient.
inline std::vector<IntPoly> normalize_coefficient_vector(
    const std::vector<IntPoly>& v) {
  IntPoly g = poly_gcd(v);
  std::vector<IntPoly> out;
  out.reserve(v.size());
  for (const IntPoly& e : v) out.push_back(exact_div(e, g));
  for (const IntPoly& e : out) {
    if (e.is_zero()) continue;
    if (e.leading_coefficient() < 0)
      for (IntPoly& x : out) x = -x;
    break;
  }
  return out;
}

inline TameSolution tame_solve(const TameProblem& p,
                               const std::optional<IntegerPoint>& point = {}) {
  const int m = p.m();
  const int L = p.L();
  const int L0 = p.L0();
  if (point && point->arity() != m)
    throw ArityMismatch("tame_solve: point arity mismatch");

  TameSolution sol;
  sol.sigma = sigma_coefficients(p);
  for (int h = 0; h <= L; ++h)
    sol.b.push_back(sol.sigma[static_cast<size_t>(L0 - h)] *
                    factorial(static_cast<unsigned long>(L0 - h)));
  sol.b_normalized = normalize_coefficient_vector(sol.b);
  sol.minors = tame_minors(p);
  if (p.l0 >= 1) {
    sol.has_block_constant = true;
    sol.block_constant = tame_minor_constant(p);
  }

  // Cramer cross-check: [U[0] : -U[1] : ... ] is one global scalar times the
  // explicit coefficient vector.
  sol.cramer_scale = sol.minors[0].divided_by(RatPoly(sol.b[0]));
  sol.cramer_proportional = true;
  for (int h = 0; h <= L && sol.cramer_proportional; ++h) {
    RatPoly lhs = sol.minors[static_cast<size_t>(h)];
    if (h % 2 != 0) lhs = -lhs;
    if (lhs != sol.cramer_scale * RatPoly(sol.b[static_cast<size_t>(h)]))
      sol.cramer_proportional = false;
  }

  std::vector<RatPoly> b_rat;
  for (const IntPoly& q : sol.b) b_rat.emplace_back(q);
  for (int j = 0; j < m; ++j) {
    const int lj = p.l[static_cast<size_t>(j)];
    const long claimed = L0 + 1;
    const int n_max = certificate_window(claimed, L);
    TruncSeries<RatPoly> prod = exp_product(b_rat, j, m, n_max);
    std::vector<RatPoly> numer(prod.coeffs.begin(),
                               prod.coeffs.begin() + (L0 - lj + 1));
    sol.numerators.push_back(numer);
    TruncSeries<RatPoly> rem = subtract_polynomial(prod, numer);
    sol.remainder_orders.push_back(order_at_zero(rem, claimed));
  }

  if (point) {
    sol.specialized = true;
    std::vector<Rat> b_spec;
    for (const IntPoly& q : sol.b) {
      sol.b_at_point.push_back(q.eval(*point));
      b_spec.emplace_back(sol.b_at_point.back());
    }
    for (int j = 0; j < m; ++j) {
      const int lj = p.l[static_cast<size_t>(j)];
      const long claimed = L0 + 1;
      const int n_max = certificate_window(claimed, L);
      TruncSeries<Rat> prod = exp_product(b_spec, point->value(j), n_max);
      std::vector<Rat> numer(prod.coeffs.begin(),
                             prod.coeffs.begin() + (L0 - lj + 1));
      sol.numerators_at_point.push_back(numer);
      TruncSeries<Rat> rem = subtract_polynomial(prod, numer);
      sol.remainder_orders_at_point.push_back(order_at_zero(rem, claimed));
    }
  }
  return sol;
}

}  // namespace hpade
