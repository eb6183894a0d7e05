#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hpade/linalg.hpp"
#include "hpade/poly_gcd.hpp"
#include "hpade/series.hpp"
#include "hpade/tame.hpp"
#include "hpade/vandermonde.hpp"

namespace hpade {

// Entry convention for the wild coefficient matrix.  The binomial form has
// entries C(L+i_j, h) a_j^{L-h}; the falling-factorial form scales column h
// by h!, giving (L+i_j]_h a_j^{L-h}.  The reference tables use the
// falling-factorial form; the divisibility certificates run on the binomial
// form.  Column scaling by integers changes only the integer content of the
// minors, so the primitive part of their gcd is convention independent.
enum class Convention { binomial, falling_factorial };

inline const char* to_string(Convention c) {
  return c == Convention::binomial ? "binomial" : "falling_factorial";
}

// Parameter bundle for the wild system: 1 <= nu_j <= l_j, M = sum nu_j <=
// L = sum l_j.  Symbolic mode works over Z[a1..am]; specialized mode
// substitutes a point of pairwise distinct nonzero integers.
struct WildProblem {
  std::vector<int> l;
  std::vector<int> nu;
  Convention convention = Convention::binomial;
  std::optional<IntegerPoint> point;

  WildProblem(std::vector<int> l_, std::vector<int> nu_,
              Convention conv = Convention::binomial,
              std::optional<IntegerPoint> pt = {})
      : l(std::move(l_)), nu(std::move(nu_)), convention(conv),
        point(std::move(pt)) {
    if (l.empty()) throw PreconditionError("WildProblem: need m >= 1");
    if (nu.size() != l.size())
      throw PreconditionError("WildProblem: nu and l sizes differ");
    for (size_t j = 0; j < l.size(); ++j) {
      if (nu[j] < 1) throw PreconditionError("WildProblem: nu_j must be >= 1");
      if (nu[j] > l[j]) throw PreconditionError("WildProblem: nu_j > l_j");
    }
    if (point && point->arity() != static_cast<int>(l.size()))
      throw PreconditionError("WildProblem: point arity mismatch");
  }

  static WildProblem twin(std::vector<int> l_,
                          Convention conv = Convention::binomial) {
    std::vector<int> nu_ = l_;
    return WildProblem(std::move(l_), std::move(nu_), conv);
  }

  int m() const { return static_cast<int>(l.size()); }
  int L() const {
    int s = 0;
    for (int v : l) s += v;
    return s;
  }
  int M() const {
    int s = 0;
    for (int v : nu) s += v;
    return s;
  }
  bool symbolic() const { return !point.has_value(); }
  bool is_twin() const { return nu == l; }
};

namespace detail {

inline Int wild_entry_coeff(int L, int i, int h, Convention conv) {
  return conv == Convention::binomial
             ? binomial(static_cast<unsigned long>(L + i),
                        static_cast<unsigned long>(h))
             : falling_factorial(L + i, static_cast<unsigned long>(h));
}

}  // namespace detail

// The M x (L+1) coefficient matrix over Z[a1..am]; block j holds rows
// i = 1..nu_j with entries coeff(L+i, h) * a_j^{L-h}.
inline PolyMatrix build_v_poly(const WildProblem& p) {
  const int m = p.m();
  const int L = p.L();
  PolyMatrix v(p.M(), L + 1, IntPoly::zero(m));
  int row = 0;
  for (int j = 0; j < m; ++j) {
    for (int i = 1; i <= p.nu[static_cast<size_t>(j)]; ++i, ++row) {
      for (int h = 0; h <= L; ++h) {
        Int c = detail::wild_entry_coeff(L, i, h, p.convention);
        v.at(row, h) =
            IntPoly::variable(m, j, static_cast<uint32_t>(L - h)) * c;
      }
    }
  }
  return v;
}

// Specialized integer matrix at the problem's point.
inline IntMatrix build_v_int(const WildProblem& p) {
  if (!p.point) throw PreconditionError("build_v_int: no point set");
  const int L = p.L();
  IntMatrix v(p.M(), L + 1, Int(0));
  int row = 0;
  for (int j = 0; j < p.m(); ++j) {
    for (int i = 1; i <= p.nu[static_cast<size_t>(j)]; ++i, ++row) {
      for (int h = 0; h <= L; ++h) {
        v.at(row, h) =
            detail::wild_entry_coeff(L, i, h, p.convention) *
            int_pow(p.point->value(j), static_cast<unsigned long>(L - h));
      }
    }
  }
  return v;
}

// prod_j a_j^C(k_j,2) * prod_{i<j} (a_i - a_j)^{min(k_i^2, k_j^2)} -- the
// common polynomial factor of all maximal minors, for exponents k = nu.
inline IntPoly claimed_minor_factor(int m, const std::vector<int>& k) {
  IntPoly f = IntPoly::constant(m, 1);
  for (int j = 0; j < m; ++j) {
    unsigned long e = static_cast<unsigned long>(
        binomial(static_cast<unsigned long>(k[static_cast<size_t>(j)]), 2)
            .get_ui());
    if (e > 0) f = f * IntPoly::variable(m, j, static_cast<uint32_t>(e));
  }
  f = f * difference_product(m, [&](int i, int j) {
        unsigned long ki =
            static_cast<unsigned long>(k[static_cast<size_t>(i)]);
        unsigned long kj =
            static_cast<unsigned long>(k[static_cast<size_t>(j)]);
        return std::min(ki * ki, kj * kj);
      });
  return f;
}

// The twin-case common factor T of the L x L minors (nu = l).
inline IntPoly common_factor(const WildProblem& p) {
  if (!p.symbolic())
    throw PreconditionError("common_factor: symbolic mode required");
  if (!p.is_twin())
    throw PreconditionError("common_factor: requires nu = l");
  return claimed_minor_factor(p.m(), p.l);
}

// Report order for minors: V[i] order (column i removed) in the square case
// M = L, lexicographic selection order otherwise.
inline std::vector<ColumnSelection> minor_report_order(const WildProblem& p) {
  const int L = p.L();
  const int M = p.M();
  if (M == L) {
    std::vector<ColumnSelection> out;
    for (int i = 0; i <= L; ++i)
      out.push_back(ColumnSelection::excluding(L + 1, i));
    return out;
  }
  return ColumnSelection::all(L + 1, M);
}

// Minor gcd report over Z[a1..am].
struct GcdReport {
  Convention convention = Convention::binomial;
  std::vector<ColumnSelection> selections;
  std::vector<IntPoly> minors;
  IntPoly gcd;                    // integer content included
  std::vector<IntPoly> quotients; // minor / gcd, same order as selections
  IntPoly claimed_factor;
  bool divisibility_ok = false;   // claimed_factor | gcd
};

// Integer specialization of the report.
struct IntGcdReport {
  Convention convention = Convention::binomial;
  std::vector<ColumnSelection> selections;
  std::vector<Int> minors;
  Int gcd = 0;                    // gcd of all maximal minors, >= 0
  std::vector<Int> quotients;
  Int claimed_factor = 0;
  bool divisibility_ok = false;
};

inline GcdReport minor_gcd_report_symbolic(const WildProblem& p) {
  if (!p.symbolic())
    throw PreconditionError("minor_gcd_report_symbolic: point is set");
  PolyMatrix v = build_v_poly(p);
  GcdReport rep;
  rep.convention = p.convention;
  rep.selections = minor_report_order(p);
  for (const ColumnSelection& sel : rep.selections)
    rep.minors.push_back(maximal_minor(v, sel));
  rep.gcd = poly_gcd(rep.minors);
  for (const IntPoly& mi : rep.minors)
    rep.quotients.push_back(exact_div(mi, rep.gcd));
  rep.claimed_factor = claimed_minor_factor(p.m(), p.nu);
  rep.divisibility_ok = divides(rep.claimed_factor, rep.gcd);
  if (!rep.divisibility_ok)
    throw DivisibilityFalsified(
        "minor_gcd_report: claimed factor does not divide the minor gcd");
  return rep;
}

inline IntGcdReport minor_gcd_report_specialized(const WildProblem& p) {
  if (p.symbolic())
    throw PreconditionError("minor_gcd_report_specialized: no point");
  IntMatrix v = build_v_int(p);
  IntGcdReport rep;
  rep.convention = p.convention;
  rep.selections = minor_report_order(p);
  for (const ColumnSelection& sel : rep.selections)
    rep.minors.push_back(maximal_minor(v, sel));
  Int g = 0;
  for (const Int& mi : rep.minors) g = int_gcd(g, mi);
  rep.gcd = g;
  if (g != 0)
    for (const Int& mi : rep.minors) rep.quotients.push_back(int_divexact(mi, g));
  rep.claimed_factor =
      claimed_minor_factor(p.m(), p.nu).eval(*p.point);
  // Every integer divides 0, so a zero gcd (all minors vanish) cannot
  // falsify the claim.
  rep.divisibility_ok =
      g == 0 || rep.claimed_factor == 0 || int_divisible(g, rep.claimed_factor);
  if (!rep.divisibility_ok)
    throw DivisibilityFalsified(
        "minor_gcd_report: claimed integer factor does not divide D");
  return rep;
}

// Twin solution (nu = l, M = L): minors, common factor, tau coefficients and
// the denominator/numerator polynomials with their order certificates.
struct WildSolution {
  std::vector<IntPoly> minors;  // V[0..L] in the problem's convention
  IntPoly common;               // T
  std::vector<IntPoly> tau;     // tau_i = (-1)^i V[i] / T
  std::vector<IntPoly> b0;      // coefficient of t^i: (L!/i!) tau_i
  std::vector<std::vector<RatPoly>> numerators;    // B_j coefficients in t
  std::vector<OrderCertificate> remainder_orders;  // ord >= L + l_j + 1
};

inline WildSolution twin_solve(const WildProblem& p) {
  if (!p.is_twin())
    throw PreconditionError("twin_solve: requires nu = l (use the Siegel "
                            "solver for M < L)");
  if (!p.symbolic())
    throw PreconditionError("twin_solve: symbolic mode required");
  const int m = p.m();
  const int L = p.L();
  PolyMatrix v = build_v_poly(p);
  WildSolution sol;
  sol.common = common_factor(p);
  Int lfac = factorial(static_cast<unsigned long>(L));
  for (int i = 0; i <= L; ++i) {
    IntPoly minor = maximal_minor(v, ColumnSelection::excluding(L + 1, i));
    IntPoly tau = exact_div(minor, sol.common);  // NotDivisible falsifies
    if (i % 2 != 0) tau = -tau;
    sol.minors.push_back(std::move(minor));
    sol.b0.push_back(tau * int_divexact(
                               lfac, factorial(static_cast<unsigned long>(i))));
    sol.tau.push_back(std::move(tau));
  }

  std::vector<RatPoly> b_rat;
  for (const IntPoly& q : sol.b0) b_rat.emplace_back(q);
  for (int j = 0; j < m; ++j) {
    const long claimed = L + p.l[static_cast<size_t>(j)] + 1;
    const int n_max = certificate_window(claimed, L);
    TruncSeries<RatPoly> prod = exp_product(b_rat, j, m, n_max);
    std::vector<RatPoly> numer(prod.coeffs.begin(),
                               prod.coeffs.begin() + (L + 1));
    sol.numerators.push_back(numer);
    TruncSeries<RatPoly> rem = subtract_polynomial(prod, numer);
    sol.remainder_orders.push_back(order_at_zero(rem, claimed));
  }
  return sol;
}

// Reference-table normalization of the twin solution: binomial-convention
// minors divided by their full gcd, weighted by (-1)^i L!/i!, sign fixed so
// the i = 0 entry has positive leading coefficient.  This is the twin
// denominator's coefficient vector in lowest terms.
struct TwinTableOutput {
  GcdReport report;                     // binomial convention
  std::vector<IntPoly> coefficients;    // entry i = coefficient of t^i
};

inline TwinTableOutput twin_table_output(const std::vector<int>& l) {
  WildProblem p = WildProblem::twin(l, Convention::binomial);
  TwinTableOutput out;
  out.report = minor_gcd_report_symbolic(p);
  const int L = p.L();
  Int lfac = factorial(static_cast<unsigned long>(L));
  for (int i = 0; i <= L; ++i) {
    IntPoly q = out.report.quotients[static_cast<size_t>(i)] *
                int_divexact(lfac, factorial(static_cast<unsigned long>(i)));
    if (i % 2 != 0) q = -q;
    out.coefficients.push_back(std::move(q));
  }
  // The L!/i! weights can reintroduce a common integer content; reduce to
  // the canonical lowest-terms representative of the ray.
  out.coefficients = normalize_coefficient_vector(out.coefficients);
  return out;
}

// Exact-division certificate: every sampled maximal minor is divisible by
// the claimed factor.  All minors are checked when there are at most 64;
// otherwise `trials` random selections are drawn with the given seed.
struct MinorFactorCertificate {
  long checked = 0;
  bool exhaustive = false;
  IntPoly claimed_factor;
};

inline MinorFactorCertificate certify_minor_common_factor(const WildProblem& p,
                                                          int trials,
                                                          uint64_t seed) {
  if (!p.symbolic())
    throw PreconditionError("certify_minor_common_factor: symbolic only");
  PolyMatrix v = build_v_poly(p);
  const int L = p.L();
  const int M = p.M();
  MinorFactorCertificate cert;
  cert.claimed_factor = claimed_minor_factor(p.m(), p.nu);

  Int count = binomial(static_cast<unsigned long>(L + 1),
                       static_cast<unsigned long>(M));
  std::vector<ColumnSelection> picks;
  if (count <= 64) {
    picks = ColumnSelection::all(L + 1, M);
    cert.exhaustive = true;
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      std::vector<int> pool(static_cast<size_t>(L + 1));
      for (int i = 0; i <= L; ++i) pool[static_cast<size_t>(i)] = i;
      std::vector<int> idx;
      for (int need = M; need > 0; --need) {
        std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
        size_t at = d(rng);
        idx.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<long>(at));
      }
      std::sort(idx.begin(), idx.end());
      picks.push_back(ColumnSelection(idx));
    }
  }
  for (const ColumnSelection& sel : picks) {
    IntPoly minor = maximal_minor(v, sel);
    try {
      exact_div(minor, cert.claimed_factor);
    } catch (const NotDivisible&) {
      throw DivisibilityFalsified(
          "certify_minor_common_factor: claimed factor misses a minor");
    }
    ++cert.checked;
  }
  return cert;
}

struct RankReport {
  int rank = 0;
  bool rightmost_minor_nonzero = false;
};

// Rank over the fraction field.  In symbolic mode the rightmost maximal
// minor is checked first; it being nonzero already settles rank = M.
inline RankReport rank_check(const WildProblem& p) {
  const int L = p.L();
  const int M = p.M();
  std::vector<int> right;
  for (int c = L + 1 - M; c <= L; ++c) right.push_back(c);
  ColumnSelection rightmost{right};
  RankReport rep;
  if (p.symbolic()) {
    PolyMatrix v = build_v_poly(p);
    rep.rightmost_minor_nonzero = !maximal_minor(v, rightmost).is_zero();
    rep.rank = rep.rightmost_minor_nonzero ? M : rank_over_fractions(v);
  } else {
    IntMatrix v = build_v_int(p);
    rep.rightmost_minor_nonzero = maximal_minor(v, rightmost) != 0;
    rep.rank = rank_over_fractions(v);
  }
  return rep;
}

}  // namespace hpade
