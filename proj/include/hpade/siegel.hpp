#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hpade/linalg.hpp"
#include "hpade/series.hpp"
#include "hpade/wild.hpp"

namespace hpade {

// An upper bound of the form radicand^(1/root) with radicand an exact
// non-negative rational.  Decimal rendering rounds outward (up), so the
// printed value never under-reports the bound.
class RootBound {
 public:
  RootBound() : radicand_(0), root_(1) {}
  RootBound(Rat radicand, unsigned long root)
      : radicand_(std::move(radicand)), root_(root) {
    if (root_ == 0) throw PreconditionError("RootBound: zeroth root");
    if (radicand_ < 0) throw PreconditionError("RootBound: negative radicand");
  }

  const Rat& radicand() const { return radicand_; }
  unsigned long root() const { return root_; }

  // True iff the bound is exactly rational; the value is then returned via
  // exact_value().
  bool is_exact() const {
    RootResult n = iroot_floor(Int(radicand_.get_num()), root_);
    if (!n.exact) return false;
    RootResult d = iroot_floor(Int(radicand_.get_den()), root_);
    return d.exact;
  }

  Rat exact_value() const {
    RootResult n = iroot_floor(Int(radicand_.get_num()), root_);
    RootResult d = iroot_floor(Int(radicand_.get_den()), root_);
    if (!n.exact || !d.exact)
      throw PreconditionError("RootBound: value is irrational");
    return make_rat(n.root, d.root);
  }

  // value <= x, decided exactly.
  bool value_le(const Int& x) const {
    if (x < 0) return false;
    return Rat(int_pow(x, root_)) >= radicand_;
  }

  bool value_lt(const Rat& x) const {
    if (x <= 0) return radicand_ == 0 && x > 0;
    Rat p = x;
    for (unsigned long i = 1; i < root_; ++i) p *= x;
    return radicand_ < p;
  }

  // Outward-rounded decimal string with `sig` significant digits; exact
  // values are rendered minimally ("54", "3.5").
  std::string decimal(int sig = 12) const {
    if (radicand_ == 0) return "0";
    const Int num = radicand_.get_num();
    const Int den = radicand_.get_den();

    // Magnitude: least E with value < 10^E.
    auto lt_pow10 = [&](long e) {
      long ek = e * static_cast<long>(root_);
      if (ek >= 0) return num < den * int_pow(10, static_cast<unsigned long>(ek));
      return num * int_pow(10, static_cast<unsigned long>(-ek)) < den;
    };
    long E = 1;
    while (!lt_pow10(E)) ++E;
    while (lt_pow10(E - 1)) --E;

    // d = ceil(value * 10^(sig-E)), i.e. least d with d^root * Y >= X.
    long shift = (static_cast<long>(sig) - E) * static_cast<long>(root_);
    Int X = num, Y = den;
    if (shift >= 0)
      X *= int_pow(10, static_cast<unsigned long>(shift));
    else
      Y *= int_pow(10, static_cast<unsigned long>(-shift));
    Int qceil;
    mpz_cdiv_q(qceil.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
    Int d = iroot_floor(qceil, root_).root;
    while (d > 0 && int_pow(d - 1, root_) * Y >= X) --d;
    while (int_pow(d, root_) * Y < X) ++d;

    if (d == int_pow(10, static_cast<unsigned long>(sig))) {
      d = int_pow(10, static_cast<unsigned long>(sig - 1));
      ++E;
    }
    bool exact = int_pow(d, root_) * Y == X;

    std::string digits = d.get_str();
    std::string out;
    if (E <= 0) {
      out = "0.";
      out.append(static_cast<size_t>(-E), '0');
      out += digits;
    } else if (E >= static_cast<long>(digits.size())) {
      out = digits;
      out.append(static_cast<size_t>(E) - digits.size(), '0');
      return out;  // integer magnitude; nothing to strip
    } else {
      out = digits.substr(0, static_cast<size_t>(E)) + "." +
            digits.substr(static_cast<size_t>(E));
    }
    if (exact) {
      while (!out.empty() && out.back() == '0') out.pop_back();
      if (!out.empty() && out.back() == '.') out.pop_back();
    }
    return out;
  }

 private:
  Rat radicand_;
  unsigned long root_;
};

// floor((prod of row 1-norms)^(1/(N-M))): the classical existence bound for
// a nonzero integer kernel vector.
inline Int mahler_bound(const IntMatrix& v) {
  const int M = v.rows(), N = v.cols();
  if (M >= N) throw PreconditionError("mahler_bound: requires M < N");
  Int prod = 1;
  for (int i = 0; i < M; ++i) {
    Int norm = 0;
    for (int j = 0; j < N; ++j) norm += int_abs(v.at(i, j));
    if (norm == 0) throw PreconditionError("mahler_bound: zero row");
    prod *= norm;
  }
  return iroot_floor(prod, static_cast<unsigned long>(N - M)).root;
}

// The f-g bound (f^{M L} g^{M^2/2})^{1/(L+1-M)} for a specialized problem
// with M < L, kept exact as radicand f^{2ML} g^{M^2} under the
// 2(L+1-M)-th root.
struct FgBound {
  Rat f;
  Rat g;
  RootBound bound;
};

inline FgBound fg_bound(const WildProblem& p) {
  if (p.symbolic()) throw PreconditionError("fg_bound: specialized mode only");
  const int L = p.L();
  const int M = p.M();
  if (M >= L)
    throw PreconditionError("fg_bound: requires M < L (twin case excluded)");
  FgBound out;
  out.f = 0;
  out.g = 0;
  for (int j = 0; j < p.m(); ++j) {
    Int a = int_abs(p.point->value(j));
    Rat fj(a + 1);
    Rat gj = make_rat(a + 1, a);
    if (fj > out.f) out.f = fj;
    if (gj > out.g) out.g = gj;
  }
  Rat radicand = 1;
  unsigned long fe = 2ul * static_cast<unsigned long>(M) *
                     static_cast<unsigned long>(L);
  for (unsigned long i = 0; i < fe; ++i) radicand *= out.f;
  unsigned long ge = static_cast<unsigned long>(M) *
                     static_cast<unsigned long>(M);
  for (unsigned long i = 0; i < ge; ++i) radicand *= out.g;
  out.bound = RootBound(radicand, 2ul * static_cast<unsigned long>(L + 1 - M));
  return out;
}

// sqrt(det(V V^T)) / D with D the gcd of all maximal minors; requires full
// row rank over Q.
struct BvBound {
  Int gram;
  Int divisor;  // D
  RootBound bound;
};

inline BvBound bombieri_vaaler_bound(const IntMatrix& v) {
  if (rank_over_fractions(v) != v.rows())
    throw RankDeficient("bombieri_vaaler_bound: rank below row count");
  BvBound out;
  out.gram = gram_det(v);
  Int d = 0;
  for (const auto& [sel, minor] : all_maximal_minors(v)) d = int_gcd(d, minor);
  out.divisor = d;
  out.bound = RootBound(make_rat(out.gram, d * d), 2);
  return out;
}

// Exhaustive sup-norm shell search for a nonzero integer kernel vector.
// Returns the lexicographically least minimal-norm solution, sign-normalized
// so its first nonzero coordinate is positive.  The search is guaranteed to
// succeed for shells up to the Mahler bound; exhausting `norm_budget` or the
// candidate cap first raises BudgetExceeded.
//
// When the rightmost M x M block is invertible, only the leading N-M
// coordinates are enumerated (with the same row-sum pruning) and the trailing
// block is solved exactly through the precomputed adjugate: a kernel vector
// is determined by its head, so minimality and lexicographic order are
// decided on the heads alone.  A singular rightmost block falls back to full
// coordinate enumeration.
inline std::vector<Int> find_small_kernel(const IntMatrix& v,
                                          std::optional<Int> norm_budget = {}) {
  const int M = v.rows(), N = v.cols();
  if (M >= N) throw PreconditionError("find_small_kernel: requires M < N");
  const Int mahler = mahler_bound(v);
  Int budget = norm_budget.value_or(std::min(mahler, Int(10000)));
  if (budget > mahler) budget = mahler;  // Lemma guarantee: no need to go past
  const long node_cap = 10000000;
  long nodes = 0;

  // Suffix 1-norm of each row, for pruning partial sums.
  std::vector<std::vector<Int>> suffix(static_cast<size_t>(M),
                                       std::vector<Int>(static_cast<size_t>(N) + 1, Int(0)));
  for (int i = 0; i < M; ++i)
    for (int j = N - 1; j >= 0; --j)
      suffix[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          suffix[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] +
          int_abs(v.at(i, j));

  // Rightmost M x M block and, when invertible, its adjugate.
  const int K = N - M;  // head length
  std::vector<int> tail_cols;
  for (int c = K; c < N; ++c) tail_cols.push_back(c);
  std::vector<int> all_rows;
  for (int i = 0; i < M; ++i) all_rows.push_back(i);
  IntMatrix pivot = v.submatrix(all_rows, tail_cols);
  Int pivot_det = det_bareiss(pivot);
  IntMatrix adj(M, M, Int(0));
  if (pivot_det != 0 && M > 0) {
    for (int i = 0; i < M; ++i) {
      for (int j = 0; j < M; ++j) {
        std::vector<int> rs, cs;
        for (int r = 0; r < M; ++r)
          if (r != j) rs.push_back(r);
        for (int c = 0; c < M; ++c)
          if (c != i) cs.push_back(c);
        Int cof = det_bareiss(pivot.submatrix(rs, cs));
        adj.at(i, j) = ((i + j) % 2 == 0) ? cof : Int(-cof);
      }
    }
  }

  std::vector<Int> x(static_cast<size_t>(N), Int(0));
  std::vector<Int> partial(static_cast<size_t>(M), Int(0));

  // Solutions come in +- pairs and every nonzero kernel vector has a nonzero
  // head when the pivot block is invertible, so the search may fix the first
  // nonzero coordinate to be positive.  Depth-first in increasing value
  // order then visits the sign-normalized solutions in lexicographic order,
  // and the first one found at the smallest feasible shell is the witness.
  for (Int s = 1; s <= budget; ++s) {
    auto prune = [&](int idx) {
      for (int i = 0; i < M; ++i) {
        if (int_abs(partial[static_cast<size_t>(i)]) >
            suffix[static_cast<size_t>(i)][static_cast<size_t>(idx)] * s)
          return true;
      }
      return false;
    };

    auto solve_tail = [&]() -> bool {
      // pivot * tail = -partial; tail = -adj * partial / det.
      for (int i = 0; i < M; ++i) {
        Int num = 0;
        for (int r = 0; r < M; ++r)
          num -= adj.at(i, r) * partial[static_cast<size_t>(r)];
        if (!int_divisible(num, pivot_det)) return false;
        Int t = int_divexact(num, pivot_det);
        if (int_abs(t) > s) return false;
        x[static_cast<size_t>(K + i)] = t;
      }
      return true;
    };

    auto dfs_head = [&](auto&& self, int idx, bool zero_prefix) -> bool {
      if (++nodes > node_cap)
        throw BudgetExceeded("find_small_kernel: candidate cap exhausted");
      if (idx == K) return !zero_prefix && solve_tail();
      if (prune(idx)) return false;
      Int lo = zero_prefix ? Int(0) : Int(-s);
      for (Int val = lo; val <= s; ++val) {
        x[static_cast<size_t>(idx)] = val;
        for (int i = 0; i < M; ++i)
          partial[static_cast<size_t>(i)] += v.at(i, idx) * val;
        if (self(self, idx + 1, zero_prefix && val == 0)) return true;
        for (int i = 0; i < M; ++i)
          partial[static_cast<size_t>(i)] -= v.at(i, idx) * val;
      }
      x[static_cast<size_t>(idx)] = 0;
      return false;
    };

    auto dfs_full = [&](auto&& self, int idx, bool has_shell,
                        bool zero_prefix) -> bool {
      if (++nodes > node_cap)
        throw BudgetExceeded("find_small_kernel: candidate cap exhausted");
      if (idx == N) {
        if (!has_shell || zero_prefix) return false;
        for (int i = 0; i < M; ++i)
          if (partial[static_cast<size_t>(i)] != 0) return false;
        return true;
      }
      if (prune(idx)) return false;
      Int lo = zero_prefix ? Int(0) : Int(-s);
      for (Int val = lo; val <= s; ++val) {
        x[static_cast<size_t>(idx)] = val;
        for (int i = 0; i < M; ++i)
          partial[static_cast<size_t>(i)] += v.at(i, idx) * val;
        if (self(self, idx + 1, has_shell || int_abs(val) == s,
                 zero_prefix && val == 0))
          return true;
        for (int i = 0; i < M; ++i)
          partial[static_cast<size_t>(i)] -= v.at(i, idx) * val;
      }
      x[static_cast<size_t>(idx)] = 0;
      return false;
    };

    bool found = pivot_det != 0 ? dfs_head(dfs_head, 0, true)
                                : dfs_full(dfs_full, 0, false, true);
    if (found) return x;
  }
  throw BudgetExceeded("find_small_kernel: no solution within norm budget " +
                       budget.get_str());
}

struct SiegelReport {
  Int mahler;
  FgBound fg;
  bool rank_ok = false;
  Int bv_divisor = 0;   // D, when rank_ok
  Int gram = 0;         // det(V V^T), when rank_ok
  RootBound bv;         // sqrt(gram)/D, when rank_ok
  std::vector<Int> solution;
  Int norm = 0;
};

struct SiegelPadeSolution {
  SiegelReport report;
  std::vector<Int> b0;                             // coefficient of t^h
  std::vector<std::vector<Rat>> numerators;        // B_j coefficients
  std::vector<OrderCertificate> remainder_orders;  // ord >= L + nu_j + 1
};

// End-to-end underdetermined solver (M < L): build the binomial integer
// matrix, search a small kernel vector, assemble B_0 = sum c_h (L!/h!) t^h
// and the numerator truncations, and certify the remainder orders.
inline SiegelPadeSolution siegel_pade_solve(const WildProblem& p,
                                            std::optional<Int> norm_budget = {}) {
  if (p.symbolic())
    throw PreconditionError("siegel_pade_solve: specialized mode only");
  const int L = p.L();
  const int M = p.M();
  if (M >= L)
    throw PreconditionError(
        "siegel_pade_solve: requires M < L (use the twin solver)");
  WildProblem bp(p.l, p.nu, Convention::binomial, p.point);
  IntMatrix v = build_v_int(bp);

  SiegelPadeSolution sol;
  sol.report.mahler = mahler_bound(v);
  sol.report.fg = fg_bound(bp);
  sol.report.rank_ok = rank_over_fractions(v) == M;
  if (sol.report.rank_ok) {
    BvBound bv = bombieri_vaaler_bound(v);
    sol.report.gram = bv.gram;
    sol.report.bv_divisor = bv.divisor;
    sol.report.bv = bv.bound;
  }
  sol.report.solution = find_small_kernel(v, norm_budget);
  for (const Int& c : sol.report.solution)
    sol.report.norm = std::max(sol.report.norm, int_abs(c));

  // Hard assertion of the existence lemma's guarantee.
  for (int i = 0; i < M; ++i) {
    Int acc = 0;
    for (int j = 0; j < v.cols(); ++j)
      acc += v.at(i, j) * sol.report.solution[static_cast<size_t>(j)];
    if (acc != 0)
      throw Error("siegel_pade_solve: returned vector is not in the kernel");
  }
  if (sol.report.norm < 1 || sol.report.norm > sol.report.mahler)
    throw Error("siegel_pade_solve: solution norm outside [1, mahler bound]");

  Int lfac = factorial(static_cast<unsigned long>(L));
  std::vector<Rat> b_rat;
  for (int h = 0; h <= L; ++h) {
    Int coeff = sol.report.solution[static_cast<size_t>(h)] *
                int_divexact(lfac, factorial(static_cast<unsigned long>(h)));
    sol.b0.push_back(coeff);
    b_rat.emplace_back(coeff);
  }
  for (int j = 0; j < p.m(); ++j) {
    const long claimed = L + p.nu[static_cast<size_t>(j)] + 1;
    const int n_max = certificate_window(claimed, L);
    TruncSeries<Rat> prod = exp_product(b_rat, p.point->value(j), n_max);
    std::vector<Rat> numer(prod.coeffs.begin(), prod.coeffs.begin() + (L + 1));
    sol.numerators.push_back(numer);
    TruncSeries<Rat> rem = subtract_polynomial(prod, numer);
    sol.remainder_orders.push_back(order_at_zero(rem, claimed));
  }
  return sol;
}

}  // namespace hpade
