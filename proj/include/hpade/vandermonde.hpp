#pragma once

#include <numeric>
#include <vector>

#include "hpade/linalg.hpp"

namespace hpade {

// Sequence p_0(x), ..., p_{n-1}(x) of univariate integer polynomials.
struct PolySequence {
  std::vector<IntPoly> polys;

  explicit PolySequence(std::vector<IntPoly> ps) : polys(std::move(ps)) {
    if (polys.empty()) throw PreconditionError("PolySequence: empty");
    for (const IntPoly& p : polys)
      if (p.arity() != 1)
        throw PreconditionError("PolySequence: entries must be univariate");
  }

  int size() const { return static_cast<int>(polys.size()); }

  // deg p_i = i for all i (zero polynomial has degree -infinity and never
  // qualifies).
  bool is_graded() const {
    for (int i = 0; i < size(); ++i) {
      const IntPoly& p = polys[static_cast<size_t>(i)];
      if (p.is_zero() || p.total_degree() != i) return false;
    }
    return true;
  }
};

// Block sizes n_1, ..., n_m with n = sum n_j equal to the sequence length.
struct BlockSpec {
  std::vector<int> sizes;

  explicit BlockSpec(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw PreconditionError("BlockSpec: empty");
    for (int v : sizes)
      if (v < 1) throw PreconditionError("BlockSpec: sizes must be >= 1");
  }

  int block_count() const { return static_cast<int>(sizes.size()); }
  int total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
  }
  int max_size() const {
    int mx = 0;
    for (int v : sizes) mx = std::max(mx, v);
    return mx;
  }
};

namespace detail {

inline void check_vande_shapes(const PolySequence& seq, const BlockSpec& spec) {
  if (spec.total() != seq.size())
    throw DimensionMismatch("block sizes do not sum to sequence length");
}

}  // namespace detail

// prod_{i<j} (x_i - x_j)^{exponents(i,j)} in m variables.
template <typename ExpFn>
IntPoly difference_product(int m, ExpFn&& exponents) {
  IntPoly r = IntPoly::constant(m, 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      unsigned long e = exponents(i, j);
      if (e == 0) continue;
      r = r * pow(IntPoly::variable(m, i) - IntPoly::variable(m, j), e);
    }
  return r;
}

// Block matrix whose j-th block stacks p_i^{(k)}(x_j) for k = 0..n_j-1
// (derivatives downward from the undifferentiated row).
inline PolyMatrix build_case_a(const PolySequence& seq, const BlockSpec& spec) {
  detail::check_vande_shapes(seq, spec);
  const int n = seq.size();
  const int m = spec.block_count();
  PolyMatrix out(n, n, IntPoly::zero(m));
  int row = 0;
  for (int j = 0; j < m; ++j) {
    std::vector<IntPoly> deriv = seq.polys;  // univariate, differentiated in place
    for (int k = 0; k < spec.sizes[static_cast<size_t>(j)]; ++k) {
      for (int i = 0; i < n; ++i)
        out.at(row, i) = deriv[static_cast<size_t>(i)].lift_to(m, j);
      ++row;
      for (int i = 0; i < n; ++i)
        deriv[static_cast<size_t>(i)] =
            deriv[static_cast<size_t>(i)].derivative(0);
    }
  }
  return out;
}

// Variant differentiating from the top: block j holds derivative orders
// n_max-1 down to n_max-n_j.
inline PolyMatrix build_case_b(const PolySequence& seq, const BlockSpec& spec) {
  detail::check_vande_shapes(seq, spec);
  const int n = seq.size();
  const int m = spec.block_count();
  const int nmax = spec.max_size();
  // Precompute all derivative orders 0..nmax-1.
  std::vector<std::vector<IntPoly>> d(static_cast<size_t>(nmax));
  d[0] = seq.polys;
  for (int k = 1; k < nmax; ++k) {
    d[static_cast<size_t>(k)].reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      d[static_cast<size_t>(k)].push_back(
          d[static_cast<size_t>(k - 1)][static_cast<size_t>(i)].derivative(0));
  }
  PolyMatrix out(n, n, IntPoly::zero(m));
  int row = 0;
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < spec.sizes[static_cast<size_t>(j)]; ++k) {
      int order = nmax - 1 - k;
      for (int i = 0; i < n; ++i)
        out.at(row, i) = d[static_cast<size_t>(order)][static_cast<size_t>(i)]
                             .lift_to(m, j);
      ++row;
    }
  }
  return out;
}

// det(case A matrix) divided exactly by prod (x_i - x_j)^{n_i n_j}.  A
// NotDivisible escape falsifies the factor claim on this instance.
inline IntPoly certify_case_a_factor(const PolySequence& seq,
                                     const BlockSpec& spec) {
  PolyMatrix a = build_case_a(seq, spec);
  IntPoly d = det_bareiss(a);
  IntPoly factor = difference_product(
      spec.block_count(), [&](int i, int j) {
        return static_cast<unsigned long>(spec.sizes[static_cast<size_t>(i)]) *
               static_cast<unsigned long>(spec.sizes[static_cast<size_t>(j)]);
      });
  return exact_div(d, factor);
}

// Case B analogue with exponents min(n_i^2, n_j^2).
inline IntPoly certify_case_b_factor(const PolySequence& seq,
                                     const BlockSpec& spec) {
  PolyMatrix b = build_case_b(seq, spec);
  IntPoly d = det_bareiss(b);
  IntPoly factor = difference_product(
      spec.block_count(), [&](int i, int j) {
        unsigned long ni = static_cast<unsigned long>(
            spec.sizes[static_cast<size_t>(i)]);
        unsigned long nj = static_cast<unsigned long>(
            spec.sizes[static_cast<size_t>(j)]);
        return std::min(ni * ni, nj * nj);
      });
  return exact_div(d, factor);
}

// Closed form a_{0,0} a_{1,1} ... a_{n-1,n-1} prod_{i<j} (x_j - x_i) for a
// graded sequence (deg p_i = i) with all block sizes 1.
inline IntPoly vandermonde_closed_form(const PolySequence& seq) {
  if (!seq.is_graded())
    throw PreconditionError("vandermonde_closed_form: requires deg p_i = i");
  const int n = seq.size();
  Int lead = 1;
  for (int i = 0; i < n; ++i)
    lead *= seq.polys[static_cast<size_t>(i)].leading_coefficient();
  IntPoly vd = difference_product(n, [](int, int) { return 1ul; });
  // difference_product gives prod (x_i - x_j); flip to prod (x_j - x_i).
  long pairs = static_cast<long>(n) * (n - 1) / 2;
  if (pairs % 2 != 0) lead = -lead;
  return vd * lead;
}

// The constant F with det A = F * prod (x_i - x_j)^{n_i n_j} for a graded
// sequence; non-constant quotient falsifies the claim.
inline IntPoly constant_factor(const PolySequence& seq, const BlockSpec& spec) {
  if (!seq.is_graded())
    throw PreconditionError("constant_factor: requires deg p_i = i");
  IntPoly q = certify_case_a_factor(seq, spec);
  if (!q.is_constant())
    throw NonConstantQuotient("constant_factor: quotient has positive degree");
  return q;
}

// Falling-factorial sequence (x]_0, (x]_1, ..., (x]_{n-1}.
inline PolySequence falling_factorial_sequence(int n) {
  std::vector<IntPoly> ps;
  IntPoly x = IntPoly::variable(1, 0);
  IntPoly cur = IntPoly::constant(1, 1);
  for (int k = 0; k < n; ++k) {
    ps.push_back(cur);
    cur = cur * (x - IntPoly::constant(1, k));
  }
  return PolySequence(std::move(ps));
}

// Monomial sequence x^0, ..., x^{n-1}.
inline PolySequence monomial_sequence(int n) {
  std::vector<IntPoly> ps;
  for (int k = 0; k < n; ++k)
    ps.push_back(IntPoly::variable(1, 0, static_cast<uint32_t>(k)));
  return PolySequence(std::move(ps));
}

}  // namespace hpade
