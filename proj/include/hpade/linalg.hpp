#pragma once

#include <utility>
#include <vector>

#include "hpade/matrix.hpp"
#include "hpade/rational_poly.hpp"

namespace hpade {

namespace ring {

inline bool is_zero(const Int& v) { return v == 0; }
inline bool is_zero(const IntPoly& p) { return p.is_zero(); }

inline Int zero_like(const Int&) { return Int(0); }
inline IntPoly zero_like(const IntPoly& p) { return IntPoly::zero(p.arity()); }

inline Int one_like(const Int&) { return Int(1); }
inline IntPoly one_like(const IntPoly& p) {
  return IntPoly::constant(p.arity(), 1);
}

inline Int exact_quot(const Int& a, const Int& d) {
  if (!int_divisible(a, d)) throw NotDivisible("integer division not exact");
  return int_divexact(a, d);
}
inline IntPoly exact_quot(const IntPoly& a, const IntPoly& d) {
  return exact_div(a, d);
}

}  // namespace ring

enum class DetAlgorithm { cofactor, fraction_free };

// Cofactor expansion along the first active row.  Exponential; retained as an
// independent oracle for small matrices.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionMismatch("det_cofactor: non-square");
  const int n = m.rows();
  if (n == 0) return ring::one_like(m.sample());
  std::vector<int> cols(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = j;

  auto rec = [&](auto&& self, int row, std::vector<int>& active) -> T {
    if (active.size() == 1) return m.at(row, active[0]);
    T acc = ring::zero_like(m.sample());
    for (size_t k = 0; k < active.size(); ++k) {
      const T& entry = m.at(row, active[k]);
      if (ring::is_zero(entry)) continue;
      int col = active[k];
      active.erase(active.begin() + static_cast<long>(k));
      T sub = self(self, row + 1, active);
      active.insert(active.begin() + static_cast<long>(k), col);
      T contrib = entry * sub;
      if (k % 2 == 0)
        acc = acc + contrib;
      else
        acc = acc - contrib;
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

// Fraction-free (Bareiss) determinant.  Pivoting picks the first nonzero
// entry in column order; row swaps are tracked for sign.  All intermediate
// divisions are exact in the coefficient ring.
template <typename T>
T det_bareiss(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionMismatch("det_bareiss: non-square");
  const int n = m.rows();
  if (n == 0) return ring::one_like(m.sample());
  Matrix<T> a = m;
  T prev = ring::one_like(m.sample());
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (!ring::is_zero(a.at(i, k))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return ring::zero_like(m.sample());
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = ring::exact_quot(
            a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = ring::zero_like(m.sample());
    }
    prev = a.at(k, k);
  }
  T d = a.at(n - 1, n - 1);
  return sign > 0 ? d : static_cast<T>(-d);
}

template <typename T>
T det(const Matrix<T>& m, DetAlgorithm alg = DetAlgorithm::fraction_free) {
  return alg == DetAlgorithm::cofactor ? det_cofactor(m) : det_bareiss(m);
}

// Determinant of a matrix over Q[a1..am] by clearing denominators row by row.
inline RatPoly det_rational(const Matrix<RatPoly>& m) {
  if (!m.is_square()) throw DimensionMismatch("det_rational: non-square");
  const int n = m.rows();
  if (n == 0) return RatPoly(IntPoly::constant(0, 1));
  const int arity = m.at(0, 0).arity();
  PolyMatrix cleared(n, n, IntPoly::zero(arity));
  Int scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) l = int_lcm(l, m.at(i, j).den());
    for (int j = 0; j < n; ++j)
      cleared.at(i, j) = m.at(i, j).num() * int_divexact(l, m.at(i, j).den());
    scale *= l;
  }
  return RatPoly(det_bareiss(cleared), scale);
}

// Determinant of the square submatrix given by a full-height column
// selection.
template <typename T>
T maximal_minor(const Matrix<T>& m, const ColumnSelection& cols) {
  if (static_cast<int>(cols.size()) != m.rows())
    throw DimensionMismatch("maximal_minor: selection size != rows");
  for (int c : cols.indices)
    if (c >= m.cols()) throw DimensionMismatch("maximal_minor: column range");
  return det_bareiss(m.select_columns(cols));
}

// All maximal minors, one per size-rows column selection, in lexicographic
// selection order.
template <typename T>
std::vector<std::pair<ColumnSelection, T>> all_maximal_minors(
    const Matrix<T>& m) {
  if (m.rows() > m.cols())
    throw DimensionMismatch("all_maximal_minors: rows > cols");
  std::vector<std::pair<ColumnSelection, T>> out;
  for (const ColumnSelection& sel : ColumnSelection::all(m.cols(), m.rows()))
    out.emplace_back(sel, maximal_minor(m, sel));
  return out;
}

namespace detail {

// Parity of the permutation sorting the concatenation of disjoint increasing
// lists; +1 for even, -1 for odd.
inline int concatenation_sign(const std::vector<std::vector<int>>& lists) {
  std::vector<int> flat;
  for (const auto& l : lists) flat.insert(flat.end(), l.begin(), l.end());
  long inversions = 0;
  for (size_t i = 0; i < flat.size(); ++i)
    for (size_t j = i + 1; j < flat.size(); ++j)
      if (flat[i] > flat[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Determinant via the generalised minor expansion: the rows are partitioned
// into blocks, and the determinant is the signed sum over tuples of disjoint
// column subsets of products of block minors.
template <typename T>
T block_minor_expansion(const Matrix<T>& m,
                        const std::vector<std::vector<int>>& row_blocks) {
  if (!m.is_square())
    throw DimensionMismatch("block_minor_expansion: non-square");
  const int n = m.rows();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (const auto& block : row_blocks) {
    if (block.empty())
      throw PreconditionError("block_minor_expansion: empty block");
    for (size_t i = 0; i < block.size(); ++i) {
      int r = block[i];
      if (r < 0 || r >= n || seen[static_cast<size_t>(r)])
        throw PreconditionError("block_minor_expansion: not a partition");
      if (i + 1 < block.size() && block[i] >= block[i + 1])
        throw PreconditionError("block_minor_expansion: block not increasing");
      seen[static_cast<size_t>(r)] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw PreconditionError("block_minor_expansion: not a partition");

  const int row_sign = detail::concatenation_sign(row_blocks);
  T total = ring::zero_like(m.sample());
  std::vector<std::vector<int>> chosen(row_blocks.size());
  std::vector<bool> used(static_cast<size_t>(n), false);

  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == row_blocks.size()) {
      int s = detail::concatenation_sign(chosen);
      T prod = ring::one_like(m.sample());
      for (size_t b = 0; b < row_blocks.size(); ++b)
        prod = prod * det_bareiss(m.submatrix(row_blocks[b], chosen[b]));
      if (s > 0)
        total = total + prod;
      else
        total = total - prod;
      return;
    }
    // Enumerate increasing |block k|-subsets of the unused columns.
    const size_t need = row_blocks[k].size();
    std::vector<int>& pick = chosen[k];
    pick.clear();
    auto comb = [&](auto&& cself, int start) -> void {
      if (pick.size() == need) {
        self(self, k + 1);
        return;
      }
      for (int c = start; c < n; ++c) {
        if (used[static_cast<size_t>(c)]) continue;
        used[static_cast<size_t>(c)] = true;
        pick.push_back(c);
        cself(cself, c + 1);
        pick.pop_back();
        used[static_cast<size_t>(c)] = false;
      }
    };
    comb(comb, 0);
  };
  rec(rec, 0);
  return row_sign > 0 ? total : static_cast<T>(-total);
}

// Rank over the fraction field, by fraction-free elimination with column
// skipping.
template <typename T>
int rank_fraction_free(const Matrix<T>& m) {
  Matrix<T> a = m;
  const int rows = a.rows(), cols = a.cols();
  T prev = ring::one_like(a.sample());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!ring::is_zero(a.at(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) a.swap_rows(pivot, r);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a.at(i, j) = ring::exact_quot(
            a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j), prev);
      }
      a.at(i, c) = ring::zero_like(a.sample());
    }
    prev = a.at(r, c);
    ++r;
  }
  return r;
}

inline int rank_over_fractions(const PolyMatrix& m) {
  return rank_fraction_free(m);
}
inline int rank_over_fractions(const IntMatrix& m) {
  return rank_fraction_free(m);
}

// det(m * m^T) for rows <= cols; a non-negative integer whose square root is
// only taken at report time.
inline Int gram_det(const IntMatrix& m) {
  if (m.rows() > m.cols()) throw DimensionMismatch("gram_det: rows > cols");
  return det_bareiss(m * m.transposed());
}

namespace detail {
inline std::string entry_str(const Int& v) { return v.get_str(); }
inline std::string entry_str(const IntPoly& p) { return to_string(p); }
inline std::string entry_str(const RatPoly& p) { return p.str(); }
}  // namespace detail

// Textual matrix form: one row per line, canonical entries, tab separated.
template <typename T>
std::string matrix_to_text(const Matrix<T>& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out += '\t';
      out += detail::entry_str(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace hpade
