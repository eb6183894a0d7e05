#pragma once

#include <initializer_list>
#include <vector>

#include "hpade/errors.hpp"
#include "hpade/integers.hpp"
#include "hpade/polynomial.hpp"

namespace hpade {

// Strictly increasing 0-based column indices e1 < ... < eM.
struct ColumnSelection {
  std::vector<int> indices;

  ColumnSelection() = default;
  explicit ColumnSelection(std::vector<int> idx) : indices(std::move(idx)) {
    for (size_t i = 0; i + 1 < indices.size(); ++i)
      if (indices[i] >= indices[i + 1])
        throw PreconditionError("ColumnSelection: not strictly increasing");
    if (!indices.empty() && indices.front() < 0)
      throw PreconditionError("ColumnSelection: negative index");
  }

  size_t size() const { return indices.size(); }

  bool operator==(const ColumnSelection& o) const { return indices == o.indices; }

  // All k-subsets of {0..n-1} in lexicographic order.
  static std::vector<ColumnSelection> all(int n, int k) {
    if (k < 0 || k > n) throw PreconditionError("ColumnSelection::all: bad k");
    std::vector<ColumnSelection> out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
      out.push_back(ColumnSelection(cur));
      int i = k - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++cur[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
  }

  // The selection keeping every column of an n-column matrix except `skip`.
  static ColumnSelection excluding(int n, int skip) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i)
      if (i != skip) idx.push_back(i);
    return ColumnSelection(std::move(idx));
  }
};

// Dense rectangular matrix over an exact coefficient type (Int, IntPoly or
// RatPoly).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows < 0 || cols < 0)
      throw PreconditionError("Matrix: negative dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw DimensionMismatch("Matrix: ragged initializer");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int i, int j) { return data_[index(i, j)]; }
  const T& at(int i, int j) const { return data_[index(i, j)]; }

  Matrix submatrix(const std::vector<int>& row_idx,
                   const std::vector<int>& col_idx) const {
    Matrix out(static_cast<int>(row_idx.size()),
               static_cast<int>(col_idx.size()), sample());
    for (size_t i = 0; i < row_idx.size(); ++i)
      for (size_t j = 0; j < col_idx.size(); ++j)
        out.at(static_cast<int>(i), static_cast<int>(j)) =
            at(row_idx[i], col_idx[j]);
    return out;
  }

  Matrix select_columns(const ColumnSelection& sel) const {
    std::vector<int> all_rows(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) all_rows[static_cast<size_t>(i)] = i;
    return submatrix(all_rows, sel.indices);
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_, sample());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("Matrix: product shape");
    Matrix out(rows_, o.cols_, sample());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) {
        T acc = at(i, 0) * o.at(0, j);
        for (int k = 1; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
        out.at(i, j) = acc;
      }
    return out;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!(data_[i] == o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // A zero-valued element matching the entry shape (arity for polynomials).
  T sample() const {
    if (!data_.empty()) return zero_like(data_.front());
    return T();
  }

 private:
  static T zero_like(const T& v) {
    if constexpr (std::is_same_v<T, IntPoly>) {
      return IntPoly::zero(v.arity());
    } else if constexpr (std::is_same_v<T, Int>) {
      (void)v;
      return Int(0);
    } else {
      return T::zero(v.arity());
    }
  }

  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw DimensionMismatch("Matrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }

  int rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using PolyMatrix = Matrix<IntPoly>;

}  // namespace hpade
