#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "torusfill/checked.hpp"

namespace torusfill {

/// Dense row-major integer matrix. Shape is fixed at construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transpose() const;
  bool symmetric() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

std::string format_matrix(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

struct SmithForm {
  /// min(rows, cols) entries, nonnegative, each dividing the next
  /// (zeros trail the nonzero entries).
  std::vector<Int> diagonal;
  IntMatrix left;   // U, rows x rows, unimodular
  IntMatrix right;  // V, cols x cols, unimodular
};

/// U * M * V = diag. Works for any shape.
SmithForm smith_normal_form(const IntMatrix& m);

/// Signature data of a symmetric integer form.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Counts eigenvalue signs exactly: the characteristic polynomial of a
/// symmetric matrix is real-rooted, so Descartes' rule of signs is exact.
Inertia inertia(const IntMatrix& symmetric_form);

/// Coefficients c[0..n] of det(x I - M), c[n] = 1 (Faddeev-LeVerrier).
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

}  // namespace torusfill
