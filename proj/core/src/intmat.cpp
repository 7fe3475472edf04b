#include "torusfill/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torusfill {

ExtGcd ext_gcd(Int x, Int y) {
  Int old_r = x, r = y;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
    old_t = checked::sub(old_t, checked::mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::Parse, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::symmetric() const { return square() && *this == transpose(); }

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked::add((*this)(dst, c), checked::mul(k, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked::add((*this)(r, dst), checked::mul(k, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked::neg((*this)(i, c));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = checked::neg((*this)(r, j));
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw Error(ErrorKind::OutOfRange, "matrix shape mismatch in product");
  IntMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < x.cols(); ++k) acc = checked::add(acc, checked::mul(x(i, k), y(k, j)));
      out(i, j) = acc;
    }
  return out;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::OutOfRange, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step: the division is exact.
        const Wide num = Wide(a(i, j)) * a(k, k) - Wide(a(i, k)) * a(k, j);
        a(i, j) = checked::narrow(num / prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

namespace {

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (t, t); returns false when that block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best = 0;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Int v = a(r, c);
      if (v == 0) continue;
      const Int av = checked::abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rank_cap = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < rank_cap; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        const Int q = floor_div(a(r, t), a(t, t));
        a.add_row_multiple(r, t, checked::neg(q));
        u.add_row_multiple(r, t, checked::neg(q));
        if (a(r, t) != 0) {
          a.swap_rows(t, r);
          u.swap_rows(t, r);
          dirty = true;
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        const Int q = floor_div(a(t, c), a(t, t));
        a.add_col_multiple(c, t, checked::neg(q));
        v.add_col_multiple(c, t, checked::neg(q));
        if (a(t, c) != 0) {
          a.swap_cols(t, c);
          v.swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Enforce the divisor chain: fold in any row whose entries the pivot
      // fails to divide, then re-clear.
      bool folded = false;
      for (std::size_t r = t + 1; r < a.rows() && !folded; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (a(r, c) % a(t, t) != 0) {
            a.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            folded = true;
            break;
          }
      if (!folded) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm out{std::vector<Int>(rank_cap, 0), std::move(u), std::move(v)};
  for (std::size_t i = 0; i < rank_cap; ++i) out.diagonal[i] = a(i, i);
  return out;
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::OutOfRange, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Int> c(n + 1, 0);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I;  c_{n-k} = -tr(A M_k) / k
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) = checked::add(next(i, i), c[n - k + 1]);
    mk = std::move(next);
    const IntMatrix am = m * mk;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = checked::add(tr, am(i, i));
    c[n - k] = checked::neg(tr) / static_cast<Int>(k);
  }
  return c;
}

namespace {

std::size_t sign_changes(const std::vector<Int>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const Int x : coeffs) {
    if (x == 0) continue;
    const int s = x > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia inertia(const IntMatrix& form) {
  if (!form.symmetric()) throw Error(ErrorKind::OutOfRange, "inertia requires a symmetric matrix");
  const std::vector<Int> p = characteristic_polynomial(form);
  Inertia out;
  std::size_t lowest = 0;
  while (lowest < p.size() && p[lowest] == 0) ++lowest;
  out.zero = lowest;
  out.positive = sign_changes(p);
  std::vector<Int> reflected = p;
  for (std::size_t i = 1; i < reflected.size(); i += 2) reflected[i] = checked::neg(reflected[i]);
  out.negative = sign_changes(reflected);
  return out;
}

}  // namespace torusfill
