#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "support/gen.hpp"
#include "torusfill/intmat.hpp"

using namespace torusfill;
using torusfill::testing::Gen;

namespace {

// Laplace expansion; exponential but independent of Bareiss.
Int laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Int term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// gcd of all k x k minors.
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  auto pick = [](std::size_t n, std::size_t k, auto&& visit) {
    std::vector<std::size_t> idx(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      if (depth == k) {
        visit(idx);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        idx[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  };
  pick(m.rows(), k, [&](const std::vector<std::size_t>& r) {
    pick(m.cols(), k, [&](const std::vector<std::size_t>& c) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      g = std::gcd(g, std::abs(laplace_det(sub)));
    });
  });
  return g;
}

IntMatrix random_matrix(Gen& gen, std::size_t rows, std::size_t cols, Int range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gen.integer(-range, range);
  return m;
}

}  // namespace

TEST(IntMatrix, SmithExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{-2, -1}, {0, -2}}).diagonal, (std::vector<Int>{1, 4}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{-2, -2}, {0, -2}}).diagonal, (std::vector<Int>{2, 2}));
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 2)).diagonal, (std::vector<Int>{0, 0}));
}

TEST(IntMatrix, SmithMatchesDeterminantalDivisors) {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 4));
    const IntMatrix m = random_matrix(gen, rows, cols, trial % 3 == 0 ? 2 : 9);
    const SmithForm snf = smith_normal_form(m);

    const IntMatrix prod = snf.left * m * snf.right;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        EXPECT_EQ(prod(r, c), r == c ? snf.diagonal[r] : 0) << format_matrix(m);
    EXPECT_EQ(std::abs(determinant(snf.left)), 1);
    EXPECT_EQ(std::abs(determinant(snf.right)), 1);

    // d_1 ... d_k = D_k, the gcd of k x k minors.
    Int running = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      running *= snf.diagonal[k - 1];
      EXPECT_EQ(running, determinantal_divisor(m, k)) << format_matrix(m) << " k=" << k;
    }
    for (std::size_t k = 1; k < snf.diagonal.size(); ++k)
      if (snf.diagonal[k - 1] != 0) EXPECT_EQ(snf.diagonal[k] % snf.diagonal[k - 1], 0);
  }
}

TEST(IntMatrix, DeterminantMatchesLaplace) {
  Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const IntMatrix m = random_matrix(gen, n, n, 6);
    EXPECT_EQ(determinant(m), laplace_det(m)) << format_matrix(m);
  }
}

TEST(IntMatrix, CharacteristicPolynomialOfDiagonal) {
  // (x - 2)(x + 3) = x^2 + x - 6
  EXPECT_EQ(characteristic_polynomial(IntMatrix{{2, 0}, {0, -3}}), (std::vector<Int>{-6, 1, 1}));
}

TEST(IntMatrix, InertiaMatchesEigen) {
  Gen gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = gen.integer(-3, 3);
    // Force some singular cases.
    if (trial % 5 == 0 && n >= 2)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(j, n - 1) = m(0, j);
    if (trial % 5 == 0 && n >= 2) m(n - 1, n - 1) = m(0, 0), m(n - 1, 0) = m(0, 0), m(0, n - 1) = m(0, 0);
    if (!m.symmetric()) continue;

    Eigen::MatrixXd e(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = double(m(i, j));
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e).eigenvalues();
    std::size_t pos = 0, neg = 0, zero = 0;
    for (const double x : ev) (x > 1e-9 ? pos : x < -1e-9 ? neg : zero)++;

    const Inertia got = inertia(m);
    EXPECT_EQ(got.positive, pos) << format_matrix(m);
    EXPECT_EQ(got.negative, neg) << format_matrix(m);
    EXPECT_EQ(got.zero, zero) << format_matrix(m);
  }
}

TEST(IntMatrix, OverflowIsAnError) {
  const Int big = Int{1} << 62;
  IntMatrix m{{big, 0}, {0, 4}};
  EXPECT_THROW((void)(m * m), Error);
}
