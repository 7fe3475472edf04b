#pragma once

// Exact 2x2 integer matrix algebra for torus-bundle monodromies.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusfill/checked.hpp"

namespace torusfill {

/// Row-major [[a, b], [c, d]]. Monodromies and conjugators have determinant
/// +1; J has determinant -1. The invariant is checked by the operations that
/// need it, not by construction.
struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;

  constexpr bool operator==(const Mat2&) const = default;

  Int det() const { return checked::det2(a, b, c, d); }
  Int trace() const { return checked::add(a, d); }
  bool unimodular() const {
    const Int dt = det();
    return dt == 1 || dt == -1;
  }
  /// Inverse of a determinant +-1 matrix; throws NotSL2 otherwise.
  Mat2 inverse() const;
  Mat2 operator-() const;
  Int max_abs_entry() const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 pow(const Mat2& m, Int exponent);

namespace mat2 {
inline constexpr Mat2 I{1, 0, 0, 1};
inline constexpr Mat2 S{0, 1, -1, 0};
inline constexpr Mat2 T{1, 1, 0, 1};
inline constexpr Mat2 J{0, 1, 1, 0};
}  // namespace mat2

/// Parses "a,b;c,d" or "[[a,b],[c,d]]" (whitespace tolerated) and requires
/// determinant +-1.
Mat2 parse_mat2(std::string_view text);
/// Canonical "[[a,b],[c,d]]".
std::string format_mat2(const Mat2& m);

enum class BundleKind { Elliptic, Parabolic, Hyperbolic };
enum class TraceSign { Positive, Negative, ZeroTrace };

struct BundleClass {
  BundleKind kind;
  TraceSign sign;
  Int trace;

  bool operator==(const BundleClass&) const = default;
  bool negative_parabolic() const { return kind == BundleKind::Parabolic && sign == TraceSign::Negative; }
  bool negative_hyperbolic() const { return kind == BundleKind::Hyperbolic && sign == TraceSign::Negative; }
};

std::string_view to_string(BundleKind kind);
std::string_view to_string(TraceSign sign);

/// Throws NotSL2 unless det(m) == 1.
void require_sl2(const Mat2& m, std::string_view what = "matrix");

BundleClass classify(const Mat2& monodromy);

/// A linear simple closed curve on T^2, mu = (1, 0), lambda = (0, 1).
class PrimitiveSlope {
 public:
  /// Throws NotPrimitive unless gcd(|p|, |q|) == 1.
  PrimitiveSlope(Int p, Int q);

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }
  bool operator==(const PrimitiveSlope&) const = default;

  static PrimitiveSlope mu() { return {1, 0}; }
  static PrimitiveSlope lambda() { return {0, 1}; }

 private:
  Int p_;
  Int q_;
};

enum class Generator { S, T };
struct GeneratorPower {
  Generator letter;
  Int exponent;
};

/// Product of the generator powers in written (left-to-right) order.
Mat2 word_eval(const std::vector<GeneratorPower>& word);

/// Right-handed Dehn twist along L: x -> x - <x, v> v, <u, v> = u_x v_y - u_y v_x.
Mat2 dehn_twist_matrix(const PrimitiveSlope& slope);

struct SurgeryResult {
  Mat2 monodromy;
  std::vector<std::string> warnings;
};

/// A * T_L. Warns when A or the result falls outside the negative
/// parabolic / negative hyperbolic range where the contact identification holds.
SurgeryResult legendrian_surgery_monodromy(const Mat2& a, const PrimitiveSlope& slope);

/// A^k: monodromy of the pullback along the degree-k cover of the base.
Mat2 cover_monodromy(const Mat2& a, Int k);

/// Finds X with X A = B X, det X = 1 and every |entry| <= bound. Among all
/// such X the reported one minimizes (|a|+|b|+|c|+|d|, -a, -b, -c, -d).
/// nullopt means "none within the bound", not non-conjugacy.
std::optional<Mat2> conjugacy_witness_search(const Mat2& a, const Mat2& b, Int bound);

/// Ordering key used by conjugacy_witness_search; exposed for test oracles.
bool witness_order_less(const Mat2& x, const Mat2& y);

enum class Answer { Yes, No, Unknown };
std::string_view to_string(Answer answer);

struct DiffeoAnswer {
  Answer answer;
  std::string reason;
  std::optional<Mat2> conjugator;  // X with X A X^-1 = B or J B^-1 J^-1, when known
};

/// Orientation-preserving diffeomorphism test for M_A and M_B: A conjugate
/// to B or to J B^-1 J^-1. Normal forms decide parabolic and hyperbolic
/// classes; elliptic classes fall back to a bounded search.
DiffeoAnswer bundles_diffeomorphic(const Mat2& a, const Mat2& b, Int search_bound = 50);

}  // namespace torusfill
