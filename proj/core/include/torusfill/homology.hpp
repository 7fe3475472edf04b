#pragma once

// Homological bookkeeping: first homology of torus bundles, the b2 ledgers
// of the Stein cobordisms built by Legendrian surgery on fiber curves, and
// intersection matrices of circular divisors.

#include <string>
#include <vector>

#include "torusfill/intmat.hpp"
#include "torusfill/sl2z.hpp"

namespace torusfill {

/// Z^betti plus torsion in divisor-chain form (each entry >= 2 divides the next).
struct AbelianGroup {
  Int betti = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroup&) const = default;
};

/// "Z ⊕ Z_4", "Z^2", "Z_2 ⊕ Z_2", "0".
std::string format_group(const AbelianGroup& g);

/// Builds the group Z^(zeros) ⊕ coker from a Smith diagonal; units drop out.
AbelianGroup group_from_smith(const std::vector<Int>& diagonal, Int extra_free);

/// H_1(M_A) = Z ⊕ coker(A - I).
AbelianGroup h1_torus_bundle(const Mat2& a);

/// 2 - trace(A) = det(A - I); its absolute value kills the torsion of H_1.
Int torsion_annihilator(const Mat2& a);

struct BettiLedger {
  Int b2plus = 0;
  Int b2minus = 0;
  std::vector<std::string> provenance;
  /// Set once ledgers are glued: the sums only bound the glued manifold from below.
  bool lower_bound = false;

  bool operator==(const BettiLedger&) const = default;
};

/// Componentwise sum; a lower bound for b2 of the glued manifold.
BettiLedger ledger_combine(const BettiLedger& x, const BettiLedger& y);

/// Reads (b2+, b2-) off a symmetric intersection form.
BettiLedger ledger_from_form(const IntMatrix& form, std::string provenance);

struct ParabolicCobordism {
  BettiLedger ledger;
  IntMatrix handle_form;  // [S_i].[S_j] over the -n-4 handle classes
};

/// Cobordism W from (M_n, xi_n) to (M_-4, xi_-4) by -n-4 surgeries along mu.
/// Throws OutOfRange for n > -5.
ParabolicCobordism w_ledger_parabolic(Int n);

struct SelfIntersection {
  Int value = 0;
  Int trace = 0;        // tr(A)
  Int trace_after = 0;  // tr(A T_lambda)
  bool hypotheses_hold = false;  // both traces <= -3
};

/// [S].[S] = -(2 - x - w)(2 - x - w + y) for A = [[x, y], [z, w]].
SelfIntersection self_intersection_S(const Mat2& a);

/// One surgery along lambda on a negative hyperbolic bundle: (0, 1).
/// Throws HypothesisFailed naming the violated trace.
BettiLedger wprime_ledger_hyperbolic(const Mat2& a);

/// Intersection matrix of a circular divisor with self-intersections e:
/// cyclic neighbours meet once (l >= 3) or twice (l == 2).
/// Throws UnsupportedLength for l < 2.
IntMatrix circular_intersection_matrix(const std::vector<Int>& e);

}  // namespace torusfill
