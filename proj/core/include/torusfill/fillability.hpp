#pragma once

// Fillability verdicts for tight contact structures on torus bundles.
// Every Yes/No carries the result it rests on; open cases stay Unknown.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torusfill/homology.hpp"
#include "torusfill/seqcalc.hpp"
#include "torusfill/sl2z.hpp"

namespace torusfill {

/// Universally tight xi_A with twisting m*pi (m odd >= 1) on a negative
/// parabolic or negative hyperbolic bundle.
struct XiA {
  Mat2 monodromy;
  Int twisting = 1;
  bool operator==(const XiA&) const = default;
};

/// The virtually overtwisted structure on M_n = M_{-T^n}, n < 0.
struct XiPrime {
  Int n = -1;
  bool operator==(const XiPrime&) const = default;
};

/// Universally tight structure with twisting 2*pi on P_n = M_{T^n}.
struct Eta {
  Int n = 0;
  bool operator==(const Eta&) const = default;
};

using ContactDescriptor = std::variant<XiA, XiPrime, Eta>;

/// Throws InvalidDescriptor when the descriptor's invariants fail.
void validate(const ContactDescriptor& desc);
std::string describe(const ContactDescriptor& desc);

inline XiA xi_parabolic(Int n, Int twisting = 1) { return {-pow(mat2::T, n), twisting}; }
inline XiA xi_hyperbolic(const DSeq& d, Int twisting = 1) { return {-eval_a(d), twisting}; }

struct Theorem14Ledger {
  BlockForm blocks;
  Int handles = 0;  // sum n_i + s - 1
  DSeq d0;          // (3, 2^{sum m_i + s - 1})
  Int c = 0;        // sum m_i + s + 2
  Int lower = 0;    // = handles, lower bound for b2- of the cobordism
  Int upper = 0;    // = c + 1, upper bound from the unique filling of d0
  bool passes = false;
};

Theorem14Ledger theorem14_ledger(const DSeq& d);

struct CobordismStage {
  DSeq from;
  Int handles = 0;
  DSeq after_surgery;  // first entry lowered by `handles`
  DSeq to;             // after_surgery re-read so it starts at an entry >= 3
};

struct CobordismReduction {
  std::vector<CobordismStage> stages;
  DSeq final;
  Int total_handles = 0;
  /// Glued (0, 1) ledgers of the single-handle cobordisms, one per handle.
  BettiLedger ledger;
};

/// Replays the chain d -> d' -> d'' -> ... -> d0 handle by handle, checking
/// each surgery as an exact matrix identity -A(d) T_lambda = -A(d with d_1 - 1).
CobordismReduction cobordism_reduce(const DSeq& d);

enum class EmbeddingKind { Witness, NoneFound, RuleS1 };

struct EmbeddingResult {
  EmbeddingKind kind = EmbeddingKind::NoneFound;
  DSeq target;  // rho(d)
  std::optional<BlowupWitness> witness;
  std::string citation;
};

std::string_view to_string(EmbeddingKind kind);

/// Sufficient test for embeddability of d: a blowup of (0, 0) below rho(d).
/// NoneFound means the test failed, not that xi_{-A(d)} is non-fillable.
EmbeddingResult embeddable_sufficient(const DSeq& d);

struct EmbeddingWitness {
  DSeq d;
  EmbeddingResult result;
};

using VerdictWitness = std::variant<EmbeddingWitness, Theorem14Ledger, ParabolicCobordism>;

class Verdict {
 public:
  /// Throws std::logic_error unless stein=Yes => strong=Yes => weak=Yes and
  /// weak=No => strong=No => stein=No.
  Verdict(Answer weak, Answer strong, Answer stein);

  Answer weak() const noexcept { return weak_; }
  Answer strong() const noexcept { return strong_; }
  Answer stein() const noexcept { return stein_; }
  bool any_unknown() const noexcept {
    return weak_ == Answer::Unknown || strong_ == Answer::Unknown || stein_ == Answer::Unknown;
  }

  std::vector<std::string> citations;
  std::vector<std::string> notes;
  std::optional<VerdictWitness> witness;

 private:
  Answer weak_;
  Answer strong_;
  Answer stein_;
};

bool monotone(Answer weak, Answer strong, Answer stein);

struct VerdictOptions {
  DecomposeBudget budget;
};

Verdict verdict(const ContactDescriptor& desc, const VerdictOptions& options = {});

struct DivisorReport {
  std::vector<Int> e;
  IntMatrix form;
  Int form_det = 0;
  Mat2 monodromy;  // A(-e_1, ..., -e_l)
  BundleClass bundle;
  std::string branch;
  bool bridge_holds = false;  // |det form| == |2 - tr A|
  std::vector<std::string> citations;
};

/// Checks the hypotheses (some e_i in {0, 1}; nonsingular intersection
/// matrix) and reports which case of the trace analysis applies. Throws
/// HypothesisFailed naming each broken hypothesis.
DivisorReport universally_tight_divisor_report(const std::vector<Int>& e);

namespace cite {
inline constexpr const char* kWeak = "[DG, Theorem 1]: every zeta(phi) is weakly symplectically fillable";
inline constexpr const char* kGirouxTorsion = "[Ga3, Corollary 3]: twisting m >= 3 carries positive Giroux torsion, so not strongly fillable";
inline constexpr const char* kTheorem11 = "Theorem 1.1: xi_n is not strongly symplectically fillable for n <= -5";
inline constexpr const char* kProp32 = "Proposition 3.2: xi_n is Stein fillable for -4 <= n <= -1 (positive twist factorization of psi_-4)";
inline constexpr const char* kVanHorn = "[V]: xi_n is Stein fillable for n >= -3";
inline constexpr const char* kProp13 = "Proposition 1.3: xi'_n is Stein fillable for every n < 0";
inline constexpr const char* kRemark2Stein = "Remark 2: eta_n is Stein fillable for n >= 0 (Legendrian surgery on eta_0)";
inline constexpr const char* kRemark2Torsion = "Remark 2: eta_n has positive Giroux torsion for n < 0, so not strongly fillable";
inline constexpr const char* kTheorem14 = "Theorem 1.4: strong fillability of xi_{-A(d)} forces sum n_i <= sum m_i + 4";
inline constexpr const char* kProp15 = "Proposition 1.5: for s = 1, xi_{-A(d)} is strongly fillable iff n_1 <= m_1 + 4";
inline constexpr const char* kEmbeddable = "[GoLi1, Theorems 1.2 and 2.5]: embeddable d gives a strongly fillable xi_{-A(d)}";
inline constexpr const char* kProp16 = "Proposition 1.6: boundaries of concave neighbourhoods of such divisors are universally tight";
}  // namespace cite

}  // namespace torusfill
