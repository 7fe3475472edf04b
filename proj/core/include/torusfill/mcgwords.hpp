#pragma once

// Words in Dehn twists on the genus-one surface with two boundary
// components, elementary rewrite moves between them, and replayable
// derivation scripts.
//
// Curves: a1, a2 disjoint nonseparating curves, e meeting each once, and the
// boundary-parallel d1, d2. Chain relation: (a1 e a2)^4 = d1 d2.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torusfill/intmat.hpp"

namespace torusfill {

enum class Curve { A1, A2, E, D1, D2 };

inline constexpr std::array<Curve, 5> kAllCurves{Curve::A1, Curve::A2, Curve::E, Curve::D1, Curve::D2};

std::string_view curve_name(Curve c);
/// Accepts a1, a2, e, d1, d2 and alpha1, alpha2, eps, delta1, delta2.
std::optional<Curve> parse_curve(std::string_view name);

/// Geometric intersection number.
int intersection(Curve x, Curve y);
bool central(Curve c);

struct Letter {
  Curve curve = Curve::A1;
  int exponent = 1;  // +1 right-handed, -1 left-handed

  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {curve, -exponent}; }
};

/// Letters left to right; no reduction is implied.
using TwistWord = std::vector<Letter>;

/// Whitespace separated tokens: curve, curve^k, (word)^k. k may be negative.
/// "d1 d2 a1^-6 a2^-2", "(a1 e a2)^4".
TwistWord parse_word(std::string_view text);
/// Runs of equal letters are collapsed: "d1 d2 a1^-6 a2^-2".
std::string format_word(const TwistWord& w);

TwistWord chain_word();  // (a1 e a2)^4, 12 letters
TwistWord inverse(const TwistWord& w);
/// Cancels adjacent c c^-1 pairs until none remain.
TwistWord free_reduce(const TwistWord& w);

enum class MoveKind { Commute, Braid, ChainExpand, ChainContract, CentralSwap, FreeReduce, FreeInsert };

std::string_view to_string(MoveKind kind);

struct RewriteMove {
  MoveKind kind = MoveKind::Commute;
  std::size_t position = 0;  // index of the first letter touched (insertion point for FreeInsert)
  Letter inserted;           // FreeInsert only: inserts `inserted` followed by its inverse

  bool operator==(const RewriteMove&) const = default;
};

/// Script syntax: COMMUTE@p BRAID@p EXPAND@p CONTRACT@p CENTRAL@p REDUCE@p
/// INSERT@p:c or INSERT@p:c^-1, positions 0-based.
RewriteMove parse_move(std::string_view text);
std::string format_move(const RewriteMove& mv);

/// Commute: letters p, p+1 on curves with intersection 0.
/// Braid: x y x -> y x y at p with i(x, y) = 1 and one common exponent.
/// ChainExpand: d1 d2 at p -> (a1 e a2)^4. ChainContract: the reverse.
/// CentralSwap: letters p, p+1 with at least one on d1 or d2.
/// FreeReduce: c^k c^-k at p is deleted. FreeInsert: c^k c^-k inserted at p.
/// Throws InvalidMove naming the position and the failed condition.
TwistWord apply_move(const TwistWord& w, const RewriteMove& mv);

struct Verified {};
struct Failed {
  std::size_t step = 0;  // index of the failing move, or the script length
  std::string reason;
};
using DerivationResult = std::variant<Verified, Failed>;

/// Replays the script from `start`; checkpoints must be hit in order (the
/// start word itself may match the first one).
DerivationResult verify_derivation(const TwistWord& start, const std::vector<RewriteMove>& script,
                                   const std::vector<TwistWord>& checkpoints);

struct Derivation {
  TwistWord start;
  std::vector<RewriteMove> script;
  std::vector<TwistWord> checkpoints;
};

/// Line format: "start <word>", "check <word>", one move per line, '#'
/// comments, blank lines ignored. Throws Parse with a line number.
Derivation parse_derivation(std::string_view text);

struct PositiveBlock {
  std::size_t begin = 0;  // letter range [begin, end) of the input word
  std::size_t end = 0;
  TwistWord conjugator;   // u
  Curve curve = Curve::A1;
};

struct Positive {
  std::vector<PositiveBlock> blocks;
};
struct NotRecognized {};
using PositivityResult = std::variant<Positive, NotRecognized>;

/// Splits w into consecutive segments, each freely reducing to u c u^-1 for
/// a single right-handed letter c, using as few segments as possible.
/// Syntactic: NotRecognized says nothing about the mapping class itself.
PositivityResult is_positive_factorization(const TwistWord& w);

/// Action on H_1 with basis (a, b, d): [a1] = a, [e] = b, [a2] = a + d,
/// [d1] = d, [d2] = -d, <a, b> = 1, <d, .> = 0. Letter c^k acts by
/// x -> x - k <x, [c]> [c]; the word's matrix is the product in written order.
/// Equal shadows are necessary, not sufficient, for equal mapping classes.
IntMatrix homological_shadow(const TwistWord& w);

}  // namespace torusfill
