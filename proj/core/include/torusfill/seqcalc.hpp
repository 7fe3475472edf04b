#pragma once

// Circular integer sequences d = (d_1, ..., d_k): the A(d) normal forms of
// hyperbolic monodromies, their block structure, and the blowup calculus.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusfill/checked.hpp"
#include "torusfill/sl2z.hpp"

namespace torusfill {

/// Nonempty circular sequence of integers.
class DSeq {
 public:
  DSeq() = default;  // empty placeholder; most operations reject it
  DSeq(std::initializer_list<Int> entries);
  explicit DSeq(std::vector<Int> entries);

  const std::vector<Int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  Int sum() const;

  /// Left rotation by r: result[i] = entries[(i + r) mod k].
  DSeq rotated(std::size_t r) const;

  auto operator<=>(const DSeq&) const = default;

 private:
  std::vector<Int> entries_;
};

/// "5,2,2,3"
DSeq parse_dseq(std::string_view text);
std::string format_dseq(const DSeq& d);

/// All entries >= 2 and at least one >= 3.
bool is_hyperbolic_shape(const DSeq& d);

/// A(d) = T^{-d_k} S ... T^{-d_1} S.
Mat2 eval_a(const DSeq& d);

/// Lexicographically least rotation whose first entry is >= 3.
DSeq canonical_rotation(const DSeq& d);

bool cyclic_equivalent(const DSeq& x, const DSeq& y);

struct Block {
  Int n = 0;  // leading entry is n + 3
  Int m = 0;  // number of trailing 2s
  bool operator==(const Block&) const = default;
};

/// d = (n_1+3, 2^{m_1}, ..., n_s+3, 2^{m_s}), read starting from `rotation`.
struct BlockForm {
  std::vector<Block> blocks;
  std::size_t rotation = 0;  // left rotation applied to the input

  std::size_t s() const noexcept { return blocks.size(); }
  Int sum_n() const;
  Int sum_m() const;
  DSeq sequence() const;
};

/// Keeps the input rotation when d_1 >= 3; otherwise rotates left to the
/// first entry >= 3. Throws NotHyperbolicShape.
BlockForm parse_blocks(const DSeq& d);

/// "(n+3)[,2×m]..." e.g. "5,2×2,3".
std::string format_blocks(const BlockForm& form);

/// Block reversal (m_s+3, 2^{n_s}, ..., m_1+3, 2^{n_1}).
DSeq rho(const DSeq& d);

/// Blows up the intersection point between d_edge and d_{edge+1} (1-based,
/// circular): (.., x, y, ..) -> (.., x+1, 1, y+1, ..). For edge == k the new
/// 1 is appended after d_k and d_1 is incremented.
DSeq blowup(const DSeq& d, std::size_t edge);

/// Smallest left rotation r with len(b) == len(e) and b <= e.rotated(r)
/// componentwise. Reflections are not tried.
std::optional<std::size_t> leq_cyclic(const DSeq& b, const DSeq& e);

struct BlowupWitness {
  std::vector<std::size_t> edges;  // 1-based edge per blowup, applied in order
  DSeq reached;
  std::size_t rotation = 0;  // leq_cyclic(reached, bound)
};

/// Exhaustive search over (target_len - 2) blowups from (0, 0) for a
/// sequence b with b below some rotation of `bound`. The returned script is
/// the lexicographically least one; nullopt is definitive for this space.
std::optional<BlowupWitness> blowup_reachable_search(std::size_t target_len, const DSeq& bound);

/// Replays a blowup script from (0, 0).
DSeq replay_blowups(const std::vector<std::size_t>& edges);

struct ParabolicNF {
  int sign = 1;
  Int n = 0;
  Mat2 conjugator;  // conjugator * A * conjugator^-1 == sign * T^n
};

/// Throws NotParabolic unless |trace| == 2.
ParabolicNF parabolic_normal_form(const Mat2& a);

struct DecomposeBudget {
  Int seq_sum = 30;
  /// Entry bound for the verifying conjugator search. The effective bound is
  /// max(this, |A|_max * |-A(d)|_max) so that rotations of an explicit
  /// -A(d) are always within reach.
  Int conjugator_bound = 50;
};

struct HyperbolicNF {
  DSeq d;            // canonical rotation
  Mat2 conjugator;   // conjugator * A * conjugator^-1 == -A(d)
};

/// Recovers d with A conjugate to -A(d) by enumerating candidates with
/// sum <= budget.seq_sum and verifying each with an explicit conjugator.
/// nullopt means the budget was exhausted (Unknown). Throws
/// NotNegativeHyperbolic unless trace(A) <= -3.
std::optional<HyperbolicNF> decompose_negative_hyperbolic(const Mat2& a, const DecomposeBudget& budget = {});

}  // namespace torusfill
