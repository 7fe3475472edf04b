#pragma once

// Fixed-seed generators shared by the property tests.

#include <random>
#include <vector>

#include "torusfill/mcgwords.hpp"
#include "torusfill/seqcalc.hpp"
#include "torusfill/sl2z.hpp"

namespace torusfill::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Int integer(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Word in S^{+-1}, T^{+-1} of length <= max_len.
  std::vector<GeneratorPower> sl2_word(int max_len) {
    std::vector<GeneratorPower> w;
    const Int len = integer(0, max_len);
    for (Int i = 0; i < len; ++i) w.push_back({coin() ? Generator::S : Generator::T, coin() ? 1 : -1});
    return w;
  }

  Mat2 sl2(int max_len) { return word_eval(sl2_word(max_len)); }

  std::vector<Block> blocks(Int max_s, Int max_n, Int max_m) {
    std::vector<Block> out(static_cast<std::size_t>(integer(1, max_s)));
    for (Block& b : out) b = {integer(0, max_n), integer(0, max_m)};
    return out;
  }

  DSeq block_sequence(Int max_s, Int max_n, Int max_m) { return BlockForm{blocks(max_s, max_n, max_m), 0}.sequence(); }

  TwistWord twist_word(int max_len) {
    TwistWord w;
    const Int len = integer(0, max_len);
    for (Int i = 0; i < len; ++i)
      w.push_back({kAllCurves[static_cast<std::size_t>(integer(0, 4))], coin() ? 1 : -1});
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Every sequence with entries >= 2, some entry >= 3 and sum <= max_sum, in
/// canonical rotation.
inline std::vector<DSeq> hyperbolic_sequences(Int max_sum) {
  std::vector<DSeq> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int sum) -> void {
    if (!cur.empty()) {
      const DSeq d(cur);
      if (is_hyperbolic_shape(d) && canonical_rotation(d) == d) out.push_back(d);
    }
    for (Int x = 2; sum + x <= max_sum; ++x) {
      cur.push_back(x);
      self(self, sum + x);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Plain cubic product of T^{-d} S factors, independent of eval_a.
inline Mat2 eval_a_oracle(const std::vector<Int>& d) {
  Mat2 acc = mat2::I;
  for (const Int x : d) {
    Mat2 step = mat2::I;
    for (Int i = 0; i < (x < 0 ? -x : x); ++i) step = step * (x > 0 ? mat2::T.inverse() : mat2::T);
    acc = step * mat2::S * acc;
  }
  return acc;
}

}  // namespace torusfill::testing
