#include "torusfill/seqcalc.hpp"
#include "torusfill/sl2z.hpp"

namespace torusfill {

namespace {

// X with X A X^-1 = B given normal-form conjugators of both sides.
Mat2 bridge(const Mat2& to_nf_a, const Mat2& to_nf_b) { return to_nf_b.inverse() * to_nf_a; }

DiffeoAnswer search_fallback(const Mat2& a, const Mat2& b, const Mat2& twisted, Int bound, const std::string& why) {
  if (auto x = conjugacy_witness_search(a, b, bound))
    return {Answer::Yes, "explicit conjugator to B found by bounded search", x};
  if (auto x = conjugacy_witness_search(a, twisted, bound))
    return {Answer::Yes, "explicit conjugator to J B^-1 J^-1 found by bounded search", x};
  return {Answer::Unknown, why + "; no conjugator with entries <= " + std::to_string(bound), std::nullopt};
}

}  // namespace

DiffeoAnswer bundles_diffeomorphic(const Mat2& a, const Mat2& b, Int search_bound) {
  require_sl2(a, "A");
  require_sl2(b, "B");
  const Mat2 twisted = mat2::J * b.inverse() * mat2::J;
  const BundleClass ca = classify(a);
  if (ca.trace != b.trace())
    return {Answer::No,
            "traces differ (" + std::to_string(ca.trace) + " vs " + std::to_string(b.trace()) + ")",
            std::nullopt};

  if (ca.kind == BundleKind::Parabolic) {
    const ParabolicNF na = parabolic_normal_form(a);
    const ParabolicNF nb = parabolic_normal_form(b);
    const ParabolicNF nt = parabolic_normal_form(twisted);
    if (na.n == nb.n) return {Answer::Yes, "equal parabolic normal forms", bridge(na.conjugator, nb.conjugator)};
    if (na.n == nt.n)
      return {Answer::Yes, "parabolic normal form of A equals that of J B^-1 J^-1",
              bridge(na.conjugator, nt.conjugator)};
    return {Answer::No,
            "parabolic indices " + std::to_string(na.n) + " vs " + std::to_string(nb.n) + " and " +
                std::to_string(nt.n),
            std::nullopt};
  }

  if (ca.kind == BundleKind::Hyperbolic) {
    // Conjugacy is unchanged by a global sign, so reduce to negative trace.
    const bool flip = ca.sign == TraceSign::Positive;
    const Mat2 na = flip ? -a : a, nb = flip ? -b : b, nt = flip ? -twisted : twisted;
    const auto da = decompose_negative_hyperbolic(na);
    const auto db = decompose_negative_hyperbolic(nb);
    const auto dt = decompose_negative_hyperbolic(nt);
    if (!da || !db || !dt) return search_fallback(a, b, twisted, search_bound, "normal form budget exhausted");
    if (da->d == db->d)
      return {Answer::Yes, "cyclic words agree: (" + format_dseq(da->d) + ")", bridge(da->conjugator, db->conjugator)};
    if (da->d == dt->d)
      return {Answer::Yes, "cyclic word of A matches J B^-1 J^-1: (" + format_dseq(da->d) + ")",
              bridge(da->conjugator, dt->conjugator)};
    return {Answer::No,
            "cyclic words (" + format_dseq(da->d) + ") vs (" + format_dseq(db->d) + ") and (" +
                format_dseq(dt->d) + ")",
            std::nullopt};
  }

  return search_fallback(a, b, twisted, search_bound, "elliptic classes are not decided by normal forms");
}

}  // namespace torusfill
