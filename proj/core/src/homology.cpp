#include "torusfill/homology.hpp"

#include <sstream>

namespace torusfill {

std::string format_group(const AbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " ⊕ ";
    first = false;
  };
  if (g.betti == 1) {
    sep();
    os << "Z";
  } else if (g.betti > 1) {
    sep();
    os << "Z^" << g.betti;
  }
  for (const Int t : g.torsion) {
    sep();
    os << "Z_" << t;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroup group_from_smith(const std::vector<Int>& diagonal, Int extra_free) {
  AbelianGroup g{extra_free, {}};
  for (const Int x : diagonal) {
    if (x == 0)
      ++g.betti;
    else if (x > 1)
      g.torsion.push_back(x);
  }
  return g;
}

AbelianGroup h1_torus_bundle(const Mat2& a) {
  require_sl2(a, "monodromy");
  const IntMatrix rel{{checked::sub(a.a, Int{1}), a.b}, {a.c, checked::sub(a.d, Int{1})}};
  return group_from_smith(smith_normal_form(rel).diagonal, 1);
}

Int torsion_annihilator(const Mat2& a) {
  require_sl2(a, "monodromy");
  return checked::sub(Int{2}, a.trace());
}

BettiLedger ledger_combine(const BettiLedger& x, const BettiLedger& y) {
  BettiLedger out{checked::add(x.b2plus, y.b2plus), checked::add(x.b2minus, y.b2minus), x.provenance, true};
  out.provenance.insert(out.provenance.end(), y.provenance.begin(), y.provenance.end());
  return out;
}

BettiLedger ledger_from_form(const IntMatrix& form, std::string provenance) {
  const Inertia in = inertia(form);
  return {static_cast<Int>(in.positive), static_cast<Int>(in.negative), {std::move(provenance)}, false};
}

ParabolicCobordism w_ledger_parabolic(Int n) {
  if (n > -5) throw Error(ErrorKind::OutOfRange, "the parabolic cobordism needs n <= -5, got " + std::to_string(n));
  const auto handles = static_cast<std::size_t>(-n - 4);
  IntMatrix handle_form(handles, handles);
  for (std::size_t i = 0; i < handles; ++i) handle_form(i, i) = -4;
  // Full form on (h0, S_1, ..., S_k); the fiber class h0 pairs trivially.
  IntMatrix full(handles + 1, handles + 1);
  for (std::size_t i = 0; i < handles; ++i) full(i + 1, i + 1) = -4;
  BettiLedger ledger = ledger_from_form(full, "Lemma 3.4: W(n=" + std::to_string(n) + ") has [S_i].[S_j] = -4 delta_ij");
  return {std::move(ledger), std::move(handle_form)};
}

SelfIntersection self_intersection_S(const Mat2& a) {
  require_sl2(a, "monodromy");
  using namespace checked;
  const Int ann = sub(Int{2}, add(a.a, a.d));
  SelfIntersection out;
  out.value = neg(mul(ann, add(ann, a.b)));
  out.trace = a.trace();
  out.trace_after = (a * dehn_twist_matrix(PrimitiveSlope::lambda())).trace();
  out.hypotheses_hold = out.trace <= -3 && out.trace_after <= -3;
  return out;
}

BettiLedger wprime_ledger_hyperbolic(const Mat2& a) {
  const SelfIntersection si = self_intersection_S(a);
  if (si.trace > -3)
    throw Error(ErrorKind::HypothesisFailed, "tr(A) = " + std::to_string(si.trace) + " > -3 for A = " + format_mat2(a));
  if (si.trace_after > -3)
    throw Error(ErrorKind::HypothesisFailed,
                "tr(A') = " + std::to_string(si.trace_after) + " > -3 for A' = A T_lambda, A = " + format_mat2(a));
  const IntMatrix form{{0, 0}, {0, si.value}};
  return ledger_from_form(form, "Lemma 3.5: W' for A = " + format_mat2(a) + " has [S].[S] = " + std::to_string(si.value));
}

IntMatrix circular_intersection_matrix(const std::vector<Int>& e) {
  const std::size_t l = e.size();
  if (l < 2)
    throw Error(ErrorKind::UnsupportedLength, "circular divisors need at least 2 components, got " + std::to_string(l));
  IntMatrix q(l, l);
  for (std::size_t i = 0; i < l; ++i) q(i, i) = e[i];
  if (l == 2) {
    q(0, 1) = q(1, 0) = 2;
    return q;
  }
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t j = (i + 1) % l;
    q(i, j) = q(j, i) = 1;
  }
  return q;
}

}  // namespace torusfill
