#include "torusfill/fillability.hpp"

#include <sstream>
#include <stdexcept>

namespace torusfill {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidDescriptor, why); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void validate(const ContactDescriptor& desc) {
  std::visit(Overloaded{
                 [](const XiA& x) {
                   if (x.monodromy.det() != 1) invalid("monodromy " + format_mat2(x.monodromy) + " is not in SL(2,Z)");
                   if (x.twisting < 1 || x.twisting % 2 == 0)
                     invalid("twisting m must be a positive odd integer, got " + std::to_string(x.twisting));
                   const BundleClass cls = classify(x.monodromy);
                   if (!cls.negative_parabolic() && !cls.negative_hyperbolic())
                     invalid("xi_A needs a negative parabolic or negative hyperbolic monodromy; trace is " +
                             std::to_string(cls.trace));
                 },
                 [](const XiPrime& x) {
                   if (x.n >= 0) invalid("xi'_n is defined for n < 0, got n = " + std::to_string(x.n));
                 },
                 [](const Eta&) {},
             },
             desc);
}

std::string describe(const ContactDescriptor& desc) {
  return std::visit(Overloaded{
                        [](const XiA& x) {
                          return "xi_A(A=" + format_mat2(x.monodromy) + ", m=" + std::to_string(x.twisting) + ")";
                        },
                        [](const XiPrime& x) { return "xi'_n(n=" + std::to_string(x.n) + ")"; },
                        [](const Eta& x) { return "eta_n(n=" + std::to_string(x.n) + ")"; },
                    },
                    desc);
}

Theorem14Ledger theorem14_ledger(const DSeq& d) {
  Theorem14Ledger led;
  led.blocks = parse_blocks(d);
  const Int s = static_cast<Int>(led.blocks.s());
  const Int sn = led.blocks.sum_n();
  const Int sm = led.blocks.sum_m();
  led.handles = sn + s - 1;
  led.c = sm + s + 2;
  led.lower = led.handles;
  led.upper = led.c + 1;
  led.passes = led.lower <= led.upper;
  std::vector<Int> d0{3};
  d0.insert(d0.end(), static_cast<std::size_t>(sm + s - 1), 2);
  led.d0 = DSeq(std::move(d0));
  return led;
}

CobordismReduction cobordism_reduce(const DSeq& d) {
  std::vector<Block> blocks = parse_blocks(d).blocks;
  CobordismReduction out;
  DSeq cur = parse_blocks(d).sequence();
  const Mat2 t_lambda = dehn_twist_matrix(PrimitiveSlope::lambda());

  for (;;) {
    const bool last = blocks.size() == 1;
    const Int handles = last ? blocks.front().n : blocks.front().n + 1;
    CobordismStage stage{cur, handles, cur, cur};
    std::vector<Int> e = cur.entries();
    for (Int h = 0; h < handles; ++h) {
      const Mat2 before = -eval_a(DSeq(e));
      out.ledger = out.total_handles == 0 && h == 0 ? wprime_ledger_hyperbolic(before)
                                                    : ledger_combine(out.ledger, wprime_ledger_hyperbolic(before));
      e.front() -= 1;
      if (before * t_lambda != -eval_a(DSeq(e)))
        throw std::logic_error("surgery identity failed at (" + format_dseq(DSeq(e)) + ")");
      ++out.total_handles;
    }
    stage.after_surgery = DSeq(e);
    if (last) {
      stage.to = stage.after_surgery;
      out.stages.push_back(std::move(stage));
      break;
    }
    // (2^{m1+1}, n2+3, ...) reads as (n2+3, ..., n_s+3, 2^{m_s+m_1+1}).
    const Int carried = blocks.front().m + 1;
    blocks.erase(blocks.begin());
    blocks.back().m += carried;
    stage.to = BlockForm{blocks, 0}.sequence();
    if (!cyclic_equivalent(stage.to, stage.after_surgery))
      throw std::logic_error("block merge is not a rotation of (" + format_dseq(stage.after_surgery) + ")");
    cur = stage.to;
    out.stages.push_back(std::move(stage));
  }
  out.final = out.stages.back().to;
  return out;
}

std::string_view to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::Witness: return "Witness";
    case EmbeddingKind::NoneFound: return "NoneFound";
    case EmbeddingKind::RuleS1: return "RuleS1";
  }
  return "?";
}

EmbeddingResult embeddable_sufficient(const DSeq& d) {
  const BlockForm form = parse_blocks(d);
  EmbeddingResult out;
  out.target = rho(d);
  const bool single = form.s() == 1;
  const Int n1 = form.blocks.front().n, m1 = form.blocks.front().m;
  if (single && n1 == 0) {
    // rho(d) = (m_1 + 3) has length 1; nothing to blow up.
    out.kind = EmbeddingKind::RuleS1;
    out.citation = cite::kProp15;
    return out;
  }
  if (out.target.size() >= 2) {
    if (auto w = blowup_reachable_search(out.target.size(), out.target)) {
      out.kind = EmbeddingKind::Witness;
      out.witness = std::move(w);
      out.citation = cite::kEmbeddable;
      return out;
    }
  }
  if (single && n1 <= m1 + 4) {
    out.kind = EmbeddingKind::RuleS1;
    out.citation = cite::kProp15;
    return out;
  }
  out.kind = EmbeddingKind::NoneFound;
  return out;
}

bool monotone(Answer weak, Answer strong, Answer stein) {
  if (stein == Answer::Yes && strong != Answer::Yes) return false;
  if (strong == Answer::Yes && weak != Answer::Yes) return false;
  if (weak == Answer::No && strong != Answer::No) return false;
  if (strong == Answer::No && stein != Answer::No) return false;
  return true;
}

Verdict::Verdict(Answer weak, Answer strong, Answer stein) : weak_(weak), strong_(strong), stein_(stein) {
  if (!monotone(weak, strong, stein))
    throw std::logic_error("non-monotone verdict: weak=" + std::string(to_string(weak)) +
                           " strong=" + std::string(to_string(strong)) + " stein=" + std::string(to_string(stein)));
}

namespace {

Verdict parabolic_verdict(const Mat2& a) {
  const ParabolicNF nf = parabolic_normal_form(a);
  const Int n = nf.n;
  if (n >= -4) {
    Verdict v(Answer::Yes, Answer::Yes, Answer::Yes);
    v.citations.push_back(cite::kWeak);
    if (n <= -1) v.citations.push_back(cite::kProp32);
    if (n >= -3) v.citations.push_back(cite::kVanHorn);
    v.notes.push_back("monodromy conjugate to -T^" + std::to_string(n));
    return v;
  }
  Verdict v(Answer::Yes, Answer::No, Answer::No);
  v.citations = {cite::kWeak, cite::kTheorem11};
  v.notes.push_back("monodromy conjugate to -T^" + std::to_string(n) + "; " + std::to_string(-n - 4) +
                    " Legendrian surgery(ies) along mu reach (M_-4, xi_-4) through a cobordism with b2- = " +
                    std::to_string(-n - 4) + " > 0");
  v.witness = w_ledger_parabolic(n);
  return v;
}

Verdict hyperbolic_verdict(const Mat2& a, const VerdictOptions& options) {
  const auto nf = decompose_negative_hyperbolic(a, options.budget);
  if (!nf) {
    Verdict v(Answer::Yes, Answer::Unknown, Answer::Unknown);
    v.citations.push_back(cite::kWeak);
    v.notes.push_back("normal form not found within sum(d) <= " + std::to_string(options.budget.seq_sum) +
                      "; raise the budget");
    return v;
  }
  const DSeq& d = nf->d;
  const Theorem14Ledger led = theorem14_ledger(d);
  const std::string shape = "d = (" + format_dseq(d) + "), blocks " + format_blocks(led.blocks) +
                            ", s = " + std::to_string(led.blocks.s());
  if (!led.passes) {
    Verdict v(Answer::Yes, Answer::No, Answer::No);
    v.citations = {cite::kWeak, cite::kTheorem14};
    if (led.blocks.s() == 1) v.citations.push_back(cite::kProp15);
    v.notes.push_back(shape);
    v.notes.push_back("handle count " + std::to_string(led.lower) + " exceeds the b2- budget " +
                      std::to_string(led.upper));
    v.witness = led;
    return v;
  }
  if (led.blocks.s() == 1) {
    Verdict v(Answer::Yes, Answer::Yes, Answer::Unknown);
    v.citations = {cite::kWeak, cite::kProp15};
    v.notes.push_back(shape);
    v.notes.push_back("Stein fillability of strongly fillable xi_{-A(d)} is open");
    v.witness = EmbeddingWitness{d, embeddable_sufficient(d)};
    return v;
  }
  EmbeddingResult emb = embeddable_sufficient(d);
  if (emb.kind == EmbeddingKind::Witness) {
    Verdict v(Answer::Yes, Answer::Yes, Answer::Unknown);
    v.citations = {cite::kWeak, cite::kEmbeddable};
    v.notes.push_back(shape);
    v.notes.push_back("Stein fillability of strongly fillable xi_{-A(d)} is open");
    v.witness = EmbeddingWitness{d, std::move(emb)};
    return v;
  }
  Verdict v(Answer::Yes, Answer::Unknown, Answer::Unknown);
  v.citations = {cite::kWeak};
  v.notes.push_back(shape);
  v.notes.push_back("open region: the necessary condition of Theorem 1.4 holds (" + std::to_string(led.lower) +
                    " <= " + std::to_string(led.upper) + ") but no blowup of (0,0) sits below rho(d) = (" +
                    format_dseq(emb.target) + ")");
  v.witness = led;
  return v;
}

}  // namespace

Verdict verdict(const ContactDescriptor& desc, const VerdictOptions& options) {
  validate(desc);
  return std::visit(
      Overloaded{
          [&](const XiA& x) {
            if (x.twisting >= 3) {
              Verdict v(Answer::Yes, Answer::No, Answer::No);
              v.citations = {cite::kWeak, cite::kGirouxTorsion};
              return v;
            }
            const BundleClass cls = classify(x.monodromy);
            return cls.kind == BundleKind::Parabolic ? parabolic_verdict(x.monodromy)
                                                     : hyperbolic_verdict(x.monodromy, options);
          },
          [](const XiPrime&) {
            Verdict v(Answer::Yes, Answer::Yes, Answer::Yes);
            v.citations = {cite::kProp13};
            return v;
          },
          [](const Eta& x) {
            if (x.n >= 0) {
              Verdict v(Answer::Yes, Answer::Yes, Answer::Yes);
              v.citations = {cite::kWeak, cite::kRemark2Stein};
              return v;
            }
            Verdict v(Answer::Yes, Answer::No, Answer::No);
            v.citations = {cite::kWeak, cite::kRemark2Torsion};
            return v;
          },
      },
      desc);
}

DivisorReport universally_tight_divisor_report(const std::vector<Int>& e) {
  DivisorReport r;
  r.e = e;
  r.form = circular_intersection_matrix(e);
  r.form_det = determinant(r.form);

  std::vector<std::string> broken;
  bool small = false;
  for (const Int x : e) small = small || x == 0 || x == 1;
  if (!small) broken.push_back("no component has self-intersection in {0, 1}");
  if (r.form_det == 0) broken.push_back("intersection matrix is singular");
  if (!broken.empty()) {
    std::string why;
    for (std::size_t i = 0; i < broken.size(); ++i) why += (i ? "; " : "") + broken[i];
    throw Error(ErrorKind::HypothesisFailed, why);
  }

  std::vector<Int> neg;
  for (const Int x : e) neg.push_back(checked::neg(x));
  r.monodromy = eval_a(DSeq(neg));
  r.bundle = classify(r.monodromy);
  r.bridge_holds = checked::abs(r.form_det) == checked::abs(checked::sub(Int{2}, r.bundle.trace));
  const Int tr = r.bundle.trace;
  if (r.bundle.kind == BundleKind::Elliptic)
    r.branch = "elliptic";
  else if (tr > 2)
    r.branch = "hyperbolic, tr > 2";
  else if (tr < -2)
    r.branch = "hyperbolic, tr < -2";
  else if (tr == -2)
    r.branch = "parabolic, tr = -2";
  else
    r.branch = "tr = 2 with a nonsingular form: convention defect";
  r.citations = {cite::kProp16};
  return r;
}

}  // namespace torusfill
