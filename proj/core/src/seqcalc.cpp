#include "torusfill/seqcalc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace torusfill {

DSeq::DSeq(std::initializer_list<Int> entries) : entries_(entries) {}
DSeq::DSeq(std::vector<Int> entries) : entries_(std::move(entries)) {}

Int DSeq::sum() const {
  Int s = 0;
  for (const Int x : entries_) s = checked::add(s, x);
  return s;
}

DSeq DSeq::rotated(std::size_t r) const {
  if (entries_.empty()) return *this;
  std::vector<Int> out(entries_.size());
  const std::size_t k = entries_.size();
  for (std::size_t i = 0; i < k; ++i) out[i] = entries_[(i + r) % k];
  return DSeq(std::move(out));
}

DSeq parse_dseq(std::string_view text) {
  std::vector<Int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (;;) {
    skip();
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw Error(ErrorKind::Parse, "sequence '" + std::string(text) + "': expected an integer");
    try {
      out.push_back(std::stoll(std::string(text.substr(start, i - start))));
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::Overflow, "sequence entry out of range");
    }
    skip();
    if (i == text.size()) break;
    if (text[i] != ',') throw Error(ErrorKind::Parse, "sequence '" + std::string(text) + "': expected ','");
    ++i;
  }
  return DSeq(std::move(out));
}

std::string format_dseq(const DSeq& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

bool is_hyperbolic_shape(const DSeq& d) {
  if (d.empty()) return false;
  const auto& e = d.entries();
  return std::all_of(e.begin(), e.end(), [](Int x) { return x >= 2; }) &&
         std::any_of(e.begin(), e.end(), [](Int x) { return x >= 3; });
}

namespace {

void require_shape(const DSeq& d) {
  if (!is_hyperbolic_shape(d))
    throw Error(ErrorKind::NotHyperbolicShape,
                "(" + format_dseq(d) + ") needs every entry >= 2 and some entry >= 3");
}

}  // namespace

Mat2 eval_a(const DSeq& d) {
  Mat2 out = mat2::I;
  for (const Int x : d.entries()) out = Mat2{x, 1, -1, 0} * out;
  return out;
}

DSeq canonical_rotation(const DSeq& d) {
  require_shape(d);
  std::optional<DSeq> best;
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (d[r] < 3) continue;
    DSeq cand = d.rotated(r);
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

bool cyclic_equivalent(const DSeq& x, const DSeq& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (std::size_t r = 0; r < y.size(); ++r)
    if (y.rotated(r) == x) return true;
  return false;
}

Int BlockForm::sum_n() const {
  Int s = 0;
  for (const Block& b : blocks) s = checked::add(s, b.n);
  return s;
}

Int BlockForm::sum_m() const {
  Int s = 0;
  for (const Block& b : blocks) s = checked::add(s, b.m);
  return s;
}

DSeq BlockForm::sequence() const {
  std::vector<Int> out;
  for (const Block& b : blocks) {
    out.push_back(checked::add(b.n, Int{3}));
    out.insert(out.end(), static_cast<std::size_t>(b.m), 2);
  }
  return DSeq(std::move(out));
}

BlockForm parse_blocks(const DSeq& d) {
  require_shape(d);
  BlockForm form;
  while (d[form.rotation] < 3) ++form.rotation;
  const DSeq r = d.rotated(form.rotation);
  for (const Int x : r.entries()) {
    if (x >= 3)
      form.blocks.push_back({x - 3, 0});
    else
      ++form.blocks.back().m;
  }
  return form;
}

std::string format_blocks(const BlockForm& form) {
  std::ostringstream os;
  for (std::size_t i = 0; i < form.blocks.size(); ++i) {
    const Block& b = form.blocks[i];
    os << (i ? "," : "") << b.n + 3;
    if (b.m > 0) os << ",2×" << b.m;
  }
  return os.str();
}

DSeq rho(const DSeq& d) {
  const BlockForm form = parse_blocks(d);
  std::vector<Int> out;
  for (auto it = form.blocks.rbegin(); it != form.blocks.rend(); ++it) {
    out.push_back(checked::add(it->m, Int{3}));
    out.insert(out.end(), static_cast<std::size_t>(it->n), 2);
  }
  return DSeq(std::move(out));
}

DSeq blowup(const DSeq& d, std::size_t edge) {
  const std::size_t k = d.size();
  if (k < 2) throw Error(ErrorKind::IndexOutOfRange, "blowup needs a sequence of length >= 2");
  if (edge < 1 || edge > k)
    throw Error(ErrorKind::IndexOutOfRange,
                "edge " + std::to_string(edge) + " outside 1.." + std::to_string(k));
  std::vector<Int> e = d.entries();
  const std::size_t i = edge - 1;
  const std::size_t j = (i + 1) % k;
  e[i] = checked::add(e[i], Int{1});
  e[j] = checked::add(e[j], Int{1});
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(i + 1), 1);
  return DSeq(std::move(e));
}

std::optional<std::size_t> leq_cyclic(const DSeq& b, const DSeq& e) {
  if (b.size() != e.size() || b.empty()) return std::nullopt;
  const std::size_t k = b.size();
  for (std::size_t r = 0; r < k; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = b[i] <= e[(i + r) % k];
    if (ok) return r;
  }
  return std::nullopt;
}

DSeq replay_blowups(const std::vector<std::size_t>& edges) {
  DSeq cur{0, 0};
  for (const std::size_t e : edges) cur = blowup(cur, e);
  return cur;
}

namespace {

struct SeqHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    std::size_t h = v.size();
    for (const Int x : v) h = h * 1000003u ^ std::hash<Int>{}(x);
    return h;
  }
};

}  // namespace

std::optional<BlowupWitness> blowup_reachable_search(std::size_t target_len, const DSeq& bound) {
  if (target_len < 2 || target_len != bound.size())
    throw Error(ErrorKind::OutOfRange, "target length must equal len(bound) and be >= 2");
  const std::size_t steps = target_len - 2;
  // Every blowup adds 3 to the entry sum and never lowers an entry.
  if (checked::mul(Int{3}, static_cast<Int>(steps)) > bound.sum()) return std::nullopt;
  const Int cap = *std::max_element(bound.entries().begin(), bound.entries().end());

  struct Node {
    DSeq seq;
    std::vector<std::size_t> edges;
  };
  std::vector<Node> level{{DSeq{0, 0}, {}}};
  if (cap < 0) return std::nullopt;
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<Node> next;
    std::unordered_set<std::vector<Int>, SeqHash> seen;
    // Parents are visited in script order and edges ascend, so the first
    // script to reach a state is its lexicographically least one.
    for (const Node& node : level) {
      for (std::size_t e = 1; e <= node.seq.size(); ++e) {
        DSeq child = blowup(node.seq, e);
        const auto& ce = child.entries();
        if (*std::max_element(ce.begin(), ce.end()) > cap) continue;
        if (!seen.insert(ce).second) continue;
        std::vector<std::size_t> edges = node.edges;
        edges.push_back(e);
        next.push_back({std::move(child), std::move(edges)});
      }
    }
    level = std::move(next);
    if (level.empty()) return std::nullopt;
  }
  for (const Node& node : level)
    if (const auto r = leq_cyclic(node.seq, bound)) return BlowupWitness{node.edges, node.seq, *r};
  return std::nullopt;
}

ParabolicNF parabolic_normal_form(const Mat2& a) {
  require_sl2(a, "monodromy");
  const Int tr = a.trace();
  if (tr != 2 && tr != -2)
    throw Error(ErrorKind::NotParabolic, format_mat2(a) + " has trace " + std::to_string(tr));
  const int sign = tr > 0 ? 1 : -1;
  const Mat2 p = sign > 0 ? a : -a;
  if (p == mat2::I) return {sign, 0, mat2::I};

  // Primitive fixed vector v of p, first nonzero coordinate positive.
  Int x = checked::sub(p.a, Int{1}), y = p.b;
  if (x == 0 && y == 0) {
    x = p.c;
    y = checked::sub(p.d, Int{1});
  }
  Int vp = y, vq = checked::neg(x);
  const Int g = gcd(vp, vq);
  vp /= g;
  vq /= g;
  if (vp < 0 || (vp == 0 && vq < 0)) {
    vp = -vp;
    vq = -vq;
  }
  const ExtGcd eg = ext_gcd(vp, vq);  // vp*s + vq*t = 1
  const Mat2 basis{vp, checked::neg(eg.t), vq, eg.s};  // columns v, u; det 1
  const Mat2 conj = basis.inverse();
  const Mat2 reduced = conj * p * basis;
  if (reduced.a != 1 || reduced.c != 0 || reduced.d != 1)
    throw Error(ErrorKind::NotParabolic, "internal: fixed-vector basis did not triangularize " + format_mat2(a));
  return {sign, reduced.b, conj};
}

std::optional<HyperbolicNF> decompose_negative_hyperbolic(const Mat2& a, const DecomposeBudget& budget) {
  require_sl2(a, "monodromy");
  const Int tr = a.trace();
  if (tr > -3)
    throw Error(ErrorKind::NotNegativeHyperbolic, format_mat2(a) + " has trace " + std::to_string(tr));
  const Int target = checked::neg(tr);

  std::optional<HyperbolicNF> found;
  std::vector<Int> cur;

  // trace(A(d)) never decreases when an entry >= 2 is inserted or an entry
  // grows, so a prefix whose trace already exceeds the target is dead.
  std::function<void(const Mat2&, Int)> dfs = [&](const Mat2& prefix, Int sum) {
    if (found) return;
    if (!cur.empty() && prefix.trace() == target) {
      const DSeq d(cur);
      if (is_hyperbolic_shape(d) && canonical_rotation(d) == d) {
        const Mat2 b = -eval_a(d);
        const Int bound = std::max(budget.conjugator_bound, checked::mul(a.max_abs_entry(), b.max_abs_entry()));
        if (auto x = conjugacy_witness_search(a, b, bound)) {
          found = HyperbolicNF{d, *x};
          return;
        }
      }
    }
    for (Int next = cur.empty() ? 3 : 2; checked::add(sum, next) <= budget.seq_sum; ++next) {
      const Mat2 p = Mat2{next, 1, -1, 0} * prefix;
      if (p.trace() > target) break;  // larger entries only raise the trace
      cur.push_back(next);
      dfs(p, sum + next);
      cur.pop_back();
      if (found) return;
    }
  };
  dfs(mat2::I, 0);
  return found;
}

}  // namespace torusfill
