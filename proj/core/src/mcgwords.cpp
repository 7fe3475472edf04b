#include "torusfill/mcgwords.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "torusfill/error.hpp"

namespace torusfill {

std::string_view curve_name(Curve c) {
  switch (c) {
    case Curve::A1: return "a1";
    case Curve::A2: return "a2";
    case Curve::E: return "e";
    case Curve::D1: return "d1";
    case Curve::D2: return "d2";
  }
  return "?";
}

std::optional<Curve> parse_curve(std::string_view name) {
  if (name == "a1" || name == "alpha1") return Curve::A1;
  if (name == "a2" || name == "alpha2") return Curve::A2;
  if (name == "e" || name == "eps") return Curve::E;
  if (name == "d1" || name == "delta1") return Curve::D1;
  if (name == "d2" || name == "delta2") return Curve::D2;
  return std::nullopt;
}

bool central(Curve c) { return c == Curve::D1 || c == Curve::D2; }

int intersection(Curve x, Curve y) {
  const auto pair = [&](Curve p, Curve q) { return (x == p && y == q) || (x == q && y == p); };
  return pair(Curve::A1, Curve::E) || pair(Curve::A2, Curve::E) ? 1 : 0;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  TwistWord parse() {
    TwistWord w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  TwistWord sequence() {
    TwistWord out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      TwistWord base;
      if (text_[pos_] == '(') {
        ++pos_;
        base = sequence();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        if (start == pos_) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto c = parse_curve(name);
        if (!c) fail("unknown curve '" + std::string(name) + "'");
        base = {Letter{*c, 1}};
      }
      const long k = exponent();
      const TwistWord unit = k < 0 ? inverse(base) : base;
      for (long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), unit.begin(), unit.end());
    }
  }

  long exponent() {
    if (pos_ == text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    long k = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) fail("bad exponent");
    if (k > 10000 || k < -10000) fail("exponent too large");
    return k;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "word at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TwistWord parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string format_word(const TwistWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long k = static_cast<long>(j - i) * w[i].exponent;
    if (!out.empty()) out += ' ';
    out += curve_name(w[i].curve);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

TwistWord chain_word() {
  TwistWord w;
  for (int i = 0; i < 4; ++i) w.insert(w.end(), {Letter{Curve::A1, 1}, Letter{Curve::E, 1}, Letter{Curve::A2, 1}});
  return w;
}

TwistWord inverse(const TwistWord& w) {
  TwistWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

TwistWord free_reduce(const TwistWord& w) {
  TwistWord out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Commute: return "COMMUTE";
    case MoveKind::Braid: return "BRAID";
    case MoveKind::ChainExpand: return "EXPAND";
    case MoveKind::ChainContract: return "CONTRACT";
    case MoveKind::CentralSwap: return "CENTRAL";
    case MoveKind::FreeReduce: return "REDUCE";
    case MoveKind::FreeInsert: return "INSERT";
  }
  return "?";
}

RewriteMove parse_move(std::string_view text) {
  const auto bad = [&](const std::string& why) -> RewriteMove {
    throw Error(ErrorKind::Parse, "move '" + std::string(text) + "': " + why);
  };
  const std::size_t at = text.find('@');
  if (at == std::string_view::npos) return bad("expected KIND@position");
  const std::string_view name = text.substr(0, at);
  RewriteMove mv;
  constexpr std::array kinds{MoveKind::Commute,     MoveKind::Braid,      MoveKind::ChainExpand, MoveKind::ChainContract,
                             MoveKind::CentralSwap, MoveKind::FreeReduce, MoveKind::FreeInsert};
  const auto kind = std::find_if(kinds.begin(), kinds.end(), [&](MoveKind k) { return to_string(k) == name; });
  if (kind == kinds.end()) return bad("unknown move kind");
  mv.kind = *kind;

  std::string_view rest = text.substr(at + 1);
  const std::size_t colon = rest.find(':');
  const std::string_view pos_text = rest.substr(0, colon);
  const auto [end, ec] = std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), mv.position);
  if (ec != std::errc{} || end != pos_text.data() + pos_text.size() || pos_text.empty()) return bad("bad position");

  if (mv.kind == MoveKind::FreeInsert) {
    if (colon == std::string_view::npos) return bad("INSERT needs ':curve'");
    const TwistWord l = parse_word(rest.substr(colon + 1));
    if (l.size() != 1) return bad("INSERT takes a single letter");
    mv.inserted = l.front();
  } else if (colon != std::string_view::npos) {
    return bad("only INSERT takes a parameter");
  }
  return mv;
}

std::string format_move(const RewriteMove& mv) {
  std::string out = std::string(to_string(mv.kind)) + "@" + std::to_string(mv.position);
  if (mv.kind == MoveKind::FreeInsert) out += ":" + format_word({mv.inserted});
  return out;
}

TwistWord apply_move(const TwistWord& w, const RewriteMove& mv) {
  const std::size_t p = mv.position;
  const auto fail = [&](const std::string& why) -> TwistWord {
    throw Error(ErrorKind::InvalidMove, format_move(mv) + " at position " + std::to_string(p) + ": " + why);
  };
  const auto need = [&](std::size_t n) {
    if (p > w.size() || w.size() - p < n)
      fail("needs " + std::to_string(n) + " letters, word has " + std::to_string(w.size()));
  };

  TwistWord out = w;
  switch (mv.kind) {
    case MoveKind::Commute:
      need(2);
      if (intersection(w[p].curve, w[p + 1].curve) != 0)
        return fail(std::string(curve_name(w[p].curve)) + " and " + std::string(curve_name(w[p + 1].curve)) +
                    " intersect");
      std::swap(out[p], out[p + 1]);
      return out;
    case MoveKind::CentralSwap:
      need(2);
      if (!central(w[p].curve) && !central(w[p + 1].curve)) return fail("neither letter is boundary parallel");
      std::swap(out[p], out[p + 1]);
      return out;
    case MoveKind::Braid: {
      need(3);
      const Letter x = w[p], y = w[p + 1];
      if (w[p + 2] != x) return fail("not of the form x y x");
      if (x.exponent != y.exponent) return fail("exponents differ");
      if (intersection(x.curve, y.curve) != 1)
        return fail(std::string(curve_name(x.curve)) + " and " + std::string(curve_name(y.curve)) +
                    " do not meet once");
      out[p] = y;
      out[p + 1] = x;
      out[p + 2] = y;
      return out;
    }
    case MoveKind::ChainExpand: {
      need(2);
      if (w[p] != Letter{Curve::D1, 1} || w[p + 1] != Letter{Curve::D2, 1}) return fail("expected d1 d2");
      const TwistWord chain = chain_word();
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(p), out.begin() + static_cast<std::ptrdiff_t>(p + 2));
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(p), chain.begin(), chain.end());
      return out;
    }
    case MoveKind::ChainContract: {
      const TwistWord chain = chain_word();
      need(chain.size());
      if (!std::equal(chain.begin(), chain.end(), w.begin() + static_cast<std::ptrdiff_t>(p)))
        return fail("expected (a1 e a2)^4");
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(p),
                out.begin() + static_cast<std::ptrdiff_t>(p + chain.size()));
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(p), {Letter{Curve::D1, 1}, Letter{Curve::D2, 1}});
      return out;
    }
    case MoveKind::FreeReduce:
      need(2);
      if (w[p + 1] != w[p].inverse()) return fail("letters are not mutually inverse");
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(p), out.begin() + static_cast<std::ptrdiff_t>(p + 2));
      return out;
    case MoveKind::FreeInsert:
      if (p > w.size()) return fail("position past the end of the word");
      if (mv.inserted.exponent != 1 && mv.inserted.exponent != -1) return fail("exponent must be +-1");
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(p), {mv.inserted, mv.inserted.inverse()});
      return out;
  }
  return fail("unknown move");
}

DerivationResult verify_derivation(const TwistWord& start, const std::vector<RewriteMove>& script,
                                   const std::vector<TwistWord>& checkpoints) {
  std::size_t next = 0;
  TwistWord w = start;
  if (next < checkpoints.size() && w == checkpoints[next]) ++next;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      w = apply_move(w, script[i]);
    } catch (const Error& err) {
      return Failed{i, std::string(to_string(err.kind())) + ": " + err.detail()};
    }
    if (next < checkpoints.size() && w == checkpoints[next]) ++next;
  }
  if (next < checkpoints.size())
    return Failed{script.size(), "checkpoint " + std::to_string(next + 1) + " (" + format_word(checkpoints[next]) +
                                     ") never reached; final word " + format_word(w)};
  return Verified{};
}

Derivation parse_derivation(std::string_view text) {
  Derivation out;
  bool have_start = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    try {
      if (line.rfind("start ", 0) == 0) {
        if (have_start) throw Error(ErrorKind::Parse, "second start line");
        out.start = parse_word(line.substr(6));
        have_start = true;
      } else if (line.rfind("check ", 0) == 0) {
        out.checkpoints.push_back(parse_word(line.substr(6)));
      } else {
        if (!have_start) throw Error(ErrorKind::Parse, "move before start line");
        out.script.push_back(parse_move(line));
      }
    } catch (const Error& err) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + err.detail());
    }
  }
  if (!have_start) throw Error(ErrorKind::Parse, "missing start line");
  return out;
}

namespace {

// r freely reduced; returns (u, c) with r = u c u^-1.
std::optional<PositiveBlock> as_conjugate(const TwistWord& r) {
  if (r.size() % 2 == 0) return std::nullopt;
  const std::size_t k = r.size() / 2;
  if (r[k].exponent != 1) return std::nullopt;
  for (std::size_t j = 0; j < k; ++j)
    if (r[k + 1 + j] != r[k - 1 - j].inverse()) return std::nullopt;
  PositiveBlock b;
  b.conjugator.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
  b.curve = r[k].curve;
  return b;
}

}  // namespace

PositivityResult is_positive_factorization(const TwistWord& w) {
  const std::size_t n = w.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(n + 1, kNone), cut(n + 1, 0);
  std::vector<std::optional<PositiveBlock>> via(n + 1);
  best[0] = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i] == kNone || best[i] + 1 >= best[j]) continue;
      const TwistWord seg(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
      if (auto b = as_conjugate(free_reduce(seg))) {
        best[j] = best[i] + 1;
        cut[j] = i;
        b->begin = i;
        b->end = j;
        via[j] = std::move(b);
      }
    }
  }
  if (best[n] == kNone) return NotRecognized{};
  Positive out;
  for (std::size_t j = n; j > 0; j = cut[j]) out.blocks.push_back(*via[j]);
  std::reverse(out.blocks.begin(), out.blocks.end());
  return out;
}

namespace {

std::array<Int, 3> homology_class(Curve c) {
  switch (c) {
    case Curve::A1: return {1, 0, 0};
    case Curve::E: return {0, 1, 0};
    case Curve::A2: return {1, 0, 1};
    case Curve::D1: return {0, 0, 1};
    case Curve::D2: return {0, 0, -1};
  }
  return {0, 0, 0};
}

}  // namespace

IntMatrix homological_shadow(const TwistWord& w) {
  IntMatrix acc = IntMatrix::identity(3);
  for (const Letter& l : w) {
    const auto c = homology_class(l.curve);
    // <x, c> = x_a c_b - x_b c_a, so the transvection is I - k c (c_b, -c_a, 0)^T.
    const std::array<Int, 3> row{c[1], -c[0], 0};
    IntMatrix t = IntMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = checked::sub(t(i, j), l.exponent * c[i] * row[j]);
    acc = acc * t;
  }
  return acc;
}

}  // namespace torusfill
