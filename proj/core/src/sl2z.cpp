#include "torusfill/sl2z.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "torusfill/intmat.hpp"

namespace torusfill {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  using namespace checked;
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Mat2 Mat2::inverse() const {
  const Int dt = det();
  if (dt == 1) return {d, checked::neg(b), checked::neg(c), a};
  if (dt == -1) return {checked::neg(d), b, c, checked::neg(a)};
  throw Error(ErrorKind::NotSL2, "matrix " + format_mat2(*this) + " has determinant " + std::to_string(dt));
}

Mat2 Mat2::operator-() const { return {checked::neg(a), checked::neg(b), checked::neg(c), checked::neg(d)}; }

Int Mat2::max_abs_entry() const {
  return std::max({checked::abs(a), checked::abs(b), checked::abs(c), checked::abs(d)});
}

Mat2 pow(const Mat2& m, Int exponent) {
  Mat2 base = exponent < 0 ? m.inverse() : m;
  Int e = exponent < 0 ? checked::neg(exponent) : exponent;
  Mat2 out = mat2::I;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char ch) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == ch) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!eat(ch)) fail(std::string("expected '") + ch + "'");
  }
  Int integer() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) fail("expected an integer");
    try {
      return std::stoll(std::string(s_.substr(start, i_ - start)));
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::Overflow, "integer literal out of range");
    }
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "matrix '" + std::string(s_) + "': " + why);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Mat2 parse_mat2(std::string_view text) {
  Cursor cur(text);
  Mat2 m;
  if (cur.eat('[')) {
    cur.expect('[');
    m.a = cur.integer();
    cur.expect(',');
    m.b = cur.integer();
    cur.expect(']');
    cur.expect(',');
    cur.expect('[');
    m.c = cur.integer();
    cur.expect(',');
    m.d = cur.integer();
    cur.expect(']');
    cur.expect(']');
  } else {
    m.a = cur.integer();
    cur.expect(',');
    m.b = cur.integer();
    cur.expect(';');
    m.c = cur.integer();
    cur.expect(',');
    m.d = cur.integer();
  }
  if (!cur.done()) cur.fail("trailing characters");
  if (!m.unimodular())
    throw Error(ErrorKind::NotSL2, "matrix " + format_mat2(m) + " has determinant " + std::to_string(m.det()));
  return m;
}

std::string format_mat2(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
  return os.str();
}

std::string_view to_string(BundleKind kind) {
  switch (kind) {
    case BundleKind::Elliptic: return "Elliptic";
    case BundleKind::Parabolic: return "Parabolic";
    case BundleKind::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

std::string_view to_string(TraceSign sign) {
  switch (sign) {
    case TraceSign::Positive: return "Positive";
    case TraceSign::Negative: return "Negative";
    case TraceSign::ZeroTrace: return "ZeroTrace";
  }
  return "?";
}

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::Unknown: return "Unknown";
  }
  return "?";
}

void require_sl2(const Mat2& m, std::string_view what) {
  const Int dt = m.det();
  if (dt != 1)
    throw Error(ErrorKind::NotSL2,
                std::string(what) + " " + format_mat2(m) + " has determinant " + std::to_string(dt));
}

BundleClass classify(const Mat2& monodromy) {
  require_sl2(monodromy, "monodromy");
  const Int tr = monodromy.trace();
  const Int at = checked::abs(tr);
  const BundleKind kind = at < 2 ? BundleKind::Elliptic : (at == 2 ? BundleKind::Parabolic : BundleKind::Hyperbolic);
  const TraceSign sign = tr > 0 ? TraceSign::Positive : (tr < 0 ? TraceSign::Negative : TraceSign::ZeroTrace);
  return {kind, sign, tr};
}

PrimitiveSlope::PrimitiveSlope(Int p, Int q) : p_(p), q_(q) {
  if (gcd(p, q) != 1)
    throw Error(ErrorKind::NotPrimitive, "slope (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
}

Mat2 word_eval(const std::vector<GeneratorPower>& word) {
  Mat2 out = mat2::I;
  for (const auto& [letter, exponent] : word) out = out * pow(letter == Generator::S ? mat2::S : mat2::T, exponent);
  return out;
}

Mat2 dehn_twist_matrix(const PrimitiveSlope& slope) {
  using namespace checked;
  const Int p = slope.p(), q = slope.q();
  const Int pq = mul(p, q);
  return {sub(1, pq), mul(p, p), neg(mul(q, q)), add(1, pq)};
}

SurgeryResult legendrian_surgery_monodromy(const Mat2& a, const PrimitiveSlope& slope) {
  SurgeryResult out{a * dehn_twist_matrix(slope), {}};
  const BundleClass before = classify(a);
  if (!before.negative_parabolic() && !before.negative_hyperbolic())
    out.warnings.push_back("input monodromy " + format_mat2(a) +
                           " is not negative parabolic or negative hyperbolic; the surgery identification does not apply");
  const BundleClass after = classify(out.monodromy);
  if (!after.negative_parabolic() && !after.negative_hyperbolic())
    out.warnings.push_back("result " + format_mat2(out.monodromy) +
                           " is not negative parabolic or negative hyperbolic; no contact structure is attached");
  return out;
}

Mat2 cover_monodromy(const Mat2& a, Int k) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "cover degree must be >= 1, got " + std::to_string(k));
  return pow(a, k);
}

// ---------------------------------------------------------------------------
// Conjugacy witness search.
//
// Away from A = +-I the integer solutions of X A = B X form a rank-2 lattice
// parametrized by the image of a cyclic vector. det restricted to it is a
// binary quadratic form, so det X = 1 is solved one coordinate at a time.

bool witness_order_less(const Mat2& x, const Mat2& y) {
  auto key = [](const Mat2& m) {
    const Int l1 = checked::abs(m.a) + checked::abs(m.b) + checked::abs(m.c) + checked::abs(m.d);
    return std::array<Int, 5>{l1, -m.a, -m.b, -m.c, -m.d};
  };
  return key(x) < key(y);
}

namespace {

using Vec4 = std::array<Int, 4>;

Mat2 as_mat(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

Wide dot(const Vec4& x, const Vec4& y) {
  Wide s = 0;
  for (int i = 0; i < 4; ++i) s += Wide(x[i]) * y[i];
  return s;
}

// Lagrange-Gauss reduction of a rank-2 lattice basis.
void reduce_pair(Vec4& u, Vec4& v) {
  for (;;) {
    if (dot(u, u) > dot(v, v)) std::swap(u, v);
    const Wide uu = dot(u, u);
    const Wide uv = dot(u, v);
    // nearest integer to uv / uu
    Wide q = uv >= 0 ? (2 * uv + uu) / (2 * uu) : -((-2 * uv + uu) / (2 * uu));
    if (q == 0) return;
    const Int qi = checked::narrow(q);
    for (int i = 0; i < 4; ++i) v[i] = checked::sub(v[i], checked::mul(qi, u[i]));
    if (dot(v, v) >= dot(u, u)) return;  // also ends the |2 u.v| == |u|^2 tie cycle
  }
}

Wide isqrt(Wide n) {
  if (n < 0) return -1;
  Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Wide wmul(Wide x, Wide y) {
  Wide r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "witness search coefficient overflow");
  return r;
}

struct Best {
  std::optional<Mat2> x;
  void offer(const Mat2& m) {
    if (!x || witness_order_less(m, *x)) x = m;
  }
};

bool in_box(const Mat2& m, Int bound) { return m.max_abs_entry() <= bound; }

// Enumerate s in [-range, range]; for each s solve q2 t^2 + (q1 s) t + (q0 s^2 - 1) = 0.
// `make(s, t)` builds the candidate.
template <typename Make>
void solve_form(Wide q0, Wide q1, Wide q2, Int range_s, Int range_t, Make make, Best& best, Int bound) {
  for (Int s = -range_s; s <= range_s; ++s) {
    const Wide ws = s;
    const Wide lin = wmul(q1, ws);
    const Wide con = wmul(wmul(q0, ws), ws) - 1;
    auto try_t = [&](Wide t) {
      if (t < -Wide(range_t) || t > Wide(range_t)) return;
      const Mat2 m = make(s, static_cast<Int>(t));
      if (in_box(m, bound) && m.det() == 1) best.offer(m);
    };
    if (q2 != 0) {
      const Wide disc = wmul(lin, lin) - wmul(wmul(4, q2), con);
      if (disc < 0) continue;
      const Wide r = isqrt(disc);
      if (r * r != disc) continue;
      for (const Wide num : {-lin + r, -lin - r}) {
        const Wide den = 2 * q2;
        if (num % den == 0) try_t(num / den);
      }
    } else if (lin != 0) {
      if ((-con) % lin == 0) try_t(-con / lin);
    } else if (con == 0) {
      for (Int t = -range_t; t <= range_t; ++t) try_t(t);
    }
  }
}

}  // namespace

std::optional<Mat2> conjugacy_witness_search(const Mat2& a, const Mat2& b, Int bound) {
  require_sl2(a, "A");
  require_sl2(b, "B");
  if (bound < 1) throw Error(ErrorKind::OutOfRange, "witness bound must be >= 1");
  using namespace checked;
  Best best;
  if (a.b == 0 && a.c == 0) {
    // A = +-I commutes with everything, so a witness exists iff B = A.
    if (b != a) return std::nullopt;
    for (Int l1 = 0; l1 <= 4 * bound && !best.x; ++l1)
      for (Int x0 = -std::min(l1, bound); x0 <= std::min(l1, bound); ++x0)
        for (Int x1 = -std::min(l1, bound); x1 <= std::min(l1, bound); ++x1)
          for (Int x2 = -std::min(l1, bound); x2 <= std::min(l1, bound); ++x2) {
            const Int rest = l1 - std::abs(x0) - std::abs(x1) - std::abs(x2);
            if (rest < 0 || rest > bound) continue;
            for (const Int x3 : {rest, -rest}) {
              const Mat2 m{x0, x1, x2, x3};
              if (m.det() == 1) best.offer(m);
              if (rest == 0) break;
            }
          }
    return best.x;
  }
  if (a.trace() != b.trace()) return std::nullopt;

  // A is not scalar, so some basis vector e is cyclic and every solution is
  // determined by u = X e:  X = [u | (B - alpha)u / m]  (e = e1, alpha = a_a,
  // m = a_c) or X = [(B - alpha)u / m | u]  (e = e2, alpha = a_d, m = a_b).
  const bool first = a.c != 0;
  const Int alpha = first ? a.a : a.d;
  const Int modulus = abs(first ? a.c : a.b);
  const IntMatrix shifted{{sub(b.a, alpha), b.b}, {b.c, sub(b.d, alpha)}};
  auto build = [&](Int u0, Int u1) -> Vec4 {
    const Int w0 = add(mul(shifted(0, 0), u0), mul(shifted(0, 1), u1)) / (first ? a.c : a.b);
    const Int w1 = add(mul(shifted(1, 0), u0), mul(shifted(1, 1), u1)) / (first ? a.c : a.b);
    return first ? Vec4{u0, w0, u1, w1} : Vec4{w0, u0, w1, u1};
  };
  // Integral u: (B - alpha) u = 0 mod m. In Smith coordinates y = V^-1 u this
  // reads d_i y_i = 0 mod m, i.e. y_i in (m / gcd(m, d_i)) Z.
  const SmithForm snf = smith_normal_form(shifted);
  std::vector<Vec4> kernel;
  for (std::size_t j = 0; j < 2; ++j) {
    const Int g = modulus / std::gcd(modulus, snf.diagonal[j]);
    kernel.push_back(build(mul(snf.right(0, j), g), mul(snf.right(1, j), g)));
  }

  Vec4 u = kernel[0], v = kernel[1];
  reduce_pair(u, v);

  // Coordinates (i, j) with the largest 2x2 minor recover (s, t) from X.
  Wide minor = 0;
  int bi = 0, bj = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Wide mm = Wide(u[i]) * v[j] - Wide(u[j]) * v[i];
      if ((mm < 0 ? -mm : mm) > (minor < 0 ? -minor : minor)) {
        minor = mm;
        bi = i;
        bj = j;
      }
    }
  const Wide am = minor < 0 ? -minor : minor;
  const Wide s_range = (Wide(bound) * (std::abs(v[bi]) + std::abs(v[bj]))) / am;
  const Wide t_range = (Wide(bound) * (std::abs(u[bi]) + std::abs(u[bj]))) / am;
  const Int rs = checked::narrow(s_range);
  const Int rt = checked::narrow(t_range);

  // det(s u + t v) = q0 s^2 + q1 s t + q2 t^2
  const Wide q0 = Wide(u[0]) * u[3] - Wide(u[1]) * u[2];
  const Wide q2 = Wide(v[0]) * v[3] - Wide(v[1]) * v[2];
  const Wide q1 = Wide(u[0]) * v[3] + Wide(v[0]) * u[3] - Wide(u[1]) * v[2] - Wide(v[1]) * u[2];

  auto combo = [&](Int s, Int t) {
    Vec4 x;
    for (int i = 0; i < 4; ++i) x[i] = add(mul(s, u[i]), mul(t, v[i]));
    return as_mat(x);
  };
  if (rs <= rt) {
    solve_form(q0, q1, q2, rs, rt, combo, best, bound);
  } else {
    solve_form(q2, q1, q0, rt, rs, [&](Int t, Int s) { return combo(s, t); }, best, bound);
  }
  return best.x;
}

}  // namespace torusfill
