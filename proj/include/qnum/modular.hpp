#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnum/error.hpp"
#include "qnum/integer.hpp"
#include "qnum/laurent.hpp"
#include "qnum/polynomial.hpp"
#include "qnum/rational_function.hpp"

namespace qnum {

/// 2x2 matrix over any ring-like T, row-major [[a, b], [c, d]].
template <typename T>
struct mat2 {
  T a, b, c, d;

  friend mat2 operator*(const mat2& x, const mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const mat2&, const mat2&) = default;

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
};

/// Integer matrix of determinant one, taken up to sign.
struct matrix_z : mat2<integer> {
  matrix_z() : mat2<integer>{1, 0, 0, 1} {}
  matrix_z(integer a_, integer b_, integer c_, integer d_) : mat2<integer>{std::move(a_), std::move(b_), std::move(c_), std::move(d_)} {}
  explicit matrix_z(const mat2<integer>& m) : mat2<integer>(m) {}

  static matrix_z T(long n = 1) { return {1, n, 0, 1}; }
  static matrix_z S() { return {0, -1, 1, 0}; }

  void require_unimodular() const {
    if (det() != 1) throw error(errc::not_unimodular, "determinant is " + det().str() + ", expected 1");
  }

  friend matrix_z operator*(const matrix_z& x, const matrix_z& y) {
    return matrix_z(static_cast<const mat2<integer>&>(x) * static_cast<const mat2<integer>&>(y));
  }

  /// Equality in PSL(2, Z).
  bool projectively_equal(const matrix_z& o) const {
    return static_cast<const mat2<integer>&>(*this) == o ||
           (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
  }

  std::string to_string() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
  }
};

/// Word in T^n and S. Adjacent T-runs merge, T^0 vanishes and S S cancels, so a
/// word is always stored reduced.
class generator_word {
 public:
  struct token {
    char kind;  // 'T' or 'S'
    long exponent;
    friend bool operator==(const token&, const token&) = default;
  };

  generator_word() = default;

  static generator_word parse(std::string_view text) {
    generator_word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok == "S") {
        w.push_S();
      } else if (tok[0] == 'T') {
        const std::string_view rest = std::string_view(tok).substr(1);
        if (rest.empty()) w.push_T(1);
        else if (is_integer_literal(rest)) w.push_T(std::stol(std::string(rest)));
        else throw error(errc::parse_error, "bad word token '" + tok + "'");
      } else {
        throw error(errc::parse_error, "bad word token '" + tok + "'");
      }
    }
    return w;
  }

  void push_T(long n) {
    if (n == 0) return;
    if (!tokens_.empty() && tokens_.back().kind == 'T') {
      tokens_.back().exponent += n;
      if (tokens_.back().exponent == 0) tokens_.pop_back();
      return;
    }
    tokens_.push_back({'T', n});
  }

  void push_S() {
    if (!tokens_.empty() && tokens_.back().kind == 'S') {
      tokens_.pop_back();
      return;
    }
    tokens_.push_back({'S', 1});
  }

  void append(const generator_word& o) {
    for (const auto& t : o.tokens_) t.kind == 'S' ? push_S() : push_T(t.exponent);
  }

  const std::vector<token>& tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }
  friend bool operator==(const generator_word&, const generator_word&) = default;

  /// Number of T and S letters, counting T^n as |n|.
  long length() const {
    long n = 0;
    for (const auto& t : tokens_) n += t.kind == 'S' ? 1 : std::abs(t.exponent);
    return n;
  }

  matrix_z to_matrix() const {
    matrix_z m;
    for (const auto& t : tokens_) m = m * (t.kind == 'S' ? matrix_z::S() : matrix_z::T(t.exponent));
    return m;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& t : tokens_) {
      if (!out.empty()) out += ' ';
      if (t.kind == 'S') out += 'S';
      else out += t.exponent == 1 ? std::string("T") : "T" + std::to_string(t.exponent);
    }
    return out;
  }

 private:
  std::vector<token> tokens_;
};

/// Word for A in T and S, driven by the negative continued fraction of the first column.
///
/// Each step peels T^c0 S with c0 = ceil(a/c) until the lower-left entry is zero; the
/// remaining T^x is written as T^(x+1) S T S T S when it closes a nonempty word with x >= 1.
inline generator_word decompose(matrix_z A) {
  A.require_unimodular();
  if (A.c < 0 || (A.c == 0 && A.a < 0)) A = matrix_z(-A.a, -A.b, -A.c, -A.d);
  generator_word w;
  while (A.c != 0) {
    const integer c0 = ceil_div(A.a, A.c);
    w.push_T(static_cast<long>(c0));
    w.push_S();
    A = matrix_z(A.c, A.d, c0 * A.c - A.a, c0 * A.d - A.b);
  }
  const long x = static_cast<long>(A.b);
  if (w.empty() || x <= 0) {
    w.push_T(x);
  } else {
    w.push_T(x + 1);
    for (int i = 0; i < 2; ++i) {
      w.push_S();
      w.push_T(1);
    }
    w.push_S();
  }
  return w;
}

/// 2x2 polynomial matrix up to a scalar multiple, kept in canonical form: entries share
/// no common factor (including powers of q and integer content), and the trace's lowest
/// coefficient is positive. When the trace vanishes the first nonzero entry in the order
/// a, c, b, d fixes the sign instead.
class qmatrix {
 public:
  qmatrix() : m_{polynomial{1}, polynomial{}, polynomial{}, polynomial{1}} {}
  qmatrix(polynomial a, polynomial b, polynomial c, polynomial d)
      : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    canonicalize();
  }

  static qmatrix T() { return {polynomial{0, 1}, polynomial{1}, polynomial{}, polynomial{1}}; }
  static qmatrix S() { return {polynomial{}, polynomial{-1}, polynomial{0, 1}, polynomial{}}; }

  /// T_q^n: [[q^n, [n]_q], [0, 1]] for n >= 0, [[1, -[n]_q], [0, q^n]] for n < 0.
  static qmatrix T(long n) {
    if (n >= 0) {
      const auto k = static_cast<std::size_t>(n);
      return {polynomial::monomial(1, k), polynomial::q_integer(k), polynomial{}, polynomial{1}};
    }
    const auto k = static_cast<std::size_t>(-n);
    return {polynomial{1}, -polynomial::q_integer(k), polynomial{}, polynomial::monomial(1, k)};
  }

  const polynomial& a() const noexcept { return m_.a; }
  const polynomial& b() const noexcept { return m_.b; }
  const polynomial& c() const noexcept { return m_.c; }
  const polynomial& d() const noexcept { return m_.d; }
  const mat2<polynomial>& entries() const noexcept { return m_; }

  friend qmatrix operator*(const qmatrix& x, const qmatrix& y) {
    const mat2<polynomial> p = x.m_ * y.m_;
    return {p.a, p.b, p.c, p.d};
  }
  friend bool operator==(const qmatrix&, const qmatrix&) = default;

  polynomial trace() const { return m_.a + m_.d; }
  polynomial det() const { return m_.det(); }

  /// Entries at q = 1.
  matrix_z at_one() const {
    const integer one = 1;
    return {m_.a.evaluate(one), m_.b.evaluate(one), m_.c.evaluate(one), m_.d.evaluate(one)};
  }

  std::string to_string() const {
    return "[[" + m_.a.to_string() + ", " + m_.b.to_string() + "], [" + m_.c.to_string() + ", " +
           m_.d.to_string() + "]]";
  }

 private:
  void canonicalize() {
    polynomial g = gcd(gcd(m_.a, m_.b), gcd(m_.c, m_.d));
    if (g.is_zero()) throw error(errc::invalid_arguments, "zero matrix");
    if (g.degree() > 0 || abs(g.leading()) != 1) {
      m_.a = exact_div(m_.a, g);
      m_.b = exact_div(m_.b, g);
      m_.c = exact_div(m_.c, g);
      m_.d = exact_div(m_.d, g);
    }
    const polynomial tr = trace();
    int s = 0;
    if (!tr.is_zero()) {
      s = tr.lowest().sign();
    } else {
      for (const polynomial* e : {&m_.a, &m_.c, &m_.b, &m_.d})
        if (!e->is_zero()) {
          s = e->lowest().sign();
          break;
        }
    }
    if (s < 0) {
      m_.a = -m_.a;
      m_.b = -m_.b;
      m_.c = -m_.c;
      m_.d = -m_.d;
    }
  }

  mat2<polynomial> m_;
};

/// Substitute T_q and S_q for the letters of a word.
inline qmatrix q_deform(const generator_word& w) {
  qmatrix m;
  for (const auto& t : w.tokens()) m = m * (t.kind == 'S' ? qmatrix::S() : qmatrix::T(t.exponent));
  return m;
}

inline qmatrix q_deform(const matrix_z& A) { return q_deform(decompose(A)); }

inline polynomial trace_poly(const qmatrix& m) { return m.trace(); }

/// Fractional-linear action on the projective line over Q(q).
inline rational_function moebius(const mat2<polynomial>& m, const rational_function& x) {
  return rational_function::reduce(m.a * x.num() + m.b * x.den(), m.c * x.num() + m.d * x.den());
}

inline rational_function moebius(const qmatrix& m, const rational_function& x) { return moebius(m.entries(), x); }

enum class element_class { elliptic, parabolic, hyperbolic };

inline element_class classify(const matrix_z& A) {
  A.require_unimodular();
  const integer t = abs(A.trace());
  if (t >= 3) return element_class::hyperbolic;
  if (t == 2) return element_class::parabolic;
  return element_class::elliptic;
}

inline std::string to_string(element_class c) {
  switch (c) {
    case element_class::elliptic: return "elliptic";
    case element_class::parabolic: return "parabolic";
    case element_class::hyperbolic: return "hyperbolic";
  }
  return "";
}

}  // namespace qnum
