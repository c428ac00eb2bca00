#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "factored.hpp"

namespace lcalc {

// Canonical text form.
//
//   unit * (1 - M_1)^e_1 * (1 - M_2)^e_2 * ...
//
// Monomial variables print Param names first (lexicographically), then T,
// then X; exponent 1 is omitted; a factor whose monomial has negative
// coefficient prints as (1 + ...).  Factors follow the canonical key order
// of FactoredLFunction, so equal objects always serialize identically.
// parse_factored() inverts the format (and tolerates redundant ^1, spacing
// and either sign form), giving round-trip stability.

namespace detail {

inline int render_rank(const VarId& v) {
  switch (v.kind) {
    case VarKind::Param: return 0;
    case VarKind::T: return 1;
    default: return 2;
  }
}

inline std::vector<std::pair<VarId, int>> render_ordered(const ExpMap& e) {
  std::vector<std::pair<VarId, int>> out(e.begin(), e.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int ra = render_rank(a.first), rb = render_rank(b.first);
    if (ra != rb) return ra < rb;
    return a.first.name < b.first.name;
  });
  return out;
}

// Monomial body without the sign: "3/2*x1*T*X^3" or "1" for a bare unit.
inline std::string mono_body(const Rational& abs_coeff, const ExpMap& exps) {
  std::string s;
  if (abs_coeff != 1 || exps.empty()) s = to_string(abs_coeff);
  for (const auto& [v, e] : render_ordered(exps)) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace detail

inline std::string to_text(const Monomial& m) {
  if (m.is_zero()) return "0";
  std::string s = m.coeff < 0 ? "-" : "";
  return s + detail::mono_body(abs(m.coeff), m.exps);
}

inline std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    s += detail::mono_body(abs(c), e);
  }
  return s;
}

inline std::string to_text(const FactoredLFunction& f) {
  std::string s;
  if (!f.unit().is_one() || f.factors().empty()) s = to_text(f.unit());
  for (const auto& [M, e] : f.factors()) {
    if (!s.empty()) s += " * ";
    Monomial body = M;
    char sign = '-';
    if (body.coeff < 0) {
      sign = '+';
      body.coeff = -body.coeff;
    }
    s += "(1 ";
    s += sign;
    s += ' ';
    s += detail::mono_body(body.coeff, body.exps);
    s += ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline std::string to_text(const TruncatedSeries& s) {
  std::string out;
  const std::string g = s.grading().str();
  for (int d = 0; d <= s.bound(); ++d) {
    const Poly& c = s.coeff(d);
    if (c.is_zero()) continue;
    std::string cs = to_text(c);
    if (c.term_count() > 1) cs = "(" + cs + ")";
    std::string term;
    if (d == 0)
      term = cs;
    else if (cs == "1")
      term = g + (d == 1 ? "" : "^" + std::to_string(d));
    else
      term = cs + "*" + g + (d == 1 ? "" : "^" + std::to_string(d));
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  out += " + O(" + g + "^" + std::to_string(s.bound() + 1) + ")";
  return out;
}

namespace detail {

inline std::string latex_subscript(const std::string& name) {
  std::size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i == 0 || i == name.size()) return name;
  return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

inline std::string latex_monomial(const Monomial& m) {
  std::string s;
  if (m.coeff != 1 || m.exps.empty()) {
    if (m.coeff == -1 && !m.exps.empty())
      s = "-";
    else if (m.coeff.get_den() == 1)
      s = m.coeff.get_num().get_str();
    else
      s = "\\tfrac{" + m.coeff.get_num().get_str() + "}{" +
          m.coeff.get_den().get_str() + "}";
  }
  int tExp = 0, xExp = 0;
  for (const auto& [v, e] : render_ordered(m.exps)) {
    if (v.kind == VarKind::T) {
      tExp = e;
      continue;
    }
    if (v.kind == VarKind::X) {
      xExp = e;
      continue;
    }
    if (!s.empty() && s != "-") s += " ";
    s += latex_subscript(v.name);
    if (e != 1) s += "^{" + std::to_string(e) + "}";
  }
  if (tExp != 0 || xExp != 0) {
    // q^{-s} = X and q^{-1/2} = T, so T^a X^b = q^{-a/2 - b s}.
    std::string ex;
    if (tExp != 0) {
      if (tExp % 2 == 0)
        ex += std::to_string(-tExp / 2);
      else
        ex += (tExp > 0 ? "-" : "") + std::to_string(std::abs(tExp)) + "/2";
    }
    if (xExp != 0) {
      int b = -xExp;
      if (!ex.empty() && b > 0) ex += "+";
      if (b == -1)
        ex += "-";
      else if (b != 1)
        ex += std::to_string(b);
      ex += "s";
    }
    if (!s.empty() && s != "-") s += " ";
    s += "q^{" + ex + "}";
  }
  if (s.empty() || s == "-") s += "1";
  return s;
}

inline std::string latex_factor(const Monomial& M, int e) {
  Monomial body = M;
  std::string sign = "-";
  if (body.coeff < 0) {
    sign = "+";
    body.coeff = -body.coeff;
  }
  std::string s = "(1 " + sign + " " + latex_monomial(body) + ")";
  if (e != 1) s += "^{" + std::to_string(e) + "}";
  return s;
}

}  // namespace detail

// Renders into a quotient: positive-exponent factors in the numerator,
// negative-exponent factors (the inverse Euler factors) in the denominator.
inline std::string to_latex(const FactoredLFunction& f) {
  std::string num, den;
  for (const auto& [M, e] : f.factors()) {
    if (e > 0)
      num += (num.empty() ? "" : "\\,") + detail::latex_factor(M, e);
    else
      den += (den.empty() ? "" : "\\,") + detail::latex_factor(M, -e);
  }
  std::string u;
  if (!f.unit().is_one() || (num.empty() && den.empty()))
    u = detail::latex_monomial(f.unit());
  std::string body;
  if (den.empty())
    body = num;
  else
    body = "\\frac{" + (num.empty() ? "1" : num) + "}{" + den + "}";
  if (u.empty()) return body;
  if (body.empty()) return u;
  return u + "\\," + body;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct Lexer {
  std::string src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() &&
           std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }

  bool number_ahead() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c));
  }
  bool ident_ahead() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Rational number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (start == pos) fail("expected a number");
    std::string num = src.substr(start, pos - start);
    std::size_t save = pos;
    skip_ws();
    if (pos < src.size() && src[pos] == '/') {
      ++pos;
      skip_ws();
      std::size_t dstart = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      if (dstart == pos) {
        pos = save;  // the '/' belonged to something else
      } else {
        num += "/" + src.substr(dstart, pos - dstart);
      }
    } else {
      pos = save;
    }
    return parse_rational(num);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) ||
            src[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return src.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (start == pos) fail("expected an integer");
    int v = std::stoi(src.substr(start, pos - start));
    return neg ? -v : v;
  }
};

inline VarId var_from_name(const std::string& n) {
  if (n == "T") return VarId::t();
  if (n == "X") return VarId::x();
  return VarId::param(n);
}

// rational | var[^int], as one multiplicand of a monomial.
inline Monomial mono_part(Lexer& lx) {
  if (lx.number_ahead()) return Monomial(lx.number());
  if (!lx.ident_ahead()) lx.fail("expected a variable or number");
  VarId v = var_from_name(lx.ident());
  int e = lx.accept('^') ? lx.integer() : 1;
  return Monomial::var(v, e);
}

inline Monomial monomial(Lexer& lx) {
  bool neg = false;
  while (true) {
    if (lx.accept('-'))
      neg = !neg;
    else if (!lx.accept('+'))
      break;
  }
  Monomial m = mono_part(lx);
  while (true) {
    std::size_t save = lx.pos;
    if (!lx.accept('*')) break;
    if (!lx.number_ahead() && !lx.ident_ahead()) {
      lx.pos = save;  // '*' separates top-level atoms, not monomial parts
      break;
    }
    m *= mono_part(lx);
  }
  if (neg) m.coeff = -m.coeff;
  return m;
}

}  // namespace detail

inline FactoredLFunction parse_factored(const std::string& text) {
  detail::Lexer lx{text};
  FactoredLFunction f;
  bool first = true;
  bool negate = false;
  while (true) {
    if (first) {
      while (true) {
        if (lx.accept('-'))
          negate = !negate;
        else if (!lx.accept('+'))
          break;
      }
    }
    if (lx.accept('(')) {
      lx.skip_ws();
      // "(1 - M)" factor or a parenthesized rational.
      std::size_t save = lx.pos;
      bool is_factor = false;
      if (lx.number_ahead()) {
        Rational r = lx.number();
        if (r == 1 && (lx.peek() == '-' || lx.peek() == '+')) is_factor = true;
        if (!is_factor) {
          lx.expect(')');
          int e = lx.accept('^') ? lx.integer() : 1;
          f.mul_unit(Monomial(rational_pow(r, e)));
        }
      } else {
        lx.pos = save;
        lx.fail("expected a factor or rational after '('");
      }
      if (is_factor) {
        bool plus = lx.accept('+');
        if (!plus) lx.expect('-');
        Monomial M = detail::monomial(lx);
        if (plus) M.coeff = -M.coeff;
        lx.expect(')');
        int e = lx.accept('^') ? lx.integer() : 1;
        f.mul_factor(M, e);
      }
    } else if (lx.number_ahead() || lx.ident_ahead()) {
      f.mul_unit(detail::monomial(lx));
    } else if (lx.eof()) {
      if (first) lx.fail("empty input");
      lx.fail("trailing '*'");
    } else {
      lx.fail("unexpected character");
    }
    first = false;
    if (lx.eof()) break;
    lx.expect('*');
  }
  if (negate) f.mul_unit(Monomial(Rational(-1)));
  return f;
}

// A single monomial expression, e.g. "x1", "3/2", "-2*x^-1*T".
inline Monomial parse_monomial(const std::string& text) {
  detail::Lexer lx{text};
  Monomial m = detail::monomial(lx);
  if (!lx.eof()) lx.fail("unexpected trailing input");
  return m;
}

}  // namespace lcalc
