// Copyright 2026 The zxverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxv/dsl.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "zxv/errors.hpp"

namespace zxv {

namespace {

enum class Tok { Ident, Number, Radians, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& s, SourceSpan origin) {
  std::vector<Token> out;
  std::size_t line = origin.line, col = origin.column;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() &&
                                                        std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          j = k;
        }
      }
      // a number glued to a lone 'r' is an angle in radians
      if (j < s.size() && s[j] == 'r' && (j + 1 >= s.size() || !ident_char(s[j + 1]))) {
        out.push_back({Tok::Radians, s.substr(i, j - i), l, cl});
        advance(j + 1 - i);
        continue;
      }
      out.push_back({Tok::Number, s.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (std::string("[](),;*+-/=").find(c) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), l, cl});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_integer_text(const std::string& t) {
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return !t.empty();
}

class Parser {
 public:
  Parser(const std::string& text, SourceSpan origin) : toks_(tokenize(text, origin)) {}

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_symbol(char c, std::size_t k = 0) const {
    return peek(k).kind == Tok::Symbol && peek(k).text[0] == c;
  }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg + (t.kind == Tok::End ? " (at end of input)" : " near '" + t.text + "'"),
                     t.line, t.column);
  }

  void expect(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'", peek());
    next();
  }

  std::size_t parse_count() {
    const Token& t = next();
    if (t.kind != Tok::Number || !is_integer_text(t.text)) fail("expected a wire count", t);
    if (t.text.size() > 3) fail("wire count too large", t);
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  std::int64_t parse_int(const Token& t) {
    if (t.kind != Tok::Number || !is_integer_text(t.text)) fail("expected an integer", t);
    errno = 0;
    const long long v = std::strtoll(t.text.c_str(), nullptr, 10);
    if (errno == ERANGE) fail("integer out of range", t);
    return v;
  }

  double parse_double_text(const Token& t) {
    errno = 0;
    const double v = std::strtod(t.text.c_str(), nullptr);
    if (errno == ERANGE) fail("number out of range", t);
    return v;
  }

  // -------------------------------------------------------------- phases
  PhaseExpr parse_phase_expr() {
    PhaseExpr acc;
    bool first = true;
    while (true) {
      int sign = 1;
      if (at_symbol('+') || at_symbol('-')) {
        sign = at_symbol('-') ? -1 : 1;
        next();
      } else if (!first) {
        break;
      }
      acc = acc + parse_phase_term(sign);
      first = false;
      if (!(at_symbol('+') || at_symbol('-'))) break;
    }
    return acc;
  }

  PhaseExpr parse_phase_term(int sign) {
    const Token start = peek();
    if (start.kind == Tok::Radians) {
      next();
      return PhaseExpr::radians(sign * parse_double_text(start));
    }
    Rational coeff(1);
    bool have_number = false, decimal = false;
    if (start.kind == Tok::Number) {
      next();
      have_number = true;
      if (is_integer_text(start.text)) {
        coeff = Rational(parse_int(start));
      } else {
        decimal = true;
      }
      if (at_symbol('/') && peek(1).kind == Tok::Number) {
        next();
        const Token den = next();
        if (decimal || !is_integer_text(den.text)) fail("fractions need integer parts", den);
        const std::int64_t d = parse_int(den);
        if (d == 0) fail("division by zero", den);
        coeff = coeff / Rational(d);
      }
      if (at_symbol('*') && peek(1).kind == Tok::Ident) next();
    }
    if (peek().kind == Tok::Ident) {
      const Token id = next();
      if (id.text == "pi") {
        if (decimal) fail("decimal multiples of pi are not supported; use p/q pi", start);
        if (at_symbol('/')) {
          next();
          const Token den = next();
          const std::int64_t d = parse_int(den);
          if (d == 0) fail("division by zero", den);
          coeff = coeff / Rational(d);
        }
        if (at_symbol('*') || peek().kind == Tok::Ident)
          throw NonLinearPhase("pi multiplied by another factor", peek().line, peek().column);
        return PhaseExpr(coeff * Rational(sign));
      }
      if (decimal || !coeff.is_integer())
        throw NonLinearPhase("non-integer coefficient of '" + id.text + "'", start.line,
                             start.column);
      if (at_symbol('*') || at_symbol('/') || peek().kind == Tok::Ident ||
          peek().kind == Tok::Number)
        throw NonLinearPhase("'" + id.text + "' is not used linearly", peek().line,
                             peek().column);
      return PhaseExpr::variable(id.text, coeff.num() * sign);
    }
    if (have_number) {
      if (decimal || coeff.is_zero()) {
        if (parse_double_text(start) == 0.0) return PhaseExpr();
      }
      fail("bare number in a phase; write k pi, p/q pi or a radians value like 0.5r", start);
    }
    fail("expected a phase term", start);
  }

  // -------------------------------------------------------------- ZX terms
  Diagram parse_term() {
    Diagram acc = parse_tensor();
    while (at_symbol(';')) {
      const Token op = next();
      Diagram rhs = parse_tensor();
      if (acc.outputs() != rhs.inputs())
        throw ArityMismatch(acc.outputs(), rhs.inputs(),
                            "';' at " + std::to_string(op.line) + ":" + std::to_string(op.column));
      acc = seq(acc, rhs);
    }
    return acc;
  }

  Diagram parse_tensor() {
    Diagram acc = parse_atom();
    while (at_symbol('*')) {
      next();
      acc = tensor(acc, parse_atom());
    }
    return acc;
  }

  Diagram parse_atom() {
    if (at_symbol('(')) {
      next();
      Diagram d = parse_term();
      expect(')');
      return d;
    }
    const Token t = next();
    if (t.kind != Tok::Ident) fail("expected a generator", t);
    if (t.text == "Z" || t.text == "X") {
      expect('[');
      const std::size_t n = parse_count();
      expect(',');
      const std::size_t m = parse_count();
      expect(']');
      PhaseExpr p;
      if (at_symbol('(')) {
        next();
        p = parse_phase_expr();
        expect(')');
      }
      return t.text == "Z" ? Diagram::z(n, m, p) : Diagram::x(n, m, p);
    }
    if (t.text == "H") return Diagram::h();
    if (t.text == "id") return Diagram::id();
    if (t.text == "swap") return Diagram::swap();
    if (t.text == "cup") return Diagram::cup();
    if (t.text == "cap") return Diagram::cap();
    if (t.text == "empty") return Diagram::empty();
    if (t.text == "T") return Diagram::triangle();
    fail("unknown generator", t);
  }

  // -------------------------------------------------------------- ZW terms
  ZwParam parse_zw_param() {
    expect('(');
    ZwParam p;
    if (peek().kind == Tok::Ident && peek().text == "exp") {
      next();
      expect('(');
      const PhaseExpr ph = parse_phase_expr();
      expect(')');
      if (!ph.ground()) fail("ZW parameters cannot contain variables", peek());
      p = ZwParam::from_complex(std::polar(1.0, ph.value()));
      if (ph.irrational() == 0.0 && ph.pi_constant().is_small()) {
        try {
          p = ZwParam::from_exact(Cyclotomic::exp_i_pi(ph.pi_constant()));
        } catch (const ExactUnavailable&) {
        }
      }
    } else {
      const double re = parse_signed();
      expect(',');
      const double im = parse_signed();
      p = ZwParam::from_complex({re, im});
    }
    expect(')');
    return p;
  }

  double parse_signed() {
    double sign = 1;
    if (at_symbol('-') || at_symbol('+')) sign = next().text == "-" ? -1 : 1;
    const Token t = next();
    if (t.kind != Tok::Number) fail("expected a number", t);
    return sign * parse_double_text(t);
  }

  ZwDiagram parse_zw_term() {
    ZwDiagram acc = parse_zw_tensor();
    while (at_symbol(';')) {
      const Token op = next();
      ZwDiagram rhs = parse_zw_tensor();
      if (acc.outputs() != rhs.inputs())
        throw ArityMismatch(acc.outputs(), rhs.inputs(),
                            "';' at " + std::to_string(op.line) + ":" + std::to_string(op.column));
      acc = zw_seq(acc, rhs);
    }
    return acc;
  }

  ZwDiagram parse_zw_tensor() {
    ZwDiagram acc = parse_zw_atom();
    while (at_symbol('*')) {
      next();
      acc = zw_tensor(acc, parse_zw_atom());
    }
    return acc;
  }

  ZwDiagram parse_zw_atom() {
    if (at_symbol('(')) {
      next();
      ZwDiagram d = parse_zw_term();
      expect(')');
      return d;
    }
    const Token t = next();
    if (t.kind != Tok::Ident) fail("expected a ZW generator", t);
    if (t.text == "Zw") {
      expect('[');
      const std::size_t n = parse_count();
      expect(',');
      const std::size_t m = parse_count();
      expect(']');
      ZwParam p = ZwParam::one();
      if (at_symbol('(')) p = parse_zw_param();
      return ZwDiagram::zspider(n, m, p);
    }
    if (t.text == "wdot") {
      ZwParam p = ZwParam::one();
      if (at_symbol('(')) p = parse_zw_param();
      return ZwDiagram::wdot(p);
    }
    if (t.text == "W11") return ZwDiagram::w11();
    if (t.text == "W12") return ZwDiagram::w12();
    if (t.text == "fcross") return ZwDiagram::fcross();
    if (t.text == "cup") return ZwDiagram::cup();
    if (t.text == "cap") return ZwDiagram::cap();
    if (t.text == "swap") return ZwDiagram::swap();
    if (t.text == "id") return ZwDiagram::id();
    if (t.text == "empty") return ZwDiagram::empty();
    fail("unknown ZW generator", t);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input", peek());
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string print_zx_impl(const Diagram& d) {
  switch (d.kind()) {
    case Kind::Z:
    case Kind::X: {
      std::string s = std::string(kind_name(d.kind())) + "[" + std::to_string(d.inputs()) + "," +
                      std::to_string(d.outputs()) + "]";
      if (!d.phase().is_zero()) s += "(" + d.phase().to_string() + ")";
      return s;
    }
    case Kind::Seq: {
      const Diagram& b = d.second();
      const std::string rhs = b.kind() == Kind::Seq ? "(" + print_zx_impl(b) + ")" : print_zx_impl(b);
      return print_zx_impl(d.first()) + " ; " + rhs;
    }
    case Kind::Tensor: {
      const Diagram& a = d.first();
      const Diagram& b = d.second();
      const std::string lhs = a.kind() == Kind::Seq ? "(" + print_zx_impl(a) + ")" : print_zx_impl(a);
      const std::string rhs = b.kind() == Kind::Seq || b.kind() == Kind::Tensor
                                  ? "(" + print_zx_impl(b) + ")"
                                  : print_zx_impl(b);
      return lhs + " * " + rhs;
    }
    default:
      return kind_name(d.kind());
  }
}

std::string print_zw_param(const ZwParam& p) {
  // parameter 1 is implicit
  if ((p.exact && p.exact->is_one()) || (!p.exact && p.value == std::complex<double>(1.0, 0.0)))
    return "";
  if (p.exact) {
    if (auto e = p.exact->root_of_unity_exponent())
      return "(exp(" + format_pi_multiple(Rational(2 * *e, p.exact->order())) + "))";
  }
  double re = p.value.real(), im = p.value.imag();
  // exact values carry conversion noise in the other component
  if (p.exact) {
    const double scale = std::abs(p.value);
    if (std::abs(re) < 1e-15 * scale) re = 0.0;
    if (std::abs(im) < 1e-15 * scale) im = 0.0;
  }
  return "(" + fmt12(re) + "," + fmt12(im) + ")";
}

std::string print_zw_impl(const ZwDiagram& d) {
  switch (d.kind()) {
    case ZwKind::ZSpider:
      return "Zw[" + std::to_string(d.inputs()) + "," + std::to_string(d.outputs()) + "]" +
             print_zw_param(d.param());
    case ZwKind::WDot:
      return "wdot" + print_zw_param(d.param());
    case ZwKind::Seq: {
      const ZwDiagram& b = d.second();
      const std::string rhs =
          b.kind() == ZwKind::Seq ? "(" + print_zw_impl(b) + ")" : print_zw_impl(b);
      return print_zw_impl(d.first()) + " ; " + rhs;
    }
    case ZwKind::Tensor: {
      const ZwDiagram& a = d.first();
      const ZwDiagram& b = d.second();
      const std::string lhs =
          a.kind() == ZwKind::Seq ? "(" + print_zw_impl(a) + ")" : print_zw_impl(a);
      const std::string rhs = b.kind() == ZwKind::Seq || b.kind() == ZwKind::Tensor
                                  ? "(" + print_zw_impl(b) + ")"
                                  : print_zw_impl(b);
      return lhs + " * " + rhs;
    }
    default:
      return zw_kind_name(d.kind());
  }
}

}  // namespace

Diagram parse_zx(const std::string& text, SourceSpan origin) {
  Parser p(text, origin);
  if (p.at_end()) p.fail("empty diagram", p.peek());
  Diagram d = p.parse_term();
  p.expect_end();
  return d;
}

PhaseExpr parse_phase(const std::string& text, SourceSpan origin) {
  Parser p(text, origin);
  PhaseExpr e = p.parse_phase_expr();
  p.expect_end();
  return e;
}

std::string print_zx(const Diagram& d) { return print_zx_impl(d); }

ZwDiagram parse_zw(const std::string& text, SourceSpan origin) {
  Parser p(text, origin);
  if (p.at_end()) p.fail("empty diagram", p.peek());
  ZwDiagram d = p.parse_zw_term();
  p.expect_end();
  return d;
}

std::string print_zw(const ZwDiagram& d) { return print_zw_impl(d); }

ParsedDocument parse_document(const std::string& text) {
  ParsedDocument doc;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::size_t col = body.find_first_not_of(" \t\r") + 1;
    std::istringstream words(body);
    std::string w;
    words >> w;
    if (w == "version") {
      if (!first) throw ParseError("version tag must come first", lineno, col);
      int v = 0;
      if (!(words >> v) || v != 1) throw ParseError("unsupported document version", lineno, col);
      doc.version = v;
      first = false;
      continue;
    }
    first = false;
    doc.diagrams.push_back(parse_zx(body, {lineno, 1}));
    doc.spans.push_back({lineno, col});
  }
  return doc;
}

std::string print_document(const ParsedDocument& doc) {
  std::string out = "version " + std::to_string(doc.version) + "\n";
  for (const auto& d : doc.diagrams) out += print_zx(d) + "\n";
  return out;
}

}  // namespace zxv
