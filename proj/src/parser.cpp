#include "gira/parser.hpp"

#include <cctype>

#include "gira/algebra.hpp"

namespace gira {

namespace {

enum class Tok {
  Arrow, Vee, Wedge, Star, Tilde, Bang, Quest,
  LParen, RParen, Eq, Amp, Implies, Ident, One, Zero, End
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  Tok tok = Tok::End;
  size_t tok_pos = 0;
  std::string ident;

  explicit Lexer(const std::string& s) : src(s) { next(); }

  [[noreturn]] void err(const std::string& msg, size_t at) {
    throw AlgebraError("SYNTAX-ERROR",
                       msg + " at byte " + std::to_string(at), {(int)at});
  }

  void next() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    tok_pos = pos;
    if (pos >= src.size()) { tok = Tok::End; return; }
    char c = src[pos];
    switch (c) {
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') { pos += 2; tok = Tok::Arrow; return; }
        err("expected '->'", pos);
      case '\\':
        if (pos + 1 < src.size() && src[pos + 1] == '/') { pos += 2; tok = Tok::Vee; return; }
        err("expected '\\/'", pos);
      case '/':
        if (pos + 1 < src.size() && src[pos + 1] == '\\') { pos += 2; tok = Tok::Wedge; return; }
        err("expected '/\\'", pos);
      case '=':
        if (pos + 1 < src.size() && src[pos + 1] == '>') { pos += 2; tok = Tok::Implies; return; }
        ++pos; tok = Tok::Eq; return;
      case '*': ++pos; tok = Tok::Star; return;
      case '~': ++pos; tok = Tok::Tilde; return;
      case '!': ++pos; tok = Tok::Bang; return;
      case '?': ++pos; tok = Tok::Quest; return;
      case '(': ++pos; tok = Tok::LParen; return;
      case ')': ++pos; tok = Tok::RParen; return;
      case '&': ++pos; tok = Tok::Amp; return;
      case '1': ++pos; tok = Tok::One; return;
      case '0': ++pos; tok = Tok::Zero; return;
      default:
        if (std::isalpha((unsigned char)c) || c == '_') {
          size_t start = pos;
          while (pos < src.size() &&
                 (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
            ++pos;
          ident = src.substr(start, pos - start);
          tok = Tok::Ident;
          return;
        }
        err(std::string("unexpected character '") + c + "'", pos);
    }
  }
};

struct Parser {
  Lexer lx;
  explicit Parser(const std::string& s) : lx(s) {}

  void expect(Tok t, const char* what) {
    if (lx.tok != t) lx.err(std::string("expected ") + what, lx.tok_pos);
    lx.next();
  }

  FormulaPtr atom() {
    switch (lx.tok) {
      case Tok::One: lx.next(); return mk::one();
      case Tok::Zero: lx.next(); return mk::zero();
      case Tok::Ident: {
        std::string id = lx.ident;
        lx.next();
        if (id == "T") return mk::top();
        if (id == "F") return mk::bot();
        return mk::var(id);
      }
      case Tok::LParen: {
        lx.next();
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        lx.err("expected an atom", lx.tok_pos);
    }
  }

  FormulaPtr un() {
    if (lx.tok == Tok::Tilde) { lx.next(); return mk::neg(un()); }
    if (lx.tok == Tok::Bang) { lx.next(); return mk::bang(un()); }
    if (lx.tok == Tok::Quest) { lx.next(); return mk::quest(un()); }
    return atom();
  }

  FormulaPtr mul() {
    FormulaPtr f = un();
    while (lx.tok == Tok::Star) {
      lx.next();
      f = mk::mult(f, un());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = mul();
    while (lx.tok == Tok::Wedge) {
      lx.next();
      f = mk::meet(f, mul());
    }
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (lx.tok == Tok::Vee) {
      lx.next();
      f = mk::join(f, conj());
    }
    return f;
  }

  FormulaPtr formula() {
    FormulaPtr f = disj();
    if (lx.tok == Tok::Arrow) {
      lx.next();
      f = mk::imp(f, formula());
    }
    return f;
  }

  Equation equation() {
    FormulaPtr l = formula();
    expect(Tok::Eq, "'='");
    FormulaPtr r = formula();
    return {l, r};
  }

  void end() {
    if (lx.tok != Tok::End) lx.err("trailing input", lx.tok_pos);
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.formula();
  p.end();
  return f;
}

Equation parse_equation(const std::string& text) {
  Parser p(text);
  Equation e = p.equation();
  p.end();
  return e;
}

Quasiequation parse_quasiequation(const std::string& text) {
  Parser p(text);
  Quasiequation q{{}, {nullptr, nullptr}};
  q.premises.push_back(p.equation());
  while (p.lx.tok == Tok::Amp) {
    p.lx.next();
    q.premises.push_back(p.equation());
  }
  p.expect(Tok::Implies, "'=>'");
  q.conclusion = p.equation();
  p.end();
  return q;
}

}  // namespace gira
