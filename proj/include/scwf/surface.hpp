#pragma once

// Parser for the parenthesized prefix surface syntax. One definition or
// bare expression per top-level form; defs bind names for later forms.
//
//   contexts       empty | (ext G A)
//   substitutions  (id G) | (comp s d) | (eps G) | (p G A) | (pair s A t)
//   types          (subT A s) | unit | bool | (pi A B) | (sigma A B) | u | (el t)
//   terms          (subt t s) | (q G A) | tt | true | false
//                  | (boolrec P t f b) | (lam A B t) | (app A B t u)
//                  | (mkpair A B t u) | (fst A B t) | (snd A B t)
//                  | unit-code | bool-code
//
// The parser is whitespace-insensitive and reports line/column on errors.
// Note the pair form carries the extension type of its target context; the
// fully annotated calculus needs it to compute targets without inference.

#include <map>
#include <string>
#include <vector>

#include "scwf/error.hpp"
#include "scwf/syntax.hpp"

namespace scwf {

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

namespace surface_detail {

struct Token {
  std::string text;  // "(", ")", or an atom
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ';' || c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), line, col});
      advance(c);
      ++i;
      continue;
    }
    if (std::isspace((unsigned char)c)) {
      advance(c);
      ++i;
      continue;
    }
    int l0 = line, c0 = col;
    std::string atom;
    while (i < text.size() && !std::isspace((unsigned char)text[i]) && text[i] != '(' &&
           text[i] != ')' && text[i] != ';' && text[i] != '#') {
      atom += text[i];
      advance(text[i]);
      ++i;
    }
    out.push_back({atom, l0, c0});
  }
  return out;
}

[[noreturn]] inline void fail(const Token& t, const std::string& msg) {
  throw parse_error("parse error at " + std::to_string(t.line) + ":" +
                    std::to_string(t.col) + ": " + msg);
}

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  const std::map<std::string, AnyExpr>* defs = nullptr;

  const Token& peek() {
    if (pos >= toks.size()) {
      static Token eof{"<end of input>", 0, 0};
      if (!toks.empty()) {
        eof.line = toks.back().line;
        eof.col = toks.back().col + (int)toks.back().text.size();
      }
      return eof;
    }
    return toks[pos];
  }
  Token next() {
    const Token& t = peek();
    if (pos >= toks.size()) fail(t, "unexpected end of input");
    ++pos;
    return t;
  }
  void expect(const std::string& s) {
    Token t = next();
    if (t.text != s) fail(t, "expected '" + s + "', found '" + t.text + "'");
  }

  AnyExpr atom(const Token& t) {
    if (t.text == "empty") return AnyExpr::of(mk_empty());
    if (t.text == "unit") return AnyExpr::of(mk_unit());
    if (t.text == "bool") return AnyExpr::of(mk_bool());
    if (t.text == "u") return AnyExpr::of(mk_univ());
    if (t.text == "tt") return AnyExpr::of(mk_tt());
    if (t.text == "true") return AnyExpr::of(mk_true());
    if (t.text == "false") return AnyExpr::of(mk_false());
    if (t.text == "unit-code") return AnyExpr::of(mk_unit_code());
    if (t.text == "bool-code") return AnyExpr::of(mk_bool_code());
    if (defs) {
      auto it = defs->find(t.text);
      if (it != defs->end()) return it->second;
    }
    fail(t, "unknown name '" + t.text + "'");
  }

  Con con() { return want(expr(), Sort::Con, "context").c; }
  Sub sub() { return want(expr(), Sort::Sub, "substitution").s; }
  Ty ty() { return want(expr(), Sort::Ty, "type").ty; }
  Tm tm() { return want(expr(), Sort::Tm, "term").tm; }

  AnyExpr want(AnyExpr e, Sort s, const std::string& what) {
    if (e.sort != s) {
      const Token& t = peek();
      fail(t, "expected a " + what);
    }
    return e;
  }

  AnyExpr expr() {
    Token t = next();
    if (t.text != "(") return atom(t);
    Token head = next();
    AnyExpr out;
    const std::string& h = head.text;
    if (h == "ext") {
      Con g = con();
      Ty a = ty();
      out = AnyExpr::of(mk_ext(g, a));
    } else if (h == "id") {
      out = AnyExpr::of(mk_id(con()));
    } else if (h == "comp") {
      Sub s1 = sub();
      Sub s2 = sub();
      out = AnyExpr::of(mk_comp(s1, s2));
    } else if (h == "eps") {
      out = AnyExpr::of(mk_eps(con()));
    } else if (h == "p") {
      Con g = con();
      Ty a = ty();
      out = AnyExpr::of(mk_p(g, a));
    } else if (h == "pair") {
      Sub s1 = sub();
      Ty a = ty();
      Tm t1 = tm();
      out = AnyExpr::of(mk_pair(s1, a, t1));
    } else if (h == "subT") {
      Ty a = ty();
      Sub s1 = sub();
      out = AnyExpr::of(mk_subT(a, s1));
    } else if (h == "pi" || h == "sigma") {
      Ty a = ty();
      Ty b = ty();
      out = AnyExpr::of(h == "pi" ? mk_pi(a, b) : mk_sigma(a, b));
    } else if (h == "el") {
      out = AnyExpr::of(mk_el(tm()));
    } else if (h == "subt") {
      Tm t1 = tm();
      Sub s1 = sub();
      out = AnyExpr::of(mk_subt(t1, s1));
    } else if (h == "q") {
      Con g = con();
      Ty a = ty();
      out = AnyExpr::of(mk_q(g, a));
    } else if (h == "boolrec") {
      Ty motive = ty();
      Tm a = tm();
      Tm b = tm();
      Tm c = tm();
      out = AnyExpr::of(mk_boolrec(motive, a, b, c));
    } else if (h == "lam") {
      Ty a = ty();
      Ty b = ty();
      Tm body = tm();
      out = AnyExpr::of(mk_lam(a, b, body));
    } else if (h == "app" || h == "mkpair") {
      Ty a = ty();
      Ty b = ty();
      Tm x = tm();
      Tm y = tm();
      out = AnyExpr::of(h == "app" ? mk_app(a, b, x, y) : mk_mkpair(a, b, x, y));
    } else if (h == "fst" || h == "snd") {
      Ty a = ty();
      Ty b = ty();
      Tm x = tm();
      out = AnyExpr::of(h == "fst" ? mk_fst(a, b, x) : mk_snd(a, b, x));
    } else {
      fail(head, "unknown form '" + h + "'");
    }
    expect(")");
    return out;
  }
};

}  // namespace surface_detail

/// Parses a single expression (no defs in scope).
inline AnyExpr parse_surface(const std::string& text) {
  surface_detail::Parser p;
  p.toks = surface_detail::lex(text);
  AnyExpr e = p.expr();
  if (p.pos != p.toks.size()) surface_detail::fail(p.peek(), "trailing input");
  return e;
}

struct CwfFile {
  std::vector<std::pair<std::string, AnyExpr>> defs;  // in file order
  std::vector<AnyExpr> exprs;                         // bare top-level forms

  /// The subject of a file: its last bare expression, or else its last def.
  const AnyExpr& subject() const {
    if (!exprs.empty()) return exprs.back();
    require(!defs.empty(), "empty input file");
    return defs.back().second;
  }
};

/// Parses a whole file: any number of (def name expr) forms and bare
/// expressions; defs are visible to all later forms.
inline CwfFile parse_cwf_file(const std::string& text) {
  surface_detail::Parser p;
  p.toks = surface_detail::lex(text);
  std::map<std::string, AnyExpr> defs;
  p.defs = &defs;
  CwfFile out;
  while (p.pos < p.toks.size()) {
    // lookahead for (def ...)
    if (p.toks[p.pos].text == "(" && p.pos + 1 < p.toks.size() &&
        p.toks[p.pos + 1].text == "def") {
      p.pos += 2;
      surface_detail::Token name = p.next();
      if (name.text == "(" || name.text == ")")
        surface_detail::fail(name, "expected a definition name");
      AnyExpr e = p.expr();
      p.expect(")");
      if (defs.count(name.text))
        surface_detail::fail(name, "duplicate definition '" + name.text + "'");
      defs.emplace(name.text, e);
      out.defs.push_back({name.text, e});
    } else {
      out.exprs.push_back(p.expr());
    }
  }
  return out;
}

}  // namespace scwf
