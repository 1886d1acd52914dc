#pragma once

// Fully annotated explicit-substitution syntax for the CwF calculus with
// Unit, Bool, Pi, Sigma and a two-code Tarski universe. Every constructor
// carries enough annotation that the source/target context of a
// substitution and the type of a term are computable syntax-directedly; the
// checker validates annotations and invokes conversion where rules demand
// equal types.

#include <memory>
#include <string>
#include <vector>

#include "scwf/error.hpp"

namespace scwf {

enum class Sort { Con, Sub, Ty, Tm };

inline const char* to_string(Sort s) {
  switch (s) {
    case Sort::Con: return "con";
    case Sort::Sub: return "sub";
    case Sort::Ty: return "ty";
    default: return "tm";
  }
}

struct ConNode;
struct SubNode;
struct TyNode;
struct TmNode;
using Con = std::shared_ptr<const ConNode>;
using Sub = std::shared_ptr<const SubNode>;
using Ty = std::shared_ptr<const TyNode>;
using Tm = std::shared_ptr<const TmNode>;

struct ConNode {
  enum Kind { Empty, Ext } kind;
  Con parent;  // Ext
  Ty ty;       // Ext
};

struct SubNode {
  enum Kind { Id, Comp, Eps, P, Pair } kind;
  Con con;   // Id, Eps, P
  Ty ty;     // P: the extension type; Pair: the target extension type
  Sub s1;    // Comp: outer sigma; Pair: the prefix substitution
  Sub s2;    // Comp: inner delta
  Tm tm;     // Pair
};

struct TyNode {
  enum Kind { SubT, Unit, Bool, Pi, Sigma, Univ, El } kind;
  Ty a;     // SubT subject, Pi/Sigma domain
  Ty b;     // Pi/Sigma codomain (over the extended context)
  Sub sub;  // SubT
  Tm tm;    // El
};

struct TmNode {
  enum Kind {
    SubTm, Q, TT, True, False, BoolRec, Lam, App, PairTm, Fst, Snd,
    BoolCode, UnitCode
  } kind;
  Tm t1;    // SubTm subject; BoolRec true-branch; Lam body; App fn;
            // PairTm fst; Fst/Snd subject
  Tm t2;    // BoolRec false-branch; App arg; PairTm snd
  Tm t3;    // BoolRec scrutinee
  Sub sub;  // SubTm
  Con con;  // Q
  Ty a;     // Q: the extension type; BoolRec: motive; Lam/App/PairTm/Fst/Snd: domain
  Ty b;     // Lam/App/PairTm/Fst/Snd: codomain over the extended context
};

// --- constructors -----------------------------------------------------------

inline Con mk_empty() {
  static Con e = std::make_shared<ConNode>(ConNode{ConNode::Empty, nullptr, nullptr});
  return e;
}
inline Con mk_ext(Con g, Ty a) {
  return std::make_shared<ConNode>(ConNode{ConNode::Ext, std::move(g), std::move(a)});
}

inline Sub mk_id(Con g) {
  return std::make_shared<SubNode>(SubNode{SubNode::Id, std::move(g), nullptr, nullptr, nullptr, nullptr});
}
inline Sub mk_comp(Sub outer, Sub inner) {
  return std::make_shared<SubNode>(SubNode{SubNode::Comp, nullptr, nullptr, std::move(outer), std::move(inner), nullptr});
}
inline Sub mk_eps(Con g) {
  return std::make_shared<SubNode>(SubNode{SubNode::Eps, std::move(g), nullptr, nullptr, nullptr, nullptr});
}
inline Sub mk_p(Con g, Ty a) {
  return std::make_shared<SubNode>(SubNode{SubNode::P, std::move(g), std::move(a), nullptr, nullptr, nullptr});
}
inline Sub mk_pair(Sub prefix, Ty a, Tm t) {
  return std::make_shared<SubNode>(SubNode{SubNode::Pair, nullptr, std::move(a), std::move(prefix), nullptr, std::move(t)});
}

inline Ty mk_subT(Ty a, Sub s) {
  return std::make_shared<TyNode>(TyNode{TyNode::SubT, std::move(a), nullptr, std::move(s), nullptr});
}
inline Ty mk_unit() {
  static Ty u = std::make_shared<TyNode>(TyNode{TyNode::Unit, nullptr, nullptr, nullptr, nullptr});
  return u;
}
inline Ty mk_bool() {
  static Ty b = std::make_shared<TyNode>(TyNode{TyNode::Bool, nullptr, nullptr, nullptr, nullptr});
  return b;
}
inline Ty mk_pi(Ty a, Ty b) {
  return std::make_shared<TyNode>(TyNode{TyNode::Pi, std::move(a), std::move(b), nullptr, nullptr});
}
inline Ty mk_sigma(Ty a, Ty b) {
  return std::make_shared<TyNode>(TyNode{TyNode::Sigma, std::move(a), std::move(b), nullptr, nullptr});
}
inline Ty mk_univ() {
  static Ty u = std::make_shared<TyNode>(TyNode{TyNode::Univ, nullptr, nullptr, nullptr, nullptr});
  return u;
}
inline Ty mk_el(Tm t) {
  return std::make_shared<TyNode>(TyNode{TyNode::El, nullptr, nullptr, nullptr, std::move(t)});
}

inline Tm mk_tm(TmNode n) { return std::make_shared<TmNode>(std::move(n)); }
inline Tm mk_subt(Tm t, Sub s) {
  TmNode n{};
  n.kind = TmNode::SubTm;
  n.t1 = std::move(t);
  n.sub = std::move(s);
  return mk_tm(std::move(n));
}
inline Tm mk_q(Con g, Ty a) {
  TmNode n{};
  n.kind = TmNode::Q;
  n.con = std::move(g);
  n.a = std::move(a);
  return mk_tm(std::move(n));
}
inline Tm mk_leaf(TmNode::Kind k) {
  TmNode n{};
  n.kind = k;
  return mk_tm(std::move(n));
}
inline Tm mk_tt() { return mk_leaf(TmNode::TT); }
inline Tm mk_true() { return mk_leaf(TmNode::True); }
inline Tm mk_false() { return mk_leaf(TmNode::False); }
inline Tm mk_bool_code() { return mk_leaf(TmNode::BoolCode); }
inline Tm mk_unit_code() { return mk_leaf(TmNode::UnitCode); }
inline Tm mk_boolrec(Ty motive, Tm on_true, Tm on_false, Tm scrutinee) {
  TmNode n{};
  n.kind = TmNode::BoolRec;
  n.a = std::move(motive);
  n.t1 = std::move(on_true);
  n.t2 = std::move(on_false);
  n.t3 = std::move(scrutinee);
  return mk_tm(std::move(n));
}
inline Tm mk_lam(Ty a, Ty b, Tm body) {
  TmNode n{};
  n.kind = TmNode::Lam;
  n.a = std::move(a);
  n.b = std::move(b);
  n.t1 = std::move(body);
  return mk_tm(std::move(n));
}
inline Tm mk_app(Ty a, Ty b, Tm fn, Tm arg) {
  TmNode n{};
  n.kind = TmNode::App;
  n.a = std::move(a);
  n.b = std::move(b);
  n.t1 = std::move(fn);
  n.t2 = std::move(arg);
  return mk_tm(std::move(n));
}
inline Tm mk_mkpair(Ty a, Ty b, Tm fst, Tm snd) {
  TmNode n{};
  n.kind = TmNode::PairTm;
  n.a = std::move(a);
  n.b = std::move(b);
  n.t1 = std::move(fst);
  n.t2 = std::move(snd);
  return mk_tm(std::move(n));
}
inline Tm mk_fst(Ty a, Ty b, Tm pr) {
  TmNode n{};
  n.kind = TmNode::Fst;
  n.a = std::move(a);
  n.b = std::move(b);
  n.t1 = std::move(pr);
  return mk_tm(std::move(n));
}
inline Tm mk_snd(Ty a, Ty b, Tm pr) {
  TmNode n{};
  n.kind = TmNode::Snd;
  n.a = std::move(a);
  n.b = std::move(b);
  n.t1 = std::move(pr);
  return mk_tm(std::move(n));
}

// --- structural (syntactic) equality ---------------------------------------

inline bool syn_equal(const Con& x, const Con& y);
inline bool syn_equal(const Sub& x, const Sub& y);
inline bool syn_equal(const Ty& x, const Ty& y);
inline bool syn_equal(const Tm& x, const Tm& y);

inline bool syn_equal(const Con& x, const Con& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  if (x->kind == ConNode::Empty) return true;
  return syn_equal(x->parent, y->parent) && syn_equal(x->ty, y->ty);
}
inline bool syn_equal(const Sub& x, const Sub& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case SubNode::Id:
    case SubNode::Eps: return syn_equal(x->con, y->con);
    case SubNode::Comp: return syn_equal(x->s1, y->s1) && syn_equal(x->s2, y->s2);
    case SubNode::P: return syn_equal(x->con, y->con) && syn_equal(x->ty, y->ty);
    default:
      return syn_equal(x->s1, y->s1) && syn_equal(x->ty, y->ty) && syn_equal(x->tm, y->tm);
  }
}
inline bool syn_equal(const Ty& x, const Ty& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TyNode::SubT: return syn_equal(x->a, y->a) && syn_equal(x->sub, y->sub);
    case TyNode::Pi:
    case TyNode::Sigma: return syn_equal(x->a, y->a) && syn_equal(x->b, y->b);
    case TyNode::El: return syn_equal(x->tm, y->tm);
    default: return true;
  }
}
inline bool syn_equal(const Tm& x, const Tm& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TmNode::SubTm: return syn_equal(x->t1, y->t1) && syn_equal(x->sub, y->sub);
    case TmNode::Q: return syn_equal(x->con, y->con) && syn_equal(x->a, y->a);
    case TmNode::BoolRec:
      return syn_equal(x->a, y->a) && syn_equal(x->t1, y->t1) &&
             syn_equal(x->t2, y->t2) && syn_equal(x->t3, y->t3);
    case TmNode::Lam:
      return syn_equal(x->a, y->a) && syn_equal(x->b, y->b) && syn_equal(x->t1, y->t1);
    case TmNode::App:
    case TmNode::PairTm:
      return syn_equal(x->a, y->a) && syn_equal(x->b, y->b) &&
             syn_equal(x->t1, y->t1) && syn_equal(x->t2, y->t2);
    case TmNode::Fst:
    case TmNode::Snd:
      return syn_equal(x->a, y->a) && syn_equal(x->b, y->b) && syn_equal(x->t1, y->t1);
    default: return true;
  }
}

// --- source / target contexts (structural, no validity assumed) ------------

inline Con sub_src(const Sub& s);
inline Con sub_tgt(const Sub& s);

inline Con sub_src(const Sub& s) {
  switch (s->kind) {
    case SubNode::Id:
    case SubNode::Eps: return s->con;
    case SubNode::Comp: return sub_src(s->s2);
    case SubNode::P: return mk_ext(s->con, s->ty);
    default: return sub_src(s->s1);  // Pair
  }
}
inline Con sub_tgt(const Sub& s) {
  switch (s->kind) {
    case SubNode::Id: return s->con;
    case SubNode::Eps: return mk_empty();
    case SubNode::Comp: return sub_tgt(s->s1);
    case SubNode::P: return s->con;
    default: return mk_ext(sub_tgt(s->s1), s->ty);  // Pair
  }
}

inline int con_len(const Con& g) {
  int n = 0;
  for (Con c = g; c->kind == ConNode::Ext; c = c->parent) ++n;
  return n;
}

// entry i counted from the outside in: entry 0 is the innermost (last) one
inline std::pair<Con, Ty> con_entry(const Con& g, int from_end) {
  Con c = g;
  for (int i = 0; i < from_end; ++i) {
    require(c->kind == ConNode::Ext, "con_entry: index out of range");
    c = c->parent;
  }
  require(c->kind == ConNode::Ext, "con_entry: index out of range");
  return {c->parent, c->ty};
}

// --- printing (surface syntax) ----------------------------------------------

inline void print_con(std::string& out, const Con& g);
inline void print_sub(std::string& out, const Sub& s);
inline void print_ty(std::string& out, const Ty& t);
inline void print_tm(std::string& out, const Tm& t);

inline void print_con(std::string& out, const Con& g) {
  if (g->kind == ConNode::Empty) {
    out += "empty";
    return;
  }
  out += "(ext ";
  print_con(out, g->parent);
  out += ' ';
  print_ty(out, g->ty);
  out += ')';
}
inline void print_sub(std::string& out, const Sub& s) {
  switch (s->kind) {
    case SubNode::Id:
      out += "(id ";
      print_con(out, s->con);
      out += ')';
      break;
    case SubNode::Comp:
      out += "(comp ";
      print_sub(out, s->s1);
      out += ' ';
      print_sub(out, s->s2);
      out += ')';
      break;
    case SubNode::Eps:
      out += "(eps ";
      print_con(out, s->con);
      out += ')';
      break;
    case SubNode::P:
      out += "(p ";
      print_con(out, s->con);
      out += ' ';
      print_ty(out, s->ty);
      out += ')';
      break;
    default:
      out += "(pair ";
      print_sub(out, s->s1);
      out += ' ';
      print_ty(out, s->ty);
      out += ' ';
      print_tm(out, s->tm);
      out += ')';
  }
}
inline void print_ty(std::string& out, const Ty& t) {
  switch (t->kind) {
    case TyNode::SubT:
      out += "(subT ";
      print_ty(out, t->a);
      out += ' ';
      print_sub(out, t->sub);
      out += ')';
      break;
    case TyNode::Unit: out += "unit"; break;
    case TyNode::Bool: out += "bool"; break;
    case TyNode::Univ: out += "u"; break;
    case TyNode::Pi:
    case TyNode::Sigma:
      out += t->kind == TyNode::Pi ? "(pi " : "(sigma ";
      print_ty(out, t->a);
      out += ' ';
      print_ty(out, t->b);
      out += ')';
      break;
    default:
      out += "(el ";
      print_tm(out, t->tm);
      out += ')';
  }
}
inline void print_tm(std::string& out, const Tm& t) {
  switch (t->kind) {
    case TmNode::SubTm:
      out += "(subt ";
      print_tm(out, t->t1);
      out += ' ';
      print_sub(out, t->sub);
      out += ')';
      break;
    case TmNode::Q:
      out += "(q ";
      print_con(out, t->con);
      out += ' ';
      print_ty(out, t->a);
      out += ')';
      break;
    case TmNode::TT: out += "tt"; break;
    case TmNode::True: out += "true"; break;
    case TmNode::False: out += "false"; break;
    case TmNode::BoolCode: out += "bool-code"; break;
    case TmNode::UnitCode: out += "unit-code"; break;
    case TmNode::BoolRec:
      out += "(boolrec ";
      print_ty(out, t->a);
      out += ' ';
      print_tm(out, t->t1);
      out += ' ';
      print_tm(out, t->t2);
      out += ' ';
      print_tm(out, t->t3);
      out += ')';
      break;
    case TmNode::Lam:
      out += "(lam ";
      print_ty(out, t->a);
      out += ' ';
      print_ty(out, t->b);
      out += ' ';
      print_tm(out, t->t1);
      out += ')';
      break;
    case TmNode::App:
    case TmNode::PairTm:
      out += t->kind == TmNode::App ? "(app " : "(mkpair ";
      print_ty(out, t->a);
      out += ' ';
      print_ty(out, t->b);
      out += ' ';
      print_tm(out, t->t1);
      out += ' ';
      print_tm(out, t->t2);
      out += ')';
      break;
    default:
      out += t->kind == TmNode::Fst ? "(fst " : "(snd ";
      print_ty(out, t->a);
      out += ' ';
      print_ty(out, t->b);
      out += ' ';
      print_tm(out, t->t1);
      out += ')';
  }
}

inline std::string print_con(const Con& g) { std::string s; print_con(s, g); return s; }
inline std::string print_sub(const Sub& x) { std::string s; print_sub(s, x); return s; }
inline std::string print_ty(const Ty& x) { std::string s; print_ty(s, x); return s; }
inline std::string print_tm(const Tm& x) { std::string s; print_tm(s, x); return s; }

/// An expression of any sort, for the CLI and the rewrite engine.
struct AnyExpr {
  Sort sort = Sort::Con;
  Con c;
  Sub s;
  Ty ty;
  Tm tm;

  static AnyExpr of(Con x) { AnyExpr e; e.sort = Sort::Con; e.c = std::move(x); return e; }
  static AnyExpr of(Sub x) { AnyExpr e; e.sort = Sort::Sub; e.s = std::move(x); return e; }
  static AnyExpr of(Ty x) { AnyExpr e; e.sort = Sort::Ty; e.ty = std::move(x); return e; }
  static AnyExpr of(Tm x) { AnyExpr e; e.sort = Sort::Tm; e.tm = std::move(x); return e; }
};

inline std::string print_any(const AnyExpr& e) {
  switch (e.sort) {
    case Sort::Con: return print_con(e.c);
    case Sort::Sub: return print_sub(e.s);
    case Sort::Ty: return print_ty(e.ty);
    default: return print_tm(e.tm);
  }
}

inline bool syn_equal(const AnyExpr& a, const AnyExpr& b) {
  if (a.sort != b.sort) return false;
  switch (a.sort) {
    case Sort::Con: return syn_equal(a.c, b.c);
    case Sort::Sub: return syn_equal(a.s, b.s);
    case Sort::Ty: return syn_equal(a.ty, b.ty);
    default: return syn_equal(a.tm, b.tm);
  }
}

}  // namespace scwf
