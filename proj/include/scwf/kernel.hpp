#pragma once

// Normalization by evaluation and the well-formedness checker.
//
// Expressions evaluate into a semantic domain with environments, closures,
// and neutral spines (de Bruijn levels). Readback is type-directed and
// produces eta-long beta-normal substitution-free forms: eta for Pi, Sigma
// and Unit, no eta for Bool. Conversion is structural equality of normal
// forms; the checker calls it wherever a rule demands equal types.

#include <memory>
#include <string>
#include <vector>

#include "scwf/syntax.hpp"

namespace scwf {

// --- semantic domain --------------------------------------------------------

struct DVal;
struct DTy;
struct DNe;
using Val = std::shared_ptr<const DVal>;
using Dty = std::shared_ptr<const DTy>;
using Ne = std::shared_ptr<const DNe>;
using Env = std::vector<Val>;

struct Closure {
  Tm body;  // term over (captured context, extended by one)
  Env env;
};
struct TyClosure {
  Ty body;  // type over (captured context, extended by one)
  Env env;
};

struct DTy {
  enum Kind { Unit, Bool, Univ, El, Pi, Sigma } kind;
  Ne ne;          // El
  Dty dom;        // Pi, Sigma
  TyClosure cod;  // Pi, Sigma
};

struct DVal {
  enum Kind { Star, True, False, CodeUnit, CodeBool, Lam, Pair, Neut } kind;
  Closure clo;  // Lam
  Val v1, v2;   // Pair
  Ne ne;        // Neut
};

struct DNe {
  enum Kind { Var, App, Fst, Snd, BoolRec } kind;
  int level = 0;      // Var
  Ne head;            // App, Fst, Snd, BoolRec
  Val arg;            // App
  TyClosure motive;   // BoolRec
  Val on_true, on_false;
};

inline Dty mk_dty(DTy n) { return std::make_shared<DTy>(std::move(n)); }
inline Val mk_dval(DVal n) { return std::make_shared<DVal>(std::move(n)); }
inline Ne mk_dne(DNe n) { return std::make_shared<DNe>(std::move(n)); }

inline Val neutral(Ne ne) {
  DVal v{};
  v.kind = DVal::Neut;
  v.ne = std::move(ne);
  return mk_dval(std::move(v));
}
inline Val var_val(int level) {
  DNe n{};
  n.kind = DNe::Var;
  n.level = level;
  return neutral(mk_dne(std::move(n)));
}

// --- evaluation --------------------------------------------------------------

inline Env eval_sub(const Sub& s, const Env& env);
inline Dty eval_ty(const Ty& t, const Env& env);
inline Val eval_tm(const Tm& t, const Env& env);

inline Dty apply_ty(const TyClosure& c, const Val& v) {
  Env e = c.env;
  e.push_back(v);
  return eval_ty(c.body, e);
}
inline Val apply_clo(const Closure& c, const Val& v) {
  Env e = c.env;
  e.push_back(v);
  return eval_tm(c.body, e);
}

inline Val do_apply(const Val& fn, const Val& arg) {
  if (fn->kind == DVal::Lam) return apply_clo(fn->clo, arg);
  require(fn->kind == DVal::Neut, "eval: applying a non-function value");
  DNe n{};
  n.kind = DNe::App;
  n.head = fn->ne;
  n.arg = arg;
  return neutral(mk_dne(std::move(n)));
}
inline Val do_fst(const Val& v) {
  if (v->kind == DVal::Pair) return v->v1;
  require(v->kind == DVal::Neut, "eval: projecting a non-pair value");
  DNe n{};
  n.kind = DNe::Fst;
  n.head = v->ne;
  return neutral(mk_dne(std::move(n)));
}
inline Val do_snd(const Val& v) {
  if (v->kind == DVal::Pair) return v->v2;
  require(v->kind == DVal::Neut, "eval: projecting a non-pair value");
  DNe n{};
  n.kind = DNe::Snd;
  n.head = v->ne;
  return neutral(mk_dne(std::move(n)));
}
inline Val do_boolrec(const TyClosure& motive, const Val& on_true, const Val& on_false,
                      const Val& scrutinee) {
  if (scrutinee->kind == DVal::True) return on_true;
  if (scrutinee->kind == DVal::False) return on_false;
  require(scrutinee->kind == DVal::Neut, "eval: boolrec on a non-boolean value");
  DNe n{};
  n.kind = DNe::BoolRec;
  n.head = scrutinee->ne;
  n.motive = motive;
  n.on_true = on_true;
  n.on_false = on_false;
  return neutral(mk_dne(std::move(n)));
}

inline Env eval_sub(const Sub& s, const Env& env) {
  switch (s->kind) {
    case SubNode::Id: return env;
    case SubNode::Eps: return {};
    case SubNode::Comp: return eval_sub(s->s1, eval_sub(s->s2, env));
    case SubNode::P: {
      Env e = env;
      require(!e.empty(), "eval: p on an empty environment");
      e.pop_back();
      return e;
    }
    default: {  // Pair
      Env e = eval_sub(s->s1, env);
      e.push_back(eval_tm(s->tm, env));
      return e;
    }
  }
}

inline Dty eval_ty(const Ty& t, const Env& env) {
  switch (t->kind) {
    case TyNode::SubT: return eval_ty(t->a, eval_sub(t->sub, env));
    case TyNode::Unit: {
      DTy d{};
      d.kind = DTy::Unit;
      return mk_dty(std::move(d));
    }
    case TyNode::Bool: {
      DTy d{};
      d.kind = DTy::Bool;
      return mk_dty(std::move(d));
    }
    case TyNode::Univ: {
      DTy d{};
      d.kind = DTy::Univ;
      return mk_dty(std::move(d));
    }
    case TyNode::Pi:
    case TyNode::Sigma: {
      DTy d{};
      d.kind = t->kind == TyNode::Pi ? DTy::Pi : DTy::Sigma;
      d.dom = eval_ty(t->a, env);
      d.cod = TyClosure{t->b, env};
      return mk_dty(std::move(d));
    }
    default: {  // El: decodes literally on codes, stays neutral otherwise
      Val code = eval_tm(t->tm, env);
      if (code->kind == DVal::CodeUnit) {
        DTy d{};
        d.kind = DTy::Unit;
        return mk_dty(std::move(d));
      }
      if (code->kind == DVal::CodeBool) {
        DTy d{};
        d.kind = DTy::Bool;
        return mk_dty(std::move(d));
      }
      require(code->kind == DVal::Neut, "eval: el of a non-code value");
      DTy d{};
      d.kind = DTy::El;
      d.ne = code->ne;
      return mk_dty(std::move(d));
    }
  }
}

inline Val eval_tm(const Tm& t, const Env& env) {
  switch (t->kind) {
    case TmNode::SubTm: return eval_tm(t->t1, eval_sub(t->sub, env));
    case TmNode::Q:
      require(!env.empty(), "eval: q on an empty environment");
      return env.back();
    case TmNode::TT: {
      DVal v{};
      v.kind = DVal::Star;
      return mk_dval(std::move(v));
    }
    case TmNode::True: {
      DVal v{};
      v.kind = DVal::True;
      return mk_dval(std::move(v));
    }
    case TmNode::False: {
      DVal v{};
      v.kind = DVal::False;
      return mk_dval(std::move(v));
    }
    case TmNode::BoolCode: {
      DVal v{};
      v.kind = DVal::CodeBool;
      return mk_dval(std::move(v));
    }
    case TmNode::UnitCode: {
      DVal v{};
      v.kind = DVal::CodeUnit;
      return mk_dval(std::move(v));
    }
    case TmNode::BoolRec:
      return do_boolrec(TyClosure{t->a, env}, eval_tm(t->t1, env), eval_tm(t->t2, env),
                        eval_tm(t->t3, env));
    case TmNode::Lam: {
      DVal v{};
      v.kind = DVal::Lam;
      v.clo = Closure{t->t1, env};
      return mk_dval(std::move(v));
    }
    case TmNode::App: return do_apply(eval_tm(t->t1, env), eval_tm(t->t2, env));
    case TmNode::PairTm: {
      DVal v{};
      v.kind = DVal::Pair;
      v.v1 = eval_tm(t->t1, env);
      v.v2 = eval_tm(t->t2, env);
      return mk_dval(std::move(v));
    }
    case TmNode::Fst: return do_fst(eval_tm(t->t1, env));
    default: return do_snd(eval_tm(t->t1, env));  // Snd
  }
}

// --- normal forms -------------------------------------------------------------

struct NfTyNode;
struct NfTmNode;
struct NfNeNode;
using NfTy = std::shared_ptr<const NfTyNode>;
using NfTm = std::shared_ptr<const NfTmNode>;
using NfNe = std::shared_ptr<const NfNeNode>;

struct NfTyNode {
  enum Kind { Unit, Bool, Univ, El, Pi, Sigma } kind;
  NfNe ne;      // El
  NfTy a, b;    // Pi, Sigma (b over the extended context)
};
struct NfTmNode {
  enum Kind { TT, True, False, CodeUnit, CodeBool, Lam, Pair, Ne } kind;
  NfTy a, b;    // Lam/Pair annotations: domain and codomain-over-extension
  NfTm t1, t2;  // Lam body (t1); Pair components
  NfNe ne;
};
struct NfNeNode {
  enum Kind { Var, App, Fst, Snd, BoolRec } kind;
  int index = 0;    // Var: de Bruijn index
  NfNe head;
  NfTy a, b;        // App/Fst/Snd: the head's Pi/Sigma domain + codomain
  NfTm arg;         // App
  NfTy motive;      // BoolRec (over context extended by Bool)
  NfTm on_true, on_false;
};

inline NfTy mk_nfty(NfTyNode n) { return std::make_shared<NfTyNode>(std::move(n)); }
inline NfTm mk_nftm(NfTmNode n) { return std::make_shared<NfTmNode>(std::move(n)); }
inline NfNe mk_nfne(NfNeNode n) { return std::make_shared<NfNeNode>(std::move(n)); }

inline bool nf_equal(const NfTy& x, const NfTy& y);
inline bool nf_equal(const NfTm& x, const NfTm& y);
inline bool nf_equal(const NfNe& x, const NfNe& y);

inline bool nf_equal(const NfTy& x, const NfTy& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case NfTyNode::El: return nf_equal(x->ne, y->ne);
    case NfTyNode::Pi:
    case NfTyNode::Sigma: return nf_equal(x->a, y->a) && nf_equal(x->b, y->b);
    default: return true;
  }
}
inline bool nf_equal(const NfTm& x, const NfTm& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case NfTmNode::Lam:
      return nf_equal(x->a, y->a) && nf_equal(x->b, y->b) && nf_equal(x->t1, y->t1);
    case NfTmNode::Pair:
      return nf_equal(x->a, y->a) && nf_equal(x->b, y->b) && nf_equal(x->t1, y->t1) &&
             nf_equal(x->t2, y->t2);
    case NfTmNode::Ne: return nf_equal(x->ne, y->ne);
    default: return true;
  }
}
inline bool nf_equal(const NfNe& x, const NfNe& y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case NfNeNode::Var: return x->index == y->index;
    case NfNeNode::App:
      return nf_equal(x->head, y->head) && nf_equal(x->arg, y->arg);
    case NfNeNode::Fst:
    case NfNeNode::Snd: return nf_equal(x->head, y->head);
    default:
      return nf_equal(x->head, y->head) && nf_equal(x->motive, y->motive) &&
             nf_equal(x->on_true, y->on_true) && nf_equal(x->on_false, y->on_false);
  }
}

// --- readback -----------------------------------------------------------------

/// Types of the free variables, by de Bruijn level.
struct QCtx {
  std::vector<Dty> var_tys;
  int size() const { return (int)var_tys.size(); }
  QCtx extend(const Dty& d) const {
    QCtx q = *this;
    q.var_tys.push_back(d);
    return q;
  }
};

inline NfTy quote_ty(const QCtx& ctx, const Dty& t);
inline NfTm quote_tm(const QCtx& ctx, const Dty& ty, const Val& v);
inline std::pair<NfNe, Dty> quote_ne(const QCtx& ctx, const Ne& ne);

inline NfTy quote_ty(const QCtx& ctx, const Dty& t) {
  switch (t->kind) {
    case DTy::Unit: return mk_nfty({NfTyNode::Unit, nullptr, nullptr, nullptr});
    case DTy::Bool: return mk_nfty({NfTyNode::Bool, nullptr, nullptr, nullptr});
    case DTy::Univ: return mk_nfty({NfTyNode::Univ, nullptr, nullptr, nullptr});
    case DTy::El: return mk_nfty({NfTyNode::El, quote_ne(ctx, t->ne).first, nullptr, nullptr});
    default: {
      Val fresh = var_val(ctx.size());
      NfTy a = quote_ty(ctx, t->dom);
      NfTy b = quote_ty(ctx.extend(t->dom), apply_ty(t->cod, fresh));
      return mk_nfty({t->kind == DTy::Pi ? NfTyNode::Pi : NfTyNode::Sigma, nullptr, a, b});
    }
  }
}

inline NfTm quote_tm(const QCtx& ctx, const Dty& ty, const Val& v) {
  switch (ty->kind) {
    case DTy::Unit: {
      NfTmNode n{};
      n.kind = NfTmNode::TT;  // eta for Unit
      return mk_nftm(std::move(n));
    }
    case DTy::Bool: {
      NfTmNode n{};
      if (v->kind == DVal::True) n.kind = NfTmNode::True;
      else if (v->kind == DVal::False) n.kind = NfTmNode::False;
      else {
        require(v->kind == DVal::Neut, "readback: stuck boolean");
        n.kind = NfTmNode::Ne;
        n.ne = quote_ne(ctx, v->ne).first;
      }
      return mk_nftm(std::move(n));
    }
    case DTy::Univ: {
      NfTmNode n{};
      if (v->kind == DVal::CodeUnit) n.kind = NfTmNode::CodeUnit;
      else if (v->kind == DVal::CodeBool) n.kind = NfTmNode::CodeBool;
      else {
        require(v->kind == DVal::Neut, "readback: stuck code");
        n.kind = NfTmNode::Ne;
        n.ne = quote_ne(ctx, v->ne).first;
      }
      return mk_nftm(std::move(n));
    }
    case DTy::El: {
      require(v->kind == DVal::Neut, "readback: el values must be neutral");
      NfTmNode n{};
      n.kind = NfTmNode::Ne;
      n.ne = quote_ne(ctx, v->ne).first;
      return mk_nftm(std::move(n));
    }
    case DTy::Pi: {
      Val fresh = var_val(ctx.size());
      QCtx inner = ctx.extend(ty->dom);
      NfTmNode n{};
      n.kind = NfTmNode::Lam;  // eta-long
      n.a = quote_ty(ctx, ty->dom);
      n.b = quote_ty(inner, apply_ty(ty->cod, fresh));
      n.t1 = quote_tm(inner, apply_ty(ty->cod, fresh), do_apply(v, fresh));
      return mk_nftm(std::move(n));
    }
    default: {  // Sigma
      Val f = do_fst(v);
      Val fresh = var_val(ctx.size());
      NfTmNode n{};
      n.kind = NfTmNode::Pair;  // eta-long
      n.a = quote_ty(ctx, ty->dom);
      n.b = quote_ty(ctx.extend(ty->dom), apply_ty(ty->cod, fresh));
      n.t1 = quote_tm(ctx, ty->dom, f);
      n.t2 = quote_tm(ctx, apply_ty(ty->cod, f), do_snd(v));
      return mk_nftm(std::move(n));
    }
  }
}

inline std::pair<NfNe, Dty> quote_ne(const QCtx& ctx, const Ne& ne) {
  switch (ne->kind) {
    case DNe::Var: {
      NfNeNode n{};
      n.kind = NfNeNode::Var;
      n.index = ctx.size() - 1 - ne->level;
      require(n.index >= 0, "readback: variable escapes its context");
      return {mk_nfne(std::move(n)), ctx.var_tys[ne->level]};
    }
    case DNe::App: {
      auto [h, hty] = quote_ne(ctx, ne->head);
      require(hty->kind == DTy::Pi, "readback: application head is not a function");
      NfNeNode n{};
      n.kind = NfNeNode::App;
      n.head = h;
      n.a = quote_ty(ctx, hty->dom);
      n.b = quote_ty(ctx.extend(hty->dom), apply_ty(hty->cod, var_val(ctx.size())));
      n.arg = quote_tm(ctx, hty->dom, ne->arg);
      return {mk_nfne(std::move(n)), apply_ty(hty->cod, ne->arg)};
    }
    case DNe::Fst: {
      auto [h, hty] = quote_ne(ctx, ne->head);
      require(hty->kind == DTy::Sigma, "readback: projection head is not a pair");
      NfNeNode n{};
      n.kind = NfNeNode::Fst;
      n.head = h;
      n.a = quote_ty(ctx, hty->dom);
      n.b = quote_ty(ctx.extend(hty->dom), apply_ty(hty->cod, var_val(ctx.size())));
      return {mk_nfne(std::move(n)), hty->dom};
    }
    case DNe::Snd: {
      auto [h, hty] = quote_ne(ctx, ne->head);
      require(hty->kind == DTy::Sigma, "readback: projection head is not a pair");
      NfNeNode n{};
      n.kind = NfNeNode::Snd;
      n.head = h;
      n.a = quote_ty(ctx, hty->dom);
      n.b = quote_ty(ctx.extend(hty->dom), apply_ty(hty->cod, var_val(ctx.size())));
      Val fst_val = do_fst(neutral(ne->head));
      return {mk_nfne(std::move(n)), apply_ty(hty->cod, fst_val)};
    }
    default: {  // BoolRec
      auto [h, hty] = quote_ne(ctx, ne->head);
      require(hty->kind == DTy::Bool, "readback: boolrec scrutinee is not boolean");
      Dty dbool = mk_dty([] { DTy d{}; d.kind = DTy::Bool; return d; }());
      QCtx inner = ctx.extend(dbool);
      NfNeNode n{};
      n.kind = NfNeNode::BoolRec;
      n.head = h;
      n.motive = quote_ty(inner, apply_ty(ne->motive, var_val(ctx.size())));
      DVal tv{};
      tv.kind = DVal::True;
      DVal fv{};
      fv.kind = DVal::False;
      n.on_true = quote_tm(ctx, apply_ty(ne->motive, mk_dval(std::move(tv))), ne->on_true);
      n.on_false = quote_tm(ctx, apply_ty(ne->motive, mk_dval(std::move(fv))), ne->on_false);
      return {mk_nfne(std::move(n)), apply_ty(ne->motive, neutral(ne->head))};
    }
  }
}

// --- generic environments and normalization ----------------------------------

struct GenericCtx {
  Env env;
  QCtx qctx;
};

/// The environment of fresh neutral variables for a context, with their
/// evaluated types.
inline GenericCtx generic_ctx(const Con& g) {
  if (g->kind == ConNode::Empty) return {};
  GenericCtx base = generic_ctx(g->parent);
  Dty d = eval_ty(g->ty, base.env);
  base.env.push_back(var_val(base.qctx.size()));
  base.qctx.var_tys.push_back(d);
  return base;
}

using NfCon = std::vector<NfTy>;

struct NfSub {
  std::vector<NfTm> entries;
  bool operator==(const NfSub& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (size_t i = 0; i < entries.size(); ++i)
      if (!nf_equal(entries[i], o.entries[i])) return false;
    return true;
  }
};

inline NfCon normalize_con(const Con& g) {
  NfCon out;
  std::vector<Con> chain;
  for (Con c = g; c->kind == ConNode::Ext; c = c->parent) chain.push_back(c);
  GenericCtx gc;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    Dty d = eval_ty((*it)->ty, gc.env);
    out.push_back(quote_ty(gc.qctx, d));
    gc.env.push_back(var_val(gc.qctx.size()));
    gc.qctx.var_tys.push_back(d);
  }
  return out;
}

inline NfTy normalize_ty(const Con& g, const Ty& a) {
  GenericCtx gc = generic_ctx(g);
  return quote_ty(gc.qctx, eval_ty(a, gc.env));
}

/// Normal form of t at type a (both over g).
inline NfTm normalize_tm_at(const Con& g, const Ty& a, const Tm& t) {
  GenericCtx gc = generic_ctx(g);
  return quote_tm(gc.qctx, eval_ty(a, gc.env), eval_tm(t, gc.env));
}

/// Normal substitution: the canonical tuple over eps, one entry per target
/// context slot.
inline NfSub normalize_sub(const Sub& s) {
  Con src = sub_src(s), tgt = sub_tgt(s);
  GenericCtx gc = generic_ctx(src);
  Env res = eval_sub(s, gc.env);
  // quote each entry at the corresponding (instantiated) target type
  std::vector<Ty> tys;
  for (Con c = tgt; c->kind == ConNode::Ext; c = c->parent) tys.push_back(c->ty);
  std::reverse(tys.begin(), tys.end());
  require(res.size() == tys.size(), "normalize_sub: environment length mismatch");
  NfSub out;
  Env prefix;
  for (size_t i = 0; i < res.size(); ++i) {
    Dty d = eval_ty(tys[i], prefix);
    out.entries.push_back(quote_tm(gc.qctx, d, res[i]));
    prefix.push_back(res[i]);
  }
  return out;
}

// --- conversion ----------------------------------------------------------------

inline bool convertible_con(const Con& x, const Con& y) {
  if (syn_equal(x, y)) return true;
  if (con_len(x) != con_len(y)) return false;
  NfCon a = normalize_con(x), b = normalize_con(y);
  for (size_t i = 0; i < a.size(); ++i)
    if (!nf_equal(a[i], b[i])) return false;
  return true;
}

/// Both types must be well-formed over g.
inline bool convertible_ty(const Con& g, const Ty& x, const Ty& y) {
  if (syn_equal(x, y)) return true;
  return nf_equal(normalize_ty(g, x), normalize_ty(g, y));
}

/// Both substitutions must be well-formed with convertible indices; returns
/// false on index mismatch only when the shapes differ.
inline bool convertible_sub(const Sub& x, const Sub& y) {
  if (syn_equal(x, y)) return true;
  if (!convertible_con(sub_src(x), sub_src(y)) || !convertible_con(sub_tgt(x), sub_tgt(y)))
    return false;
  return normalize_sub(x) == normalize_sub(y);
}

// --- the checker -----------------------------------------------------------------

struct check_error : error {
  explicit check_error(const std::string& what) : error(what) {}
};

inline void check_con(const Con& g);
inline void check_ty(const Con& g, const Ty& a);
inline void check_sub(const Sub& s);
inline Ty infer_tm(const Con& g, const Tm& t);
inline void check_tm(const Con& g, const Ty& a, const Tm& t);

namespace detail {
inline void expect_con(const Con& want, const Con& got, const std::string& where) {
  if (!convertible_con(want, got))
    throw check_error(where + ": context mismatch: expected " + print_con(want) +
                      ", found " + print_con(got));
}
}  // namespace detail

inline void check_con(const Con& g) {
  if (g->kind == ConNode::Empty) return;
  check_con(g->parent);
  check_ty(g->parent, g->ty);
}

inline void check_ty(const Con& g, const Ty& a) {
  switch (a->kind) {
    case TyNode::SubT:
      check_sub(a->sub);
      detail::expect_con(g, sub_src(a->sub), "subT");
      check_ty(sub_tgt(a->sub), a->a);
      return;
    case TyNode::Unit:
    case TyNode::Bool:
    case TyNode::Univ: return;
    case TyNode::Pi:
    case TyNode::Sigma:
      check_ty(g, a->a);
      check_ty(mk_ext(g, a->a), a->b);
      return;
    default: check_tm(g, mk_univ(), a->tm); return;  // El
  }
}

inline void check_sub(const Sub& s) {
  switch (s->kind) {
    case SubNode::Id:
    case SubNode::Eps: check_con(s->con); return;
    case SubNode::Comp:
      check_sub(s->s1);
      check_sub(s->s2);
      detail::expect_con(sub_src(s->s1), sub_tgt(s->s2), "comp");
      return;
    case SubNode::P:
      check_con(s->con);
      check_ty(s->con, s->ty);
      return;
    default:  // Pair
      check_sub(s->s1);
      check_ty(sub_tgt(s->s1), s->ty);
      check_tm(sub_src(s->s1), mk_subT(s->ty, s->s1), s->tm);
      return;
  }
}

inline Ty infer_tm(const Con& g, const Tm& t) {
  switch (t->kind) {
    case TmNode::SubTm: {
      check_sub(t->sub);
      detail::expect_con(g, sub_src(t->sub), "subt");
      Ty inner = infer_tm(sub_tgt(t->sub), t->t1);
      return mk_subT(inner, t->sub);
    }
    case TmNode::Q: {
      check_con(t->con);
      check_ty(t->con, t->a);
      detail::expect_con(g, mk_ext(t->con, t->a), "q");
      return mk_subT(t->a, mk_p(t->con, t->a));
    }
    case TmNode::TT: return mk_unit();
    case TmNode::True:
    case TmNode::False: return mk_bool();
    case TmNode::BoolCode:
    case TmNode::UnitCode: return mk_univ();
    case TmNode::BoolRec: {
      check_ty(mk_ext(g, mk_bool()), t->a);
      check_tm(g, mk_bool(), t->t3);
      check_tm(g, mk_subT(t->a, mk_pair(mk_id(g), mk_bool(), mk_true())), t->t1);
      check_tm(g, mk_subT(t->a, mk_pair(mk_id(g), mk_bool(), mk_false())), t->t2);
      return mk_subT(t->a, mk_pair(mk_id(g), mk_bool(), t->t3));
    }
    case TmNode::Lam:
      check_ty(g, t->a);
      check_ty(mk_ext(g, t->a), t->b);
      check_tm(mk_ext(g, t->a), t->b, t->t1);
      return mk_pi(t->a, t->b);
    case TmNode::App:
      check_ty(g, t->a);
      check_ty(mk_ext(g, t->a), t->b);
      check_tm(g, mk_pi(t->a, t->b), t->t1);
      check_tm(g, t->a, t->t2);
      return mk_subT(t->b, mk_pair(mk_id(g), t->a, t->t2));
    case TmNode::PairTm:
      check_ty(g, t->a);
      check_ty(mk_ext(g, t->a), t->b);
      check_tm(g, t->a, t->t1);
      check_tm(g, mk_subT(t->b, mk_pair(mk_id(g), t->a, t->t1)), t->t2);
      return mk_sigma(t->a, t->b);
    case TmNode::Fst:
      check_ty(g, t->a);
      check_ty(mk_ext(g, t->a), t->b);
      check_tm(g, mk_sigma(t->a, t->b), t->t1);
      return t->a;
    case TmNode::Snd: {
      check_ty(g, t->a);
      check_ty(mk_ext(g, t->a), t->b);
      check_tm(g, mk_sigma(t->a, t->b), t->t1);
      Tm fst = mk_fst(t->a, t->b, t->t1);
      return mk_subT(t->b, mk_pair(mk_id(g), t->a, fst));
    }
    default: throw check_error("infer: unknown term node");
  }
}

inline std::string show_nf_ty(const NfTy& t);  // defined after nf_to_expr below

inline void check_tm(const Con& g, const Ty& a, const Tm& t) {
  Ty inferred = infer_tm(g, t);
  if (!convertible_ty(g, inferred, a)) {
    throw check_error("type mismatch at " + print_tm(t) + ": expected " +
                      show_nf_ty(normalize_ty(g, a)) + ", inferred " +
                      show_nf_ty(normalize_ty(g, inferred)));
  }
}

/// True iff both terms are well-formed over g with convertible types and
/// equal normal forms.
inline bool convertible_tm(const Con& g, const Tm& x, const Tm& y) {
  Ty tx = infer_tm(g, x);
  Ty ty_ = infer_tm(g, y);
  if (!convertible_ty(g, tx, ty_)) return false;
  return nf_equal(normalize_tm_at(g, tx, x), normalize_tm_at(g, tx, y));
}

// --- readback to expressions ---------------------------------------------------

// Rebuilds ordinary (annotated) expressions from normal forms; used for
// printing and for rewrite rules that need the components of a normalized
// type. Variables come back as q weakened by a chain of p's.

inline Ty nf_to_ty(const Con& g, const NfTy& t);
inline Tm nf_to_tm(const Con& g, const NfTm& t);
inline Tm nf_to_tm_ne(const Con& g, const NfNe& ne);

inline Tm var_expr(const Con& g, int index) {
  // q[p^index] in context g
  auto [base, a] = con_entry(g, index);
  Tm e = mk_q(base, a);
  // wrap with the p's of the outer entries, innermost first
  std::vector<std::pair<Con, Ty>> outs;
  {
    Con c = g;
    for (int i = 0; i < index; ++i) {
      outs.push_back({c->parent, c->ty});
      c = c->parent;
    }
  }
  for (auto it = outs.rbegin(); it != outs.rend(); ++it)
    e = mk_subt(e, mk_p(it->first, it->second));
  return e;
}

inline Ty nf_to_ty(const Con& g, const NfTy& t) {
  switch (t->kind) {
    case NfTyNode::Unit: return mk_unit();
    case NfTyNode::Bool: return mk_bool();
    case NfTyNode::Univ: return mk_univ();
    case NfTyNode::El: return mk_el(nf_to_tm_ne(g, t->ne));
    default: {
      Ty a = nf_to_ty(g, t->a);
      Ty b = nf_to_ty(mk_ext(g, a), t->b);
      return t->kind == NfTyNode::Pi ? mk_pi(a, b) : mk_sigma(a, b);
    }
  }
}

inline Tm nf_to_tm(const Con& g, const NfTm& t) {
  switch (t->kind) {
    case NfTmNode::TT: return mk_tt();
    case NfTmNode::True: return mk_true();
    case NfTmNode::False: return mk_false();
    case NfTmNode::CodeUnit: return mk_unit_code();
    case NfTmNode::CodeBool: return mk_bool_code();
    case NfTmNode::Lam: {
      Ty a = nf_to_ty(g, t->a);
      Ty b = nf_to_ty(mk_ext(g, a), t->b);
      return mk_lam(a, b, nf_to_tm(mk_ext(g, a), t->t1));
    }
    case NfTmNode::Pair: {
      Ty a = nf_to_ty(g, t->a);
      Ty b = nf_to_ty(mk_ext(g, a), t->b);
      return mk_mkpair(a, b, nf_to_tm(g, t->t1), nf_to_tm(g, t->t2));
    }
    default: return nf_to_tm_ne(g, t->ne);
  }
}

inline Tm nf_to_tm_ne(const Con& g, const NfNe& ne) {
  switch (ne->kind) {
    case NfNeNode::Var: return var_expr(g, ne->index);
    case NfNeNode::App: {
      Ty a = nf_to_ty(g, ne->a);
      Ty b = nf_to_ty(mk_ext(g, a), ne->b);
      return mk_app(a, b, nf_to_tm_ne(g, ne->head), nf_to_tm(g, ne->arg));
    }
    case NfNeNode::Fst: {
      Ty a = nf_to_ty(g, ne->a);
      Ty b = nf_to_ty(mk_ext(g, a), ne->b);
      return mk_fst(a, b, nf_to_tm_ne(g, ne->head));
    }
    case NfNeNode::Snd: {
      Ty a = nf_to_ty(g, ne->a);
      Ty b = nf_to_ty(mk_ext(g, a), ne->b);
      return mk_snd(a, b, nf_to_tm_ne(g, ne->head));
    }
    default: {  // BoolRec
      Ty motive = nf_to_ty(mk_ext(g, mk_bool()), ne->motive);
      return mk_boolrec(motive, nf_to_tm(g, ne->on_true), nf_to_tm(g, ne->on_false),
                        nf_to_tm_ne(g, ne->head));
    }
  }
}

inline std::string show_nf_ty(const NfTy& t) {
  // normal types never mention concrete annotations that depend on the
  // context beyond variables, so printing against a best-effort context of
  // the right depth is enough for diagnostics
  struct Depth {
    static int ty(const NfTy& t) {
      switch (t->kind) {
        case NfTyNode::El: return ne(t->ne);
        case NfTyNode::Pi:
        case NfTyNode::Sigma: return std::max(ty(t->a), ty(t->b) - 1);
        default: return 0;
      }
    }
    static int ne(const NfNe& n) {
      switch (n->kind) {
        case NfNeNode::Var: return n->index + 1;
        case NfNeNode::App: return std::max(ne(n->head), tm(n->arg));
        case NfNeNode::Fst:
        case NfNeNode::Snd: return ne(n->head);
        default:
          return std::max(std::max(ne(n->head), ty(n->motive) - 1),
                          std::max(tm(n->on_true), tm(n->on_false)));
      }
    }
    static int tm(const NfTm& t) {
      switch (t->kind) {
        case NfTmNode::Lam: return std::max(ty(t->a), std::max(ty(t->b), tm(t->t1)) - 1);
        case NfTmNode::Pair:
          return std::max(std::max(ty(t->a), ty(t->b) - 1), std::max(tm(t->t1), tm(t->t2)));
        case NfTmNode::Ne: return ne(t->ne);
        default: return 0;
      }
    }
  };
  Con g = mk_empty();
  for (int i = Depth::ty(t); i > 0; --i) g = mk_ext(g, mk_unit());
  return print_ty(nf_to_ty(g, t));
}

/// Normal form of an expression of any sort, rendered back as an expression.
/// Terms and types take their context from `ctx`; substitutions and contexts
/// are self-contained.
inline AnyExpr normalize_any(const Con& ctx, const AnyExpr& e) {
  switch (e.sort) {
    case Sort::Con: {
      NfCon nf = normalize_con(e.c);
      Con g = mk_empty();
      for (const auto& t : nf) g = mk_ext(g, nf_to_ty(g, t));
      return AnyExpr::of(g);
    }
    case Sort::Sub: {
      Con src = sub_src(e.s), tgt = sub_tgt(e.s);
      NfSub nf = normalize_sub(e.s);
      NfCon tgt_nf = normalize_con(tgt);
      Con src_nf_con = src;  // keep the source as given
      Sub acc = mk_eps(src_nf_con);
      Con prefix = mk_empty();
      for (size_t i = 0; i < nf.entries.size(); ++i) {
        Ty a = nf_to_ty(prefix, tgt_nf[i]);
        acc = mk_pair(acc, a, nf_to_tm(src_nf_con, nf.entries[i]));
        prefix = mk_ext(prefix, a);
      }
      return AnyExpr::of(acc);
    }
    case Sort::Ty: return AnyExpr::of(nf_to_ty(ctx, normalize_ty(ctx, e.ty)));
    default: {
      Ty a = infer_tm(ctx, e.tm);
      return AnyExpr::of(nf_to_tm(ctx, normalize_tm_at(ctx, a, e.tm)));
    }
  }
}

}  // namespace scwf
