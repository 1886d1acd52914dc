#pragma once

// The finite semantic world: small types with enumerable values, the
// evaluator from syntax into it, and semantic (pointwise) equality. All base
// types are finite and the universe has exactly two codes, so "for all
// environments" is an exhaustive loop.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "scwf/kernel.hpp"
#include "scwf/syntax.hpp"

namespace scwf {

struct SemTyNode;
using SemTy = std::shared_ptr<const SemTyNode>;

struct SemTyNode {
  enum Kind { Unit, Bool, Univ, Pi, Sigma } kind;
  SemTy dom;                // Pi, Sigma
  std::vector<SemTy> cod;   // per value of dom, in enumeration order
};

struct SemValNode;
using SemVal = std::shared_ptr<const SemValNode>;

struct SemValNode {
  enum Kind { Star, TT, FF, CodeUnit, CodeBool, Table, Pair } kind;
  std::vector<SemVal> table;  // Pi: result per domain value
  SemVal v1, v2;              // Sigma
};

using SemEnv = std::vector<SemVal>;

inline SemTy mk_semty(SemTyNode n) { return std::make_shared<SemTyNode>(std::move(n)); }
inline SemVal mk_semval(SemValNode n) { return std::make_shared<SemValNode>(std::move(n)); }

inline SemTy sem_unit() { static SemTy t = mk_semty({SemTyNode::Unit, nullptr, {}}); return t; }
inline SemTy sem_bool() { static SemTy t = mk_semty({SemTyNode::Bool, nullptr, {}}); return t; }
inline SemTy sem_univ() { static SemTy t = mk_semty({SemTyNode::Univ, nullptr, {}}); return t; }

inline bool sem_equal(const SemTy& a, const SemTy& b);
inline bool sem_equal(const SemVal& a, const SemVal& b);

inline bool sem_equal(const SemTy& a, const SemTy& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == SemTyNode::Pi || a->kind == SemTyNode::Sigma) {
    if (!sem_equal(a->dom, b->dom) || a->cod.size() != b->cod.size()) return false;
    for (size_t i = 0; i < a->cod.size(); ++i)
      if (!sem_equal(a->cod[i], b->cod[i])) return false;
  }
  return true;
}
inline bool sem_equal(const SemVal& a, const SemVal& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case SemValNode::Table: {
      if (a->table.size() != b->table.size()) return false;
      for (size_t i = 0; i < a->table.size(); ++i)
        if (!sem_equal(a->table[i], b->table[i])) return false;
      return true;
    }
    case SemValNode::Pair: return sem_equal(a->v1, b->v1) && sem_equal(a->v2, b->v2);
    default: return true;
  }
}

/// Canonical value enumeration; every semantic type is finite.
inline std::vector<SemVal> enumerate_values(const SemTy& t) {
  switch (t->kind) {
    case SemTyNode::Unit: return {mk_semval({SemValNode::Star, {}, nullptr, nullptr})};
    case SemTyNode::Bool:
      return {mk_semval({SemValNode::TT, {}, nullptr, nullptr}),
              mk_semval({SemValNode::FF, {}, nullptr, nullptr})};
    case SemTyNode::Univ:
      return {mk_semval({SemValNode::CodeUnit, {}, nullptr, nullptr}),
              mk_semval({SemValNode::CodeBool, {}, nullptr, nullptr})};
    case SemTyNode::Pi: {
      // all tables, odometer order with the last slot fastest
      std::vector<std::vector<SemVal>> choices;
      for (const auto& c : t->cod) choices.push_back(enumerate_values(c));
      std::vector<SemVal> out;
      std::vector<size_t> idx(choices.size(), 0);
      while (true) {
        std::vector<SemVal> row;
        for (size_t i = 0; i < choices.size(); ++i) row.push_back(choices[i][idx[i]]);
        out.push_back(mk_semval({SemValNode::Table, std::move(row), nullptr, nullptr}));
        size_t at = choices.size();
        while (at > 0 && ++idx[at - 1] == choices[at - 1].size()) idx[--at] = 0;
        if (at == 0) break;
      }
      return out;
    }
    default: {  // Sigma
      std::vector<SemVal> out;
      auto doms = enumerate_values(t->dom);
      for (size_t i = 0; i < doms.size(); ++i)
        for (const auto& s : enumerate_values(t->cod[i]))
          out.push_back(mk_semval({SemValNode::Pair, {}, doms[i], s}));
      return out;
    }
  }
}

inline int value_index(const SemTy& t, const SemVal& v) {
  auto vals = enumerate_values(t);
  for (int i = 0; i < (int)vals.size(); ++i)
    if (sem_equal(vals[i], v)) return i;
  throw error("value_index: value is not of the given type");
}

inline std::uint64_t value_count(const SemTy& t) {
  switch (t->kind) {
    case SemTyNode::Unit: return 1;
    case SemTyNode::Bool:
    case SemTyNode::Univ: return 2;
    case SemTyNode::Pi: {
      std::uint64_t n = 1;
      for (const auto& c : t->cod) n *= value_count(c);
      return n;
    }
    default: {
      std::uint64_t n = 0;
      for (const auto& c : t->cod) n += value_count(c);
      return n;
    }
  }
}

// --- evaluation of syntax into the finite world ---------------------------------

inline SemTy sem_eval_ty(const Ty& a, const SemEnv& env);
inline SemVal sem_eval_tm(const Tm& t, const SemEnv& env);
inline SemEnv sem_eval_sub(const Sub& s, const SemEnv& env);

/// All environments of a (well-formed) context, in a stable order.
inline std::vector<SemEnv> eval_con(const Con& g) {
  if (g->kind == ConNode::Empty) return {SemEnv{}};
  std::vector<SemEnv> out;
  for (const auto& env : eval_con(g->parent)) {
    SemTy a = sem_eval_ty(g->ty, env);
    for (const auto& v : enumerate_values(a)) {
      SemEnv e = env;
      e.push_back(v);
      out.push_back(std::move(e));
    }
  }
  return out;
}

inline SemEnv sem_eval_sub(const Sub& s, const SemEnv& env) {
  switch (s->kind) {
    case SubNode::Id: return env;
    case SubNode::Eps: return {};
    case SubNode::Comp: return sem_eval_sub(s->s1, sem_eval_sub(s->s2, env));
    case SubNode::P: {
      SemEnv e = env;
      require(!e.empty(), "sem eval: p on an empty environment");
      e.pop_back();
      return e;
    }
    default: {
      SemEnv e = sem_eval_sub(s->s1, env);
      e.push_back(sem_eval_tm(s->tm, env));
      return e;
    }
  }
}

inline SemTy sem_eval_ty(const Ty& a, const SemEnv& env) {
  switch (a->kind) {
    case TyNode::SubT: return sem_eval_ty(a->a, sem_eval_sub(a->sub, env));
    case TyNode::Unit: return sem_unit();
    case TyNode::Bool: return sem_bool();
    case TyNode::Univ: return sem_univ();
    case TyNode::Pi:
    case TyNode::Sigma: {
      SemTy dom = sem_eval_ty(a->a, env);
      std::vector<SemTy> cod;
      for (const auto& v : enumerate_values(dom)) {
        SemEnv e = env;
        e.push_back(v);
        cod.push_back(sem_eval_ty(a->b, e));
      }
      return mk_semty({a->kind == TyNode::Pi ? SemTyNode::Pi : SemTyNode::Sigma, dom, std::move(cod)});
    }
    default: {  // El
      SemVal code = sem_eval_tm(a->tm, env);
      if (code->kind == SemValNode::CodeUnit) return sem_unit();
      require(code->kind == SemValNode::CodeBool, "sem eval: el of a non-code");
      return sem_bool();
    }
  }
}

inline SemVal sem_eval_tm(const Tm& t, const SemEnv& env) {
  switch (t->kind) {
    case TmNode::SubTm: return sem_eval_tm(t->t1, sem_eval_sub(t->sub, env));
    case TmNode::Q:
      require(!env.empty(), "sem eval: q on an empty environment");
      return env.back();
    case TmNode::TT: return mk_semval({SemValNode::Star, {}, nullptr, nullptr});
    case TmNode::True: return mk_semval({SemValNode::TT, {}, nullptr, nullptr});
    case TmNode::False: return mk_semval({SemValNode::FF, {}, nullptr, nullptr});
    case TmNode::BoolCode: return mk_semval({SemValNode::CodeBool, {}, nullptr, nullptr});
    case TmNode::UnitCode: return mk_semval({SemValNode::CodeUnit, {}, nullptr, nullptr});
    case TmNode::BoolRec: {
      SemVal b = sem_eval_tm(t->t3, env);
      return b->kind == SemValNode::TT ? sem_eval_tm(t->t1, env) : sem_eval_tm(t->t2, env);
    }
    case TmNode::Lam: {
      // tabulate over the domain
      SemTy dom = sem_eval_ty(t->a, env);
      std::vector<SemVal> table;
      for (const auto& v : enumerate_values(dom)) {
        SemEnv e = env;
        e.push_back(v);
        table.push_back(sem_eval_tm(t->t1, e));
      }
      return mk_semval({SemValNode::Table, std::move(table), nullptr, nullptr});
    }
    case TmNode::App: {
      SemVal fn = sem_eval_tm(t->t1, env);
      SemVal arg = sem_eval_tm(t->t2, env);
      require(fn->kind == SemValNode::Table, "sem eval: applying a non-table");
      SemTy dom = sem_eval_ty(t->a, env);
      return fn->table.at(value_index(dom, arg));
    }
    case TmNode::PairTm:
      return mk_semval({SemValNode::Pair, {}, sem_eval_tm(t->t1, env), sem_eval_tm(t->t2, env)});
    case TmNode::Fst: {
      SemVal v = sem_eval_tm(t->t1, env);
      require(v->kind == SemValNode::Pair, "sem eval: projecting a non-pair");
      return v->v1;
    }
    default: {  // Snd
      SemVal v = sem_eval_tm(t->t1, env);
      require(v->kind == SemValNode::Pair, "sem eval: projecting a non-pair");
      return v->v2;
    }
  }
}

/// Pointwise equality over every environment of the common context. For
/// terms the values are compared structurally (tables by table).
inline bool semantic_equal_tm(const Con& g, const Tm& x, const Tm& y) {
  for (const auto& env : eval_con(g))
    if (!sem_equal(sem_eval_tm(x, env), sem_eval_tm(y, env))) return false;
  return true;
}
inline bool semantic_equal_ty(const Con& g, const Ty& x, const Ty& y) {
  for (const auto& env : eval_con(g))
    if (!sem_equal(sem_eval_ty(x, env), sem_eval_ty(y, env))) return false;
  return true;
}
inline bool semantic_equal_sub(const Con& g, const Sub& x, const Sub& y) {
  for (const auto& env : eval_con(g)) {
    SemEnv a = sem_eval_sub(x, env), b = sem_eval_sub(y, env);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!sem_equal(a[i], b[i])) return false;
  }
  return true;
}

inline std::string show_sem_val(const SemVal& v) {
  switch (v->kind) {
    case SemValNode::Star: return "*";
    case SemValNode::TT: return "true";
    case SemValNode::FF: return "false";
    case SemValNode::CodeUnit: return "unit-code";
    case SemValNode::CodeBool: return "bool-code";
    case SemValNode::Pair: return "(" + show_sem_val(v->v1) + ", " + show_sem_val(v->v2) + ")";
    default: {
      std::string s = "[";
      for (size_t i = 0; i < v->table.size(); ++i) {
        if (i) s += ' ';
        s += show_sem_val(v->table[i]);
      }
      return s + "]";
    }
  }
}

inline std::string show_sem_ty(const SemTy& t) {
  switch (t->kind) {
    case SemTyNode::Unit: return "unit";
    case SemTyNode::Bool: return "bool";
    case SemTyNode::Univ: return "u";
    default: {
      std::string s = t->kind == SemTyNode::Pi ? "(pi " : "(sigma ";
      s += show_sem_ty(t->dom) + " [";
      for (size_t i = 0; i < t->cod.size(); ++i) {
        if (i) s += ' ';
        s += show_sem_ty(t->cod[i]);
      }
      return s + "])";
    }
  }
}

}  // namespace scwf
