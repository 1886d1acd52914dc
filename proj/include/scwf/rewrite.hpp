#pragma once

// Single-step rewriting along the calculus' equations (plus the type-former
// beta/eta rules). Used as an independent provable-equality oracle: any
// chain of rewrite steps links convertible expressions, so chain endpoints
// must satisfy the conversion checker.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scwf/kernel.hpp"
#include "scwf/syntax.hpp"

namespace scwf {

enum class Dir { L2R, R2L };

struct RewriteRule {
  std::string id;
  // nullopt when the pattern does not match at the focus; ctx is the focus
  // node's ambient context (meaningful for Ty/Tm foci)
  std::function<std::optional<AnyExpr>(const AnyExpr&, const Con&)> l2r;
  std::function<std::optional<AnyExpr>(const AnyExpr&, const Con&)> r2l;  // may be null
};

namespace rw {

inline std::optional<AnyExpr> no_match() { return std::nullopt; }

// q-weakening substitution Gamma |> Bool -> Delta |> Bool over sigma
inline Sub bool_lift(const Con& g, const Sub& sigma) {
  return mk_pair(mk_comp(sigma, mk_p(g, mk_bool())), mk_bool(), mk_q(g, mk_bool()));
}

inline const std::vector<RewriteRule>& rules() {
  static const std::vector<RewriteRule> R = [] {
    std::vector<RewriteRule> v;
    auto sub_rule = [](const AnyExpr& e) -> const Sub* {
      return e.sort == Sort::Sub ? &e.s : nullptr;
    };

    v.push_back({"assoc",
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s || (*s)->kind != SubNode::Comp || (*s)->s1->kind != SubNode::Comp)
            return std::nullopt;
          const Sub& outer = (*s)->s1;
          return AnyExpr::of(mk_comp(outer->s1, mk_comp(outer->s2, (*s)->s2)));
        },
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s || (*s)->kind != SubNode::Comp || (*s)->s2->kind != SubNode::Comp)
            return std::nullopt;
          const Sub& inner = (*s)->s2;
          return AnyExpr::of(mk_comp(mk_comp((*s)->s1, inner->s1), inner->s2));
        }});

    v.push_back({"idl",
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s || (*s)->kind != SubNode::Comp || (*s)->s1->kind != SubNode::Id)
            return std::nullopt;
          return AnyExpr::of((*s)->s2);
        },
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s) return std::nullopt;
          return AnyExpr::of(mk_comp(mk_id(sub_tgt(*s)), *s));
        }});

    v.push_back({"idr",
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s || (*s)->kind != SubNode::Comp || (*s)->s2->kind != SubNode::Id)
            return std::nullopt;
          return AnyExpr::of((*s)->s1);
        },
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s) return std::nullopt;
          return AnyExpr::of(mk_comp(*s, mk_id(sub_src(*s))));
        }});

    v.push_back({"eps-eta",
        [sub_rule](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          auto s = sub_rule(e);
          if (!s || (*s)->kind == SubNode::Eps) return std::nullopt;
          if (sub_tgt(*s)->kind != ConNode::Empty) return std::nullopt;
          return AnyExpr::of(mk_eps(sub_src(*s)));
        },
        nullptr});

    v.push_back({"sub-id-ty",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::SubT ||
              e.ty->sub->kind != SubNode::Id)
            return std::nullopt;
          return AnyExpr::of(e.ty->a);
        },
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty) return std::nullopt;
          return AnyExpr::of(mk_subT(e.ty, mk_id(ctx)));
        }});

    v.push_back({"sub-comp-ty",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::SubT ||
              e.ty->sub->kind != SubNode::Comp)
            return std::nullopt;
          const Sub& c = e.ty->sub;
          return AnyExpr::of(mk_subT(mk_subT(e.ty->a, c->s1), c->s2));
        },
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::SubT ||
              e.ty->a->kind != TyNode::SubT)
            return std::nullopt;
          return AnyExpr::of(mk_subT(e.ty->a->a, mk_comp(e.ty->a->sub, e.ty->sub)));
        }});

    v.push_back({"sub-id-tm",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::SubTm ||
              e.tm->sub->kind != SubNode::Id)
            return std::nullopt;
          return AnyExpr::of(e.tm->t1);
        },
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm) return std::nullopt;
          return AnyExpr::of(mk_subt(e.tm, mk_id(ctx)));
        }});

    v.push_back({"sub-comp-tm",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::SubTm ||
              e.tm->sub->kind != SubNode::Comp)
            return std::nullopt;
          const Sub& c = e.tm->sub;
          return AnyExpr::of(mk_subt(mk_subt(e.tm->t1, c->s1), c->s2));
        },
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::SubTm ||
              e.tm->t1->kind != TmNode::SubTm)
            return std::nullopt;
          return AnyExpr::of(mk_subt(e.tm->t1->t1, mk_comp(e.tm->t1->sub, e.tm->sub)));
        }});

    v.push_back({"ext-beta1",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Sub || e.s->kind != SubNode::Comp ||
              e.s->s1->kind != SubNode::P || e.s->s2->kind != SubNode::Pair)
            return std::nullopt;
          return AnyExpr::of(e.s->s2->s1);
        },
        nullptr});

    v.push_back({"ext-beta2",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::SubTm ||
              e.tm->t1->kind != TmNode::Q || e.tm->sub->kind != SubNode::Pair)
            return std::nullopt;
          return AnyExpr::of(e.tm->sub->tm);
        },
        nullptr});

    v.push_back({"ext-eta",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Sub || e.s->kind != SubNode::Pair) return std::nullopt;
          const Sub& pr = e.s;
          if (pr->s1->kind != SubNode::P || pr->tm->kind != TmNode::Q) return std::nullopt;
          if (!syn_equal(pr->s1->con, pr->tm->con) || !syn_equal(pr->s1->ty, pr->tm->a) ||
              !syn_equal(pr->ty, pr->s1->ty))
            return std::nullopt;
          return AnyExpr::of(mk_id(mk_ext(pr->s1->con, pr->s1->ty)));
        },
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Sub || e.s->kind != SubNode::Id ||
              e.s->con->kind != ConNode::Ext)
            return std::nullopt;
          const Con& g = e.s->con->parent;
          const Ty& a = e.s->con->ty;
          return AnyExpr::of(mk_pair(mk_p(g, a), a, mk_q(g, a)));
        }});

    v.push_back({"pair-comp",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Sub || e.s->kind != SubNode::Comp ||
              e.s->s1->kind != SubNode::Pair)
            return std::nullopt;
          const Sub& pr = e.s->s1;
          const Sub& nu = e.s->s2;
          return AnyExpr::of(
              mk_pair(mk_comp(pr->s1, nu), pr->ty, mk_subt(pr->tm, nu)));
        },
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Sub || e.s->kind != SubNode::Pair ||
              e.s->s1->kind != SubNode::Comp || e.s->tm->kind != TmNode::SubTm)
            return std::nullopt;
          const Sub& nu1 = e.s->s1->s2;
          const Sub& nu2 = e.s->tm->sub;
          if (!syn_equal(nu1, nu2)) return std::nullopt;
          return AnyExpr::of(
              mk_comp(mk_pair(e.s->s1->s1, e.s->ty, e.s->tm->t1), nu1));
        }});

    // type former computation rules
    v.push_back({"pi-beta",
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::App ||
              e.tm->t1->kind != TmNode::Lam)
            return std::nullopt;
          const Tm& lam = e.tm->t1;
          return AnyExpr::of(
              mk_subt(lam->t1, mk_pair(mk_id(ctx), lam->a, e.tm->t2)));
        },
        nullptr});

    v.push_back({"pi-eta",
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm) return std::nullopt;
          NfTy nf = normalize_ty(ctx, infer_tm(ctx, e.tm));
          if (nf->kind != NfTyNode::Pi) return std::nullopt;
          Ty a = nf_to_ty(ctx, nf->a);
          Ty b = nf_to_ty(mk_ext(ctx, a), nf->b);
          Sub p1 = mk_p(ctx, a);
          Ty aw = mk_subT(a, p1);
          Con ctx2 = mk_ext(ctx, a);
          Sub lift = mk_pair(mk_comp(p1, mk_p(ctx2, aw)), a, mk_q(ctx2, aw));
          Tm body = mk_app(aw, mk_subT(b, lift), mk_subt(e.tm, p1), mk_q(ctx, a));
          return AnyExpr::of(mk_lam(a, b, body));
        },
        nullptr});

    v.push_back({"sigma-beta1",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::Fst ||
              e.tm->t1->kind != TmNode::PairTm)
            return std::nullopt;
          return AnyExpr::of(e.tm->t1->t1);
        },
        nullptr});

    v.push_back({"sigma-beta2",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::Snd ||
              e.tm->t1->kind != TmNode::PairTm)
            return std::nullopt;
          return AnyExpr::of(e.tm->t1->t2);
        },
        nullptr});

    v.push_back({"sigma-eta",
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm) return std::nullopt;
          NfTy nf = normalize_ty(ctx, infer_tm(ctx, e.tm));
          if (nf->kind != NfTyNode::Sigma) return std::nullopt;
          Ty a = nf_to_ty(ctx, nf->a);
          Ty b = nf_to_ty(mk_ext(ctx, a), nf->b);
          return AnyExpr::of(mk_mkpair(a, b, mk_fst(a, b, e.tm), mk_snd(a, b, e.tm)));
        },
        nullptr});

    v.push_back({"unit-eta",
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind == TmNode::TT) return std::nullopt;
          NfTy nf = normalize_ty(ctx, infer_tm(ctx, e.tm));
          if (nf->kind != NfTyNode::Unit) return std::nullopt;
          return AnyExpr::of(mk_tt());
        },
        nullptr});

    v.push_back({"bool-beta-true",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::BoolRec ||
              e.tm->t3->kind != TmNode::True)
            return std::nullopt;
          return AnyExpr::of(e.tm->t1);
        },
        nullptr});

    v.push_back({"bool-beta-false",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::BoolRec ||
              e.tm->t3->kind != TmNode::False)
            return std::nullopt;
          return AnyExpr::of(e.tm->t2);
        },
        nullptr});

    v.push_back({"boolrec-sub",
        [](const AnyExpr& e, const Con& ctx) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Tm || e.tm->kind != TmNode::SubTm ||
              e.tm->t1->kind != TmNode::BoolRec)
            return std::nullopt;
          const Tm& br = e.tm->t1;
          const Sub& s = e.tm->sub;
          return AnyExpr::of(mk_boolrec(mk_subT(br->a, bool_lift(ctx, s)),
                                        mk_subt(br->t1, s), mk_subt(br->t2, s),
                                        mk_subt(br->t3, s)));
        },
        nullptr});

    v.push_back({"el-unit",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::El ||
              e.ty->tm->kind != TmNode::UnitCode)
            return std::nullopt;
          return AnyExpr::of(mk_unit());
        },
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::Unit) return std::nullopt;
          return AnyExpr::of(mk_el(mk_unit_code()));
        }});

    v.push_back({"el-bool",
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::El ||
              e.ty->tm->kind != TmNode::BoolCode)
            return std::nullopt;
          return AnyExpr::of(mk_bool());
        },
        [](const AnyExpr& e, const Con&) -> std::optional<AnyExpr> {
          if (e.sort != Sort::Ty || e.ty->kind != TyNode::Bool) return std::nullopt;
          return AnyExpr::of(mk_el(mk_bool_code()));
        }});

    return v;
  }();
  return R;
}

inline const RewriteRule& rule_by_id(const std::string& id) {
  for (const auto& r : rules())
    if (r.id == id) return r;
  throw error("rewrite: unknown equation id " + id);
}

// --- child navigation --------------------------------------------------------

struct Child {
  AnyExpr expr;
  Con ctx;  // ambient context of the child (meaningful for Ty/Tm)
};

inline int child_count(const AnyExpr& e) {
  switch (e.sort) {
    case Sort::Con: return e.c->kind == ConNode::Empty ? 0 : 2;
    case Sort::Sub:
      switch (e.s->kind) {
        case SubNode::Id:
        case SubNode::Eps: return 1;
        case SubNode::Comp: return 2;
        case SubNode::P: return 2;
        default: return 3;  // Pair
      }
    case Sort::Ty:
      switch (e.ty->kind) {
        case TyNode::SubT: return 2;
        case TyNode::Pi:
        case TyNode::Sigma: return 2;
        case TyNode::El: return 1;
        default: return 0;
      }
    default:
      switch (e.tm->kind) {
        case TmNode::SubTm: return 2;
        case TmNode::Q: return 2;
        case TmNode::BoolRec: return 4;
        case TmNode::Lam: return 3;
        case TmNode::App:
        case TmNode::PairTm: return 4;
        case TmNode::Fst:
        case TmNode::Snd: return 3;
        default: return 0;
      }
  }
}

inline Child child_at(const AnyExpr& e, const Con& ctx, int i) {
  auto bad = [&]() -> Child { throw error("rewrite: position out of range"); };
  switch (e.sort) {
    case Sort::Con:
      if (e.c->kind == ConNode::Empty) return bad();
      if (i == 0) return {AnyExpr::of(e.c->parent), mk_empty()};
      if (i == 1) return {AnyExpr::of(e.c->ty), e.c->parent};
      return bad();
    case Sort::Sub:
      switch (e.s->kind) {
        case SubNode::Id:
        case SubNode::Eps:
          if (i == 0) return {AnyExpr::of(e.s->con), mk_empty()};
          return bad();
        case SubNode::Comp:
          if (i == 0) return {AnyExpr::of(e.s->s1), mk_empty()};
          if (i == 1) return {AnyExpr::of(e.s->s2), mk_empty()};
          return bad();
        case SubNode::P:
          if (i == 0) return {AnyExpr::of(e.s->con), mk_empty()};
          if (i == 1) return {AnyExpr::of(e.s->ty), e.s->con};
          return bad();
        default:  // Pair
          if (i == 0) return {AnyExpr::of(e.s->s1), mk_empty()};
          if (i == 1) return {AnyExpr::of(e.s->ty), sub_tgt(e.s->s1)};
          if (i == 2) return {AnyExpr::of(e.s->tm), sub_src(e.s->s1)};
          return bad();
      }
    case Sort::Ty:
      switch (e.ty->kind) {
        case TyNode::SubT:
          if (i == 0) return {AnyExpr::of(e.ty->a), sub_tgt(e.ty->sub)};
          if (i == 1) return {AnyExpr::of(e.ty->sub), mk_empty()};
          return bad();
        case TyNode::Pi:
        case TyNode::Sigma:
          if (i == 0) return {AnyExpr::of(e.ty->a), ctx};
          if (i == 1) return {AnyExpr::of(e.ty->b), mk_ext(ctx, e.ty->a)};
          return bad();
        case TyNode::El:
          if (i == 0) return {AnyExpr::of(e.ty->tm), ctx};
          return bad();
        default: return bad();
      }
    default:
      switch (e.tm->kind) {
        case TmNode::SubTm:
          if (i == 0) return {AnyExpr::of(e.tm->t1), sub_tgt(e.tm->sub)};
          if (i == 1) return {AnyExpr::of(e.tm->sub), mk_empty()};
          return bad();
        case TmNode::Q:
          if (i == 0) return {AnyExpr::of(e.tm->con), mk_empty()};
          if (i == 1) return {AnyExpr::of(e.tm->a), e.tm->con};
          return bad();
        case TmNode::BoolRec:
          if (i == 0) return {AnyExpr::of(e.tm->a), mk_ext(ctx, mk_bool())};
          if (i == 1) return {AnyExpr::of(e.tm->t1), ctx};
          if (i == 2) return {AnyExpr::of(e.tm->t2), ctx};
          if (i == 3) return {AnyExpr::of(e.tm->t3), ctx};
          return bad();
        case TmNode::Lam:
          if (i == 0) return {AnyExpr::of(e.tm->a), ctx};
          if (i == 1) return {AnyExpr::of(e.tm->b), mk_ext(ctx, e.tm->a)};
          if (i == 2) return {AnyExpr::of(e.tm->t1), mk_ext(ctx, e.tm->a)};
          return bad();
        case TmNode::App:
        case TmNode::PairTm:
          if (i == 0) return {AnyExpr::of(e.tm->a), ctx};
          if (i == 1) return {AnyExpr::of(e.tm->b), mk_ext(ctx, e.tm->a)};
          if (i == 2) return {AnyExpr::of(e.tm->t1), ctx};
          if (i == 3) return {AnyExpr::of(e.tm->t2), ctx};
          return bad();
        case TmNode::Fst:
        case TmNode::Snd:
          if (i == 0) return {AnyExpr::of(e.tm->a), ctx};
          if (i == 1) return {AnyExpr::of(e.tm->b), mk_ext(ctx, e.tm->a)};
          if (i == 2) return {AnyExpr::of(e.tm->t1), ctx};
          return bad();
        default: return bad();
      }
  }
}

inline AnyExpr with_child(const AnyExpr& e, int i, const AnyExpr& nc) {
  auto as_con = [&] { require(nc.sort == Sort::Con, "rewrite: sort mismatch"); return nc.c; };
  auto as_sub = [&] { require(nc.sort == Sort::Sub, "rewrite: sort mismatch"); return nc.s; };
  auto as_ty = [&] { require(nc.sort == Sort::Ty, "rewrite: sort mismatch"); return nc.ty; };
  auto as_tm = [&] { require(nc.sort == Sort::Tm, "rewrite: sort mismatch"); return nc.tm; };
  switch (e.sort) {
    case Sort::Con:
      return AnyExpr::of(i == 0 ? mk_ext(as_con(), e.c->ty) : mk_ext(e.c->parent, as_ty()));
    case Sort::Sub:
      switch (e.s->kind) {
        case SubNode::Id: return AnyExpr::of(mk_id(as_con()));
        case SubNode::Eps: return AnyExpr::of(mk_eps(as_con()));
        case SubNode::Comp:
          return AnyExpr::of(i == 0 ? mk_comp(as_sub(), e.s->s2) : mk_comp(e.s->s1, as_sub()));
        case SubNode::P:
          return AnyExpr::of(i == 0 ? mk_p(as_con(), e.s->ty) : mk_p(e.s->con, as_ty()));
        default:
          if (i == 0) return AnyExpr::of(mk_pair(as_sub(), e.s->ty, e.s->tm));
          if (i == 1) return AnyExpr::of(mk_pair(e.s->s1, as_ty(), e.s->tm));
          return AnyExpr::of(mk_pair(e.s->s1, e.s->ty, as_tm()));
      }
    case Sort::Ty:
      switch (e.ty->kind) {
        case TyNode::SubT:
          return AnyExpr::of(i == 0 ? mk_subT(as_ty(), e.ty->sub) : mk_subT(e.ty->a, as_sub()));
        case TyNode::Pi:
          return AnyExpr::of(i == 0 ? mk_pi(as_ty(), e.ty->b) : mk_pi(e.ty->a, as_ty()));
        case TyNode::Sigma:
          return AnyExpr::of(i == 0 ? mk_sigma(as_ty(), e.ty->b) : mk_sigma(e.ty->a, as_ty()));
        default: return AnyExpr::of(mk_el(as_tm()));
      }
    default: {
      TmNode n = *e.tm;
      switch (e.tm->kind) {
        case TmNode::SubTm:
          if (i == 0) n.t1 = as_tm();
          else n.sub = as_sub();
          break;
        case TmNode::Q:
          if (i == 0) n.con = as_con();
          else n.a = as_ty();
          break;
        case TmNode::BoolRec:
          if (i == 0) n.a = as_ty();
          else if (i == 1) n.t1 = as_tm();
          else if (i == 2) n.t2 = as_tm();
          else n.t3 = as_tm();
          break;
        case TmNode::Lam:
          if (i == 0) n.a = as_ty();
          else if (i == 1) n.b = as_ty();
          else n.t1 = as_tm();
          break;
        case TmNode::App:
        case TmNode::PairTm:
          if (i == 0) n.a = as_ty();
          else if (i == 1) n.b = as_ty();
          else if (i == 2) n.t1 = as_tm();
          else n.t2 = as_tm();
          break;
        case TmNode::Fst:
        case TmNode::Snd:
          if (i == 0) n.a = as_ty();
          else if (i == 1) n.b = as_ty();
          else n.t1 = as_tm();
          break;
        default: throw error("rewrite: leaf has no children");
      }
      return AnyExpr::of(mk_tm(std::move(n)));
    }
  }
}

}  // namespace rw

/// One rewrite step at `path` (child indices from the root). `ctx` is the
/// ambient context of the root, used when the root is a type or term.
/// Throws when the pattern does not match or the direction is unsupported.
inline AnyExpr rewrite_step(const Con& ctx, const AnyExpr& root, const std::string& equation_id,
                            const std::vector<int>& path, Dir dir) {
  const RewriteRule& rule = rw::rule_by_id(equation_id);
  std::function<AnyExpr(const AnyExpr&, const Con&, size_t)> go =
      [&](const AnyExpr& e, const Con& c, size_t at) -> AnyExpr {
    if (at == path.size()) {
      const auto& fn = dir == Dir::L2R ? rule.l2r : rule.r2l;
      require(fn != nullptr, "rewrite: direction not supported for " + equation_id);
      auto res = fn(e, c);
      require(res.has_value(), "rewrite: pattern " + equation_id + " does not match at position");
      return *res;
    }
    rw::Child ch = rw::child_at(e, c, path[at]);
    AnyExpr sub = go(ch.expr, ch.ctx, at + 1);
    return rw::with_child(e, path[at], sub);
  };
  return go(root, ctx, 0);
}

struct ApplicableRewrite {
  std::string id;
  std::vector<int> path;
  Dir dir;
};

/// All (equation, position, direction) triples whose pattern matches
/// somewhere in the expression. Deterministic order: DFS position order,
/// then rule order, then L2R before R2L.
inline std::vector<ApplicableRewrite> applicable_rewrites(const Con& ctx, const AnyExpr& root) {
  std::vector<ApplicableRewrite> out;
  std::vector<int> path;
  std::function<void(const AnyExpr&, const Con&)> visit = [&](const AnyExpr& e, const Con& c) {
    for (const auto& rule : rw::rules()) {
      if (rule.l2r && rule.l2r(e, c)) out.push_back({rule.id, path, Dir::L2R});
      if (rule.r2l && rule.r2l(e, c)) out.push_back({rule.id, path, Dir::R2L});
    }
    for (int i = 0; i < rw::child_count(e); ++i) {
      rw::Child ch = rw::child_at(e, c, i);
      path.push_back(i);
      visit(ch.expr, ch.ctx);
      path.pop_back();
    }
  };
  visit(root, ctx);
  return out;
}

}  // namespace scwf
