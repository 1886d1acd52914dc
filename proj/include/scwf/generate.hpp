#pragma once

// Deterministic generation of well-formed expressions, weighted to exercise
// the substitution constructors. Drives the law harness, the rewrite-oracle
// tests, and the soundness-bridge sampling.

#include <cstdint>
#include <random>
#include <vector>

#include "scwf/kernel.hpp"
#include "scwf/syntax.hpp"

namespace scwf {

class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  int pick(int n) { return (int)(rng_() % (std::uint64_t)n); }
  bool chance(int percent) { return pick(100) < percent; }

  Con gen_con(int budget) {
    if (budget <= 0 || chance(35)) return mk_empty();
    Con base = gen_con(budget / 2);
    if (con_len(base) >= 3) return base;
    return mk_ext(base, gen_ty(base, budget / 2));
  }

  // Only inhabitable types: el appears with literal codes.
  Ty gen_ty(const Con& g, int budget) {
    if (budget <= 0) return mk_unit();
    switch (pick(10)) {
      case 0: return mk_unit();
      case 1:
      case 2: return mk_bool();
      case 3: return mk_univ();
      case 4: return chance(50) ? mk_el(mk_unit_code()) : mk_el(mk_bool_code());
      case 5:
      case 6: {
        Ty a = gen_ty(g, budget / 2);
        Ty b = gen_ty(mk_ext(g, a), budget / 2);
        return pick(2) ? mk_pi(a, b) : mk_sigma(a, b);
      }
      default: {
        // substitution-wrapped type
        Con delta = gen_con(budget / 3);
        Sub s = gen_sub(g, delta, budget / 3);
        return mk_subT(gen_ty(delta, budget / 3), s);
      }
    }
  }

  Tm gen_tm(const Con& g, const Ty& a, int budget) {
    NfTy nf = normalize_ty(g, a);

    // use a variable of the right type when available
    if (budget > 0 && chance(35)) {
      std::vector<int> candidates = vars_of(g, nf);
      if (!candidates.empty()) return var_expr(g, candidates[pick((int)candidates.size())]);
    }

    if (budget > 1) {
      switch (pick(8)) {
        case 0:  // explicit identity substitution
          return mk_subt(gen_tm(g, a, budget - 2), mk_id(g));
        case 1: {  // (p, q) identity wrap
          if (g->kind != ConNode::Ext) break;
          Sub s = mk_pair(mk_p(g->parent, g->ty), g->ty, mk_q(g->parent, g->ty));
          return mk_subt(gen_tm(g, a, budget - 2), s);
        }
        case 2: {  // beta redex targeting a
          Ty c = gen_ty(g, budget / 3);
          Ty aw = mk_subT(a, mk_p(g, c));
          Tm u = gen_tm(g, c, budget / 3);
          Tm body = gen_tm(mk_ext(g, c), aw, budget / 3);
          return mk_app(c, aw, mk_lam(c, aw, body), u);
        }
        case 3: {  // boolrec with a constant motive
          Ty motive = mk_subT(a, mk_p(g, mk_bool()));
          Tm b = gen_tm(g, mk_bool(), budget / 3);
          Tm on_true = gen_tm(g, a, budget / 3);
          Tm on_false = gen_tm(g, a, budget / 3);
          return mk_boolrec(motive, on_true, on_false, b);
        }
        default: break;
      }
    }

    return canonical_tm(g, nf, budget);
  }

  Sub gen_sub(const Con& src, const Con& tgt, int budget) {
    if (budget > 1) {
      switch (pick(8)) {
        case 0:  // wrap with a left identity
          return mk_comp(mk_id(tgt), gen_sub(src, tgt, budget - 2));
        case 1:  // wrap with a right identity
          return mk_comp(gen_sub(src, tgt, budget - 2), mk_id(src));
        case 2: {  // compose through a random middle context
          Con mid = gen_con(budget / 3);
          return mk_comp(gen_sub(mid, tgt, budget / 3), gen_sub(src, mid, budget / 3));
        }
        default: break;
      }
    }
    if (syn_equal(src, tgt) && chance(40)) return mk_id(src);
    if (src->kind == ConNode::Ext && syn_equal(src->parent, tgt) && chance(50))
      return mk_p(src->parent, src->ty);
    if (tgt->kind == ConNode::Empty) return mk_eps(src);
    Sub prefix = gen_sub(src, tgt->parent, budget - 1);
    Tm entry = gen_tm(src, mk_subT(tgt->ty, prefix), budget - 1);
    return mk_pair(prefix, tgt->ty, entry);
  }

  AnyExpr gen_any(Sort sort, const Con& ctx, int budget) {
    switch (sort) {
      case Sort::Con: return AnyExpr::of(gen_con(budget));
      case Sort::Ty: return AnyExpr::of(gen_ty(ctx, budget));
      case Sort::Tm: return AnyExpr::of(gen_tm(ctx, gen_ty(ctx, budget / 2), budget));
      default: {
        Con tgt = gen_con(budget / 2);
        return AnyExpr::of(gen_sub(ctx, tgt, budget));
      }
    }
  }

 private:
  std::vector<int> vars_of(const Con& g, const NfTy& want) {
    std::vector<int> out;
    GenericCtx gc = generic_ctx(g);
    int n = gc.qctx.size();
    for (int lvl = 0; lvl < n; ++lvl) {
      if (nf_equal(quote_ty(gc.qctx, gc.qctx.var_tys[lvl]), want))
        out.push_back(n - 1 - lvl);  // de Bruijn index
    }
    return out;
  }

  // a canonical inhabitant, by the shape of the normal type
  Tm canonical_tm(const Con& g, const NfTy& nf, int budget) {
    switch (nf->kind) {
      case NfTyNode::Unit: return mk_tt();
      case NfTyNode::Bool: return pick(2) ? mk_true() : mk_false();
      case NfTyNode::Univ: return pick(2) ? mk_unit_code() : mk_bool_code();
      case NfTyNode::Pi: {
        Ty a = nf_to_ty(g, nf->a);
        Ty b = nf_to_ty(mk_ext(g, a), nf->b);
        return mk_lam(a, b, gen_tm(mk_ext(g, a), b, budget - 1));
      }
      case NfTyNode::Sigma: {
        Ty a = nf_to_ty(g, nf->a);
        Ty b = nf_to_ty(mk_ext(g, a), nf->b);
        Tm fst = gen_tm(g, a, budget - 1);
        Tm snd = gen_tm(g, mk_subT(b, mk_pair(mk_id(g), a, fst)), budget - 1);
        return mk_mkpair(a, b, fst, snd);
      }
      default: {
        // neutral el types are never produced by gen_ty; a variable is the
        // only possible inhabitant
        std::vector<int> candidates = vars_of(g, nf);
        require(!candidates.empty(), "gen_tm: uninhabitable neutral type");
        return var_expr(g, candidates[pick((int)candidates.size())]);
      }
    }
  }

  std::mt19937_64 rng_;
};

/// Deterministic-in-seed well-formed expression of the requested sort; the
/// context parameter matters for types and terms.
inline AnyExpr random_wellformed(std::uint64_t seed, int size_budget, Sort sort, const Con& ctx) {
  require(size_budget >= 1, "random_wellformed: budget must be >= 1");
  ExprGen gen(seed);
  return gen.gen_any(sort, ctx, size_budget);
}

}  // namespace scwf
