#pragma once

// Abstract model interface for the CwF calculus and the equation harness.
//
// A model supplies the four carriers, the ten operations and per-carrier
// decidable equality; the harness checks the twelve equation schemas
// extensionally on sampled data and representability (unique pairing) where
// the model can decide it. Instances: the syntactic model (carriers are
// expressions, equality is conversion), the finite standard model (carriers
// are finite types and tables), slices of either, and a deliberately
// faulted standard model for harness self-tests.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scwf/generate.hpp"
#include "scwf/kernel.hpp"
#include "scwf/models.hpp"
#include "scwf/rewrite.hpp"
#include "scwf/syntax.hpp"

namespace scwf {

template <class M>
concept CwfModel = requires(M m, typename M::ConT g, typename M::SubT s, typename M::TyT a,
                            typename M::TmT t) {
  { m.empty() } -> std::convertible_to<typename M::ConT>;
  { m.id(g) } -> std::convertible_to<typename M::SubT>;
  { m.comp(s, s) } -> std::convertible_to<typename M::SubT>;
  { m.eps(g) } -> std::convertible_to<typename M::SubT>;
  { m.subst_ty(a, s) } -> std::convertible_to<typename M::TyT>;
  { m.subst_tm(t, s) } -> std::convertible_to<typename M::TmT>;
  { m.ext(g, a) } -> std::convertible_to<typename M::ConT>;
  { m.p(g, a) } -> std::convertible_to<typename M::SubT>;
  { m.q(g, a) } -> std::convertible_to<typename M::TmT>;
  { m.pair(s, a, t) } -> std::convertible_to<typename M::SubT>;
  { m.eq_sub(g, g, s, s) } -> std::convertible_to<bool>;
  { m.eq_ty(g, a, a) } -> std::convertible_to<bool>;
  { m.eq_tm(g, t, t) } -> std::convertible_to<bool>;
};

struct HarnessEntry {
  std::string schema;
  int checked = 0;
  int failed = 0;
  std::string counterexample;  // first failure, printed by the model
};

struct HarnessReport {
  std::vector<HarnessEntry> entries;
  bool pass() const {
    for (const auto& e : entries)
      if (e.failed) return false;
    return true;
  }
};

/// Runs every equation schema `budget` times against sampled data, plus the
/// representability check where the model supports it.
template <class M, class S>
HarnessReport law_harness(M& model, S& sampler, int budget) {
  HarnessReport rep;
  auto run = [&](const std::string& name, auto&& one) {
    HarnessEntry e;
    e.schema = name;
    for (int i = 0; i < budget; ++i) {
      ++e.checked;
      std::string why;
      if (!one(why)) {
        if (!e.failed) e.counterexample = why;
        ++e.failed;
      }
    }
    rep.entries.push_back(std::move(e));
  };

  using ConT = typename M::ConT;
  using SubT = typename M::SubT;
  using TyT = typename M::TyT;
  using TmT = typename M::TmT;

  run("assoc", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(3);
    SubT lhs = model.comp(model.comp(fs[2], fs[1]), fs[0]);
    SubT rhs = model.comp(fs[2], model.comp(fs[1], fs[0]));
    bool ok = model.eq_sub(cs[0], cs[3], lhs, rhs);
    if (!ok) why = model.show_sub(lhs) + " != " + model.show_sub(rhs);
    return ok;
  });
  run("idl", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(1);
    SubT lhs = model.comp(model.id(cs[1]), fs[0]);
    bool ok = model.eq_sub(cs[0], cs[1], lhs, fs[0]);
    if (!ok) why = model.show_sub(lhs) + " != " + model.show_sub(fs[0]);
    return ok;
  });
  run("idr", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(1);
    SubT lhs = model.comp(fs[0], model.id(cs[0]));
    bool ok = model.eq_sub(cs[0], cs[1], lhs, fs[0]);
    if (!ok) why = model.show_sub(lhs) + " != " + model.show_sub(fs[0]);
    return ok;
  });
  run("eps-eta", [&](std::string& why) {
    ConT g = sampler.con();
    SubT f = sampler.to_empty(g);
    bool ok = model.eq_sub(g, model.empty(), f, model.eps(g));
    if (!ok) why = model.show_sub(f) + " != eps";
    return ok;
  });
  run("sub-id-ty", [&](std::string& why) {
    ConT g = sampler.con();
    TyT a = sampler.ty(g);
    bool ok = model.eq_ty(g, model.subst_ty(a, model.id(g)), a);
    if (!ok) why = model.show_ty(a);
    return ok;
  });
  run("sub-comp-ty", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(2);
    TyT a = sampler.ty(cs[2]);
    TyT lhs = model.subst_ty(a, model.comp(fs[1], fs[0]));
    TyT rhs = model.subst_ty(model.subst_ty(a, fs[1]), fs[0]);
    bool ok = model.eq_ty(cs[0], lhs, rhs);
    if (!ok) why = model.show_ty(lhs) + " != " + model.show_ty(rhs);
    return ok;
  });
  run("sub-id-tm", [&](std::string& why) {
    ConT g = sampler.con();
    TyT a = sampler.ty(g);
    TmT t = sampler.tm(g, a);
    bool ok = model.eq_tm(g, model.subst_tm(t, model.id(g)), t);
    if (!ok) why = model.show_tm(t);
    return ok;
  });
  run("sub-comp-tm", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(2);
    TyT a = sampler.ty(cs[2]);
    TmT t = sampler.tm(cs[2], a);
    TmT lhs = model.subst_tm(t, model.comp(fs[1], fs[0]));
    TmT rhs = model.subst_tm(model.subst_tm(t, fs[1]), fs[0]);
    bool ok = model.eq_tm(cs[0], lhs, rhs);
    if (!ok) why = model.show_tm(lhs) + " != " + model.show_tm(rhs);
    return ok;
  });
  run("ext-beta1", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(1);
    TyT a = sampler.ty(cs[1]);
    TmT t = sampler.tm(cs[0], model.subst_ty(a, fs[0]));
    SubT gamma = model.pair(fs[0], a, t);
    SubT lhs = model.comp(model.p(cs[1], a), gamma);
    bool ok = model.eq_sub(cs[0], cs[1], lhs, fs[0]);
    if (!ok) why = model.show_sub(lhs) + " != " + model.show_sub(fs[0]);
    return ok;
  });
  run("ext-beta2", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(1);
    TyT a = sampler.ty(cs[1]);
    TmT t = sampler.tm(cs[0], model.subst_ty(a, fs[0]));
    SubT gamma = model.pair(fs[0], a, t);
    TmT lhs = model.subst_tm(model.q(cs[1], a), gamma);
    bool ok = model.eq_tm(cs[0], lhs, t);
    if (!ok) why = model.show_tm(lhs) + " != " + model.show_tm(t);
    return ok;
  });
  run("ext-eta", [&](std::string& why) {
    ConT g = sampler.con();
    TyT a = sampler.ty(g);
    ConT ge = model.ext(g, a);
    SubT lhs = model.pair(model.p(g, a), a, model.q(g, a));
    bool ok = model.eq_sub(ge, ge, lhs, model.id(ge));
    if (!ok) why = model.show_sub(lhs) + " != id";
    return ok;
  });
  run("pair-comp", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(2);
    TyT a = sampler.ty(cs[2]);
    TmT t = sampler.tm(cs[1], model.subst_ty(a, fs[1]));
    SubT lhs = model.comp(model.pair(fs[1], a, t), fs[0]);
    SubT rhs = model.pair(model.comp(fs[1], fs[0]), a, model.subst_tm(t, fs[0]));
    bool ok = model.eq_sub(cs[0], model.ext(cs[2], a), lhs, rhs);
    if (!ok) why = model.show_sub(lhs) + " != " + model.show_sub(rhs);
    return ok;
  });
  run("representability", [&](std::string& why) {
    auto [cs, fs] = sampler.chain(1);
    TyT a = sampler.ty(cs[1]);
    TmT t = sampler.tm(cs[0], model.subst_ty(a, fs[0]));
    std::optional<bool> verdict = model.representability(cs[0], cs[1], a, fs[0], t);
    if (!verdict.has_value()) return true;  // not decidable for this model
    if (!*verdict) why = "pairing is not the unique mediating substitution";
    return *verdict;
  });

  return rep;
}

// --- the syntactic model ------------------------------------------------------

struct SyntacticModel {
  using ConT = Con;
  using SubT = Sub;
  using TyT = Ty;
  using TmT = Tm;

  ConT empty() { return mk_empty(); }
  SubT id(const ConT& g) { return mk_id(g); }
  SubT comp(const SubT& s, const SubT& d) { return mk_comp(s, d); }
  SubT eps(const ConT& g) { return mk_eps(g); }
  TyT subst_ty(const TyT& a, const SubT& s) { return mk_subT(a, s); }
  TmT subst_tm(const TmT& t, const SubT& s) { return mk_subt(t, s); }
  ConT ext(const ConT& g, const TyT& a) { return mk_ext(g, a); }
  SubT p(const ConT& g, const TyT& a) { return mk_p(g, a); }
  TmT q(const ConT& g, const TyT& a) { return mk_q(g, a); }
  SubT pair(const SubT& s, const TyT& a, const TmT& t) { return mk_pair(s, a, t); }

  bool eq_sub(const ConT&, const ConT&, const SubT& x, const SubT& y) {
    return convertible_sub(x, y);
  }
  bool eq_ty(const ConT& g, const TyT& x, const TyT& y) { return convertible_ty(g, x, y); }
  bool eq_tm(const ConT& g, const TmT& x, const TmT& y) { return convertible_tm(g, x, y); }

  std::string show_sub(const SubT& s) { return print_sub(s); }
  std::string show_ty(const TyT& t) { return print_ty(t); }
  std::string show_tm(const TmT& t) { return print_tm(t); }

  // Sub carriers are infinite; uniqueness of the mediating substitution is
  // checked on rewrite-reachable competitors of (sigma, t), following the
  // derivation that any gamma' with the projection equations must equal
  // gamma' . (p, q) = (p . gamma', q[gamma']) = (sigma, t).
  std::uint64_t repr_seed = 1;
  std::optional<bool> representability(const ConT& g, const ConT& d, const TyT& a,
                                       const SubT& sigma, const TmT& t) {
    Sub gamma = mk_pair(sigma, a, t);
    ExprGen gen(repr_seed++);
    for (int chain = 0; chain < 3; ++chain) {
      AnyExpr cur = AnyExpr::of(gamma);
      for (int step = 0; step < 4; ++step) {
        auto apps = applicable_rewrites(mk_empty(), cur);
        if (apps.empty()) break;
        const auto& pickd = apps[gen.pick((int)apps.size())];
        cur = rewrite_step(mk_empty(), cur, pickd.id, pickd.path, pickd.dir);
      }
      // the competitor satisfies the projection equations ...
      if (!convertible_sub(mk_comp(mk_p(d, a), cur.s), sigma)) return false;
      if (!convertible_tm(g, mk_subt(mk_q(d, a), cur.s), t)) return false;
      // ... and the eta/composition chain collapses it onto (sigma, t)
      Sub recomposed = mk_pair(mk_comp(mk_p(d, a), cur.s), a, mk_subt(mk_q(d, a), cur.s));
      if (!convertible_sub(recomposed, gamma)) return false;
      if (!convertible_sub(cur.s, gamma)) return false;
    }
    return true;
  }
};

/// Samples expressions for the syntactic model.
class SyntacticSampler {
 public:
  explicit SyntacticSampler(std::uint64_t seed, int size = 5) : gen_(seed), size_(size) {}

  Con con() { return gen_.gen_con(size_); }
  Ty ty(const Con& g) { return gen_.gen_ty(g, size_); }
  Tm tm(const Con& g, const Ty& a) { return gen_.gen_tm(g, a, size_); }
  Sub sub(const Con& src, const Con& tgt) { return gen_.gen_sub(src, tgt, size_); }
  Sub to_empty(const Con& g) { return gen_.gen_sub(g, mk_empty(), size_); }

  std::pair<std::vector<Con>, std::vector<Sub>> chain(int k) {
    std::vector<Con> cs;
    for (int i = 0; i <= k; ++i) cs.push_back(con());
    std::vector<Sub> fs;
    for (int i = 0; i < k; ++i) fs.push_back(sub(cs[i], cs[i + 1]));
    return {cs, fs};
  }

 private:
  ExprGen gen_;
  int size_;
};

// --- the finite standard model -------------------------------------------------

/// Contexts are finite semantic types; substitutions are point-index tables;
/// a type over Gamma is one semantic type per point; a term is one value
/// index per point. Context extension is the dependent pair type, whose
/// canonical enumeration is point-major.
struct FiniteStandardModel {
  using ConT = SemTy;
  using SubT = std::vector<int>;          // point map
  using TyT = std::vector<SemTy>;         // per point
  using TmT = std::vector<int>;           // value index per point

  // pairing fault injected by the faulty variant
  bool forget_term_on_pair = false;

  ConT empty() { return sem_unit(); }
  SubT id(const ConT& g) {
    SubT s((size_t)value_count(g));
    for (size_t i = 0; i < s.size(); ++i) s[i] = (int)i;
    return s;
  }
  SubT comp(const SubT& s, const SubT& d) {
    SubT r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = s[d[i]];
    return r;
  }
  SubT eps(const ConT& g) { return SubT((size_t)value_count(g), 0); }
  TyT subst_ty(const TyT& a, const SubT& s) {
    TyT r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = a[s[i]];
    return r;
  }
  TmT subst_tm(const TmT& t, const SubT& s) {
    TmT r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = t[s[i]];
    return r;
  }
  ConT ext(const ConT& g, const TyT& a) {
    return mk_semty({SemTyNode::Sigma, g, a});
  }
  SubT p(const ConT& g, const TyT& a) {
    SubT r;
    for (size_t j = 0; j < (size_t)value_count(g); ++j)
      for (std::uint64_t v = 0; v < value_count(a[j]); ++v) r.push_back((int)j);
    return r;
  }
  TmT q(const ConT& g, const TyT& a) {
    TmT r;
    for (size_t j = 0; j < (size_t)value_count(g); ++j)
      for (std::uint64_t v = 0; v < value_count(a[j]); ++v) r.push_back((int)v);
    return r;
  }
  SubT pair(const SubT& s, const TyT& a, const TmT& t) {
    // offsets of each fiber in the point-major enumeration of ext
    std::vector<int> offset(a.size() + 1, 0);
    for (size_t j = 0; j < a.size(); ++j) offset[j + 1] = offset[j] + (int)value_count(a[j]);
    SubT r(s.size());
    for (size_t i = 0; i < s.size(); ++i)
      r[i] = offset[s[i]] + (forget_term_on_pair ? 0 : t[i]);
    return r;
  }

  bool eq_sub(const ConT&, const ConT&, const SubT& x, const SubT& y) { return x == y; }
  bool eq_ty(const ConT&, const TyT& x, const TyT& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!sem_equal(x[i], y[i])) return false;
    return true;
  }
  bool eq_tm(const ConT&, const TmT& x, const TmT& y) { return x == y; }

  std::string show_sub(const SubT& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out + "]";
  }
  std::string show_ty(const TyT& t) {
    std::string out = "[";
    for (size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + show_sem_ty(t[i]);
    return out + "]";
  }
  std::string show_tm(const TmT& t) { return show_sub(t); }

  // enumerate all candidate mediating substitutions
  std::optional<bool> representability(const ConT& g, const ConT& d, const TyT& a,
                                       const SubT& sigma, const TmT& t) {
    ConT de = ext(d, a);
    std::uint64_t npoints = value_count(de);
    std::uint64_t src = value_count(g);
    if (src > 6 || npoints > 12) return std::nullopt;  // keep enumeration tiny
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < src; ++i) {
      total *= npoints;
      if (total > 2000000) return std::nullopt;
    }
    SubT pp = p(d, a);
    TmT qq = q(d, a);
    int matches = 0;
    SubT cand(src, 0);
    while (true) {
      if (comp(pp, cand) == sigma && subst_tm(qq, cand) == t) ++matches;
      size_t at = src;
      while (at > 0 && (std::uint64_t)++cand[at - 1] == npoints) cand[--at] = 0;
      if (at == 0) break;
    }
    return matches == 1;
  }
};

/// Samples small finite types and random tables.
class FiniteSampler {
 public:
  explicit FiniteSampler(std::uint64_t seed) : rng_(seed) {}

  SemTy con() { return random_semty(2); }
  std::vector<SemTy> ty(const SemTy& g) {
    std::vector<SemTy> out;
    for (std::uint64_t i = 0; i < value_count(g); ++i) out.push_back(random_semty(1));
    return out;
  }
  std::vector<int> tm(const SemTy& g, const std::vector<SemTy>& a) {
    std::vector<int> out;
    for (std::uint64_t i = 0; i < value_count(g); ++i)
      out.push_back(pick((int)value_count(a[i])));
    return out;
  }
  std::vector<int> sub(const SemTy& src, const SemTy& tgt) {
    std::vector<int> out;
    for (std::uint64_t i = 0; i < value_count(src); ++i)
      out.push_back(pick((int)value_count(tgt)));
    return out;
  }
  std::vector<int> to_empty(const SemTy& g) {
    return std::vector<int>((size_t)value_count(g), 0);
  }
  std::pair<std::vector<SemTy>, std::vector<std::vector<int>>> chain(int k) {
    std::vector<SemTy> cs;
    for (int i = 0; i <= k; ++i) cs.push_back(con());
    std::vector<std::vector<int>> fs;
    for (int i = 0; i < k; ++i) fs.push_back(sub(cs[i], cs[i + 1]));
    return {cs, fs};
  }

 private:
  int pick(int n) { return n <= 1 ? 0 : (int)(rng_() % (std::uint64_t)n); }

  SemTy random_semty(int depth) {
    int r = pick(depth > 0 ? 6 : 3);
    switch (r) {
      case 0: return sem_unit();
      case 1: return sem_bool();
      case 2: return sem_univ();
      case 3:
      case 4: {
        SemTy dom = random_semty(0);
        std::vector<SemTy> cod;
        for (std::uint64_t i = 0; i < value_count(dom); ++i) cod.push_back(random_semty(0));
        SemTy out = mk_semty({r == 3 ? SemTyNode::Pi : SemTyNode::Sigma, dom, std::move(cod)});
        return value_count(out) <= 8 ? out : sem_bool();
      }
      default: return sem_bool();
    }
  }

  std::mt19937_64 rng_;
};

// --- slicing -------------------------------------------------------------------

/// The slice of a model over a fixed context: contexts become pairs
/// (Delta, delta : Sub Delta Gamma0); all other components are inherited.
template <CwfModel M>
struct SliceModel {
  M& base;
  typename M::ConT gamma0;

  using ConT = std::pair<typename M::ConT, typename M::SubT>;
  using SubT = typename M::SubT;
  using TyT = typename M::TyT;
  using TmT = typename M::TmT;

  ConT empty() { return {gamma0, base.id(gamma0)}; }
  SubT id(const ConT& g) { return base.id(g.first); }
  SubT comp(const SubT& s, const SubT& d) { return base.comp(s, d); }
  SubT eps(const ConT& g) { return g.second; }
  TyT subst_ty(const TyT& a, const SubT& s) { return base.subst_ty(a, s); }
  TmT subst_tm(const TmT& t, const SubT& s) { return base.subst_tm(t, s); }
  ConT ext(const ConT& g, const TyT& a) {
    return {base.ext(g.first, a), base.comp(g.second, base.p(g.first, a))};
  }
  SubT p(const ConT& g, const TyT& a) { return base.p(g.first, a); }
  TmT q(const ConT& g, const TyT& a) { return base.q(g.first, a); }
  SubT pair(const SubT& s, const TyT& a, const TmT& t) { return base.pair(s, a, t); }

  bool eq_sub(const ConT& g, const ConT& d, const SubT& x, const SubT& y) {
    return base.eq_sub(g.first, d.first, x, y);
  }
  bool eq_ty(const ConT& g, const TyT& x, const TyT& y) { return base.eq_ty(g.first, x, y); }
  bool eq_tm(const ConT& g, const TmT& x, const TmT& y) { return base.eq_tm(g.first, x, y); }

  std::string show_sub(const SubT& s) { return base.show_sub(s); }
  std::string show_ty(const TyT& t) { return base.show_ty(t); }
  std::string show_tm(const TmT& t) { return base.show_tm(t); }

  std::optional<bool> representability(const ConT& g, const ConT& d, const TyT& a,
                                       const SubT& sigma, const TmT& t) {
    return base.representability(g.first, d.first, a, sigma, t);
  }
};

/// Adapts a base sampler to the slice: slice objects attach a sampled
/// morphism into gamma0; chains propagate the attachments backwards so the
/// triangle conditions hold by construction.
template <CwfModel M, class S>
class SliceSampler {
 public:
  SliceSampler(M& base, S& sampler, typename M::ConT gamma0)
      : base_(base), sampler_(sampler), gamma0_(std::move(gamma0)) {}

  using ConT = typename SliceModel<M>::ConT;

  ConT con() {
    auto d = sampler_.con();
    return {d, sampler_.sub(d, gamma0_)};
  }
  typename M::TyT ty(const ConT& g) { return sampler_.ty(g.first); }
  typename M::TmT tm(const ConT& g, const typename M::TyT& a) { return sampler_.tm(g.first, a); }
  typename M::SubT sub(const ConT& src, const ConT& tgt) {
    // Solvable canonically when the target carries an identity attachment
    // (the slice's empty()): the attachment of the source is the morphism.
    // That is the only shape a nested slice sampler ever requests.
    (void)tgt;
    return src.second;
  }
  typename M::SubT to_empty(const ConT& g) {
    // a nontrivial representative of the unique morphism to (gamma0, id)
    return base_.comp(base_.id(gamma0_), g.second);
  }
  std::pair<std::vector<ConT>, std::vector<typename M::SubT>> chain(int k) {
    auto [cs, fs] = sampler_.chain(k);
    std::vector<typename M::SubT> attach(cs.size());
    attach[k] = sampler_.sub(cs[k], gamma0_);
    for (int i = k - 1; i >= 0; --i) attach[i] = base_.comp(attach[i + 1], fs[i]);
    std::vector<ConT> out;
    for (int i = 0; i <= k; ++i) out.push_back({cs[i], attach[i]});
    return {out, fs};
  }

 private:
  M& base_;
  S& sampler_;
  typename M::ConT gamma0_;
};

}  // namespace scwf
