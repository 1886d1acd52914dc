#include <catch2/catch_amalgamated.hpp>

#include "scwf/generate.hpp"
#include "scwf/harness.hpp"
#include "scwf/models.hpp"

using namespace scwf;

static Con ctx_bool() { return mk_ext(mk_empty(), mk_bool()); }

TEST_CASE("environment enumeration sizes") {
  REQUIRE(eval_con(mk_empty()).size() == 1);
  REQUIRE(eval_con(ctx_bool()).size() == 2);

  // empty |> bool |> (bool -> bool): 2 * 4 environments
  Con g = mk_ext(ctx_bool(), mk_pi(mk_bool(), mk_bool()));
  REQUIRE(eval_con(g).size() == 8);

  // sigma-size law: |ext(G, A)| is the sum over environments of |A|
  ExprGen gen(5);
  for (int i = 0; i < 30; ++i) {
    Con base = gen.gen_con(5);
    Ty a = gen.gen_ty(base, 5);
    size_t total = 0;
    for (const auto& env : eval_con(base))
      total += enumerate_values(sem_eval_ty(a, env)).size();
    REQUIRE(eval_con(mk_ext(base, a)).size() == total);
  }
}

TEST_CASE("evaluation computes projections and pairing") {
  // q reads the last entry
  Con g = ctx_bool();
  for (const auto& env : eval_con(g))
    REQUIRE(sem_equal(sem_eval_tm(mk_q(mk_empty(), mk_bool()), env), env.back()));

  // (eps, true) builds the one-entry environment
  SemEnv empty_env;
  SemEnv out = sem_eval_sub(mk_pair(mk_eps(mk_empty()), mk_bool(), mk_true()), empty_env);
  REQUIRE(out.size() == 1);
  REQUIRE(out[0]->kind == SemValNode::TT);

  // boolrec beta
  Ty motive = mk_subT(mk_bool(), mk_p(mk_empty(), mk_bool()));
  Tm r = mk_boolrec(motive, mk_false(), mk_true(), mk_true());
  REQUIRE(sem_eval_tm(r, empty_env)->kind == SemValNode::FF);
}

TEST_CASE("semantic equality validates the laws and separates constants") {
  REQUIRE(!semantic_equal_tm(mk_empty(), mk_true(), mk_false()));

  // identity function vs boolrec returning its scrutinee's branches
  Con g = mk_empty();
  Tm lam_id = mk_lam(mk_bool(), mk_bool(), mk_q(g, mk_bool()));
  Ty motive = mk_subT(mk_bool(), mk_p(ctx_bool(), mk_bool()));
  Tm lam_rec = mk_lam(mk_bool(), mk_bool(),
                      mk_boolrec(motive, mk_true(), mk_false(), mk_q(g, mk_bool())));
  REQUIRE(semantic_equal_tm(g, lam_id, lam_rec));
  REQUIRE(!convertible_tm(g, lam_id, lam_rec));  // not definitionally equal
}

TEST_CASE("soundness bridge: conversion implies semantic equality") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    ExprGen gen(seed * 7);
    Con g = gen.gen_con(5);
    Ty a = gen.gen_ty(g, 5);
    Tm x = gen.gen_tm(g, a, 6);
    Tm y = gen.gen_tm(g, a, 6);
    if (convertible_tm(g, x, y)) REQUIRE(semantic_equal_tm(g, x, y));
    // evaluation respects conversion: a term and its normal form agree
    AnyExpr nx = normalize_any(g, AnyExpr::of(x));
    REQUIRE(semantic_equal_tm(g, x, nx.tm));
  }
}

TEST_CASE("law harness passes on the syntactic model") {
  SyntacticModel m;
  SyntacticSampler s(42);
  auto rep = law_harness(m, s, 60);
  for (const auto& e : rep.entries) {
    INFO(e.schema << ": " << e.counterexample);
    REQUIRE(e.failed == 0);
  }
  REQUIRE(rep.entries.size() == 13);
}

TEST_CASE("law harness passes on the finite standard model") {
  FiniteStandardModel m;
  FiniteSampler s(42);
  auto rep = law_harness(m, s, 200);
  for (const auto& e : rep.entries) {
    INFO(e.schema << ": " << e.counterexample);
    REQUIRE(e.failed == 0);
  }
}

TEST_CASE("harness catches a faulted pairing") {
  FiniteStandardModel m;
  m.forget_term_on_pair = true;
  FiniteSampler s(11);
  auto rep = law_harness(m, s, 150);
  bool beta2_failed = false, idl_ok = true;
  for (const auto& e : rep.entries) {
    if (e.schema == "ext-beta2" && e.failed > 0) {
      beta2_failed = true;
      REQUIRE(!e.counterexample.empty());
    }
    if (e.schema == "idl") idl_ok = e.failed == 0;
  }
  REQUIRE(beta2_failed);
  REQUIRE(idl_ok);
}

TEST_CASE("representability by enumeration in the finite model") {
  FiniteStandardModel m;
  // small hand data: Gamma = bool, Delta = unit, A over unit = bool
  SemTy g = sem_bool();
  SemTy d = sem_unit();
  std::vector<SemTy> a = {sem_bool()};
  std::vector<int> sigma = {0, 0};
  std::vector<int> t = {1, 0};
  auto verdict = m.representability(g, d, a, sigma, t);
  REQUIRE(verdict.has_value());
  REQUIRE(*verdict);
}

TEST_CASE("slice model passes the laws over both bases") {
  {
    SyntacticModel base;
    SyntacticSampler bs(7);
    SliceModel<SyntacticModel> sm{base, ctx_bool()};
    SliceSampler<SyntacticModel, SyntacticSampler> ss(base, bs, ctx_bool());
    auto rep = law_harness(sm, ss, 40);
    for (const auto& e : rep.entries) {
      INFO(e.schema << ": " << e.counterexample);
      REQUIRE(e.failed == 0);
    }
  }
  {
    FiniteStandardModel base;
    FiniteSampler bs(7);
    SliceModel<FiniteStandardModel> sm{base, sem_bool()};
    SliceSampler<FiniteStandardModel, FiniteSampler> ss(base, bs, sem_bool());
    auto rep = law_harness(sm, ss, 150);
    for (const auto& e : rep.entries) {
      INFO(e.schema << ": " << e.counterexample);
      REQUIRE(e.failed == 0);
    }
  }
}

TEST_CASE("slicing twice by terminal-like contexts still passes") {
  FiniteStandardModel base;
  FiniteSampler bs(19);
  SliceModel<FiniteStandardModel> s1{base, sem_unit()};
  SliceSampler<FiniteStandardModel, FiniteSampler> ss1(base, bs, sem_unit());
  auto rep1 = law_harness(s1, ss1, 80);
  REQUIRE(rep1.pass());

  SliceModel<SliceModel<FiniteStandardModel>> s2{s1, s1.empty()};
  SliceSampler<SliceModel<FiniteStandardModel>,
               SliceSampler<FiniteStandardModel, FiniteSampler>>
      ss2(s1, ss1, s1.empty());
  auto rep2 = law_harness(s2, ss2, 60);
  for (const auto& e : rep2.entries) {
    INFO(e.schema << ": " << e.counterexample);
    REQUIRE(e.failed == 0);
  }
}
