// scwf: CwF kernel and finite higher-category verifier.
//
// Subcommands: check, norm, eq, eval, nerve, verify-sset, verify-semicat,
// verify-map, enumerate, slice, harness. Exit codes: 0 all checks passed,
// 1 a verification failed, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scwf/formats.hpp"
#include "scwf/generate.hpp"
#include "scwf/harness.hpp"
#include "scwf/kernel.hpp"
#include "scwf/models.hpp"
#include "scwf/report.hpp"
#include "scwf/rewrite.hpp"
#include "scwf/segal.hpp"
#include "scwf/semicat.hpp"
#include "scwf/surface.hpp"

using namespace scwf;

namespace {

struct CommonOpts {
  int max_level = 3;
  int budget = 1000;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool oracle = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--max-level", o.max_level, "levels for sset checks")->capture_default_str();
  cmd->add_option("--budget", o.budget, "samples per property")->capture_default_str();
  cmd->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--format", o.format, "report format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  cmd->add_flag("--oracle", o.oracle, "enable brute-force cross-checks");
}

int emit(Report& rep, const CommonOpts& o, std::chrono::steady_clock::time_point start) {
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.format == "machine" ? rep.to_machine() : rep.to_text());
  return rep.pass() ? 0 : 1;
}

Con parse_context(const std::string& text) {
  if (text.empty()) return mk_empty();
  AnyExpr e = parse_surface(text);
  require(e.sort == Sort::Con, "--context must be a context expression");
  check_con(e.c);
  return e.c;
}

std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string() : path.substr(0, slash);
}

std::string show_env(const SemEnv& env) {
  std::string s = "(";
  for (size_t i = 0; i < env.size(); ++i) {
    if (i) s += ", ";
    s += show_sem_val(env[i]);
  }
  return s + ")";
}

template <class Fn>
void for_each_item(const CwfFile& file, Fn&& fn) {
  for (const auto& [name, e] : file.defs) fn(name, e);
  int k = 0;
  for (const auto& e : file.exprs) fn("expr" + std::to_string(k++), e);
}

void run_semicat_lemmas(const FinSemicat& c, const std::string& prefix, bool oracle,
                        Report& rep) {
  auto idchar = check_id_characterisation(c);
  rep.add(prefix + "id-characterisation", idchar.pass,
          idchar.pass ? "" : idchar.counterexamples.front().detail);

  auto ids = identity_structure(c);
  rep.add(prefix + "at-most-one-identity", ids.multiple.empty());
  std::string names;
  for (int x = 0; x < (int)c.objects.size(); ++x)
    if (ids.identity[x] >= 0)
      names += (names.empty() ? "" : ", ") + c.objects[x] + ": " + c.mors[ids.identity[x]].name;
  rep.info(prefix + "identity-structure", ids.exists ? "present (" + names + ")" : "absent");

  bool i_of_ok = true;
  std::string why;
  for (int e = 0; e < (int)c.mors.size(); ++e) {
    if (!is_equivalence(c, e)) continue;
    int i;
    try {
      i = I_of(c, e);
    } catch (const error& err) {
      i_of_ok = false;
      why = err.what();
      break;
    }
    auto good = good_identities(c, c.mors[e].src);
    if (good != std::vector<int>{i}) {
      i_of_ok = false;
      why = "I(" + c.mors[e].name + ") is not the unique good identity";
      break;
    }
    if (c.mors[e].src == c.mors[e].dst && (e == i) != (c.comp[e][e] == e)) {
      i_of_ok = false;
      why = "e = I(e) disagrees with idempotency for " + c.mors[e].name;
      break;
    }
  }
  rep.add(prefix + "canonical-identities", i_of_ok, why);

  if (oracle) {
    FinSSet n = nerve(c, 4);
    bool valid = validate(n).ok();
    bool segal = valid && segal_report(n, 4).pass();
    bool roundtrip = true;
    if (segal && !c.mors.empty()) roundtrip = composition_from_segal(n).composite == c.comp;
    rep.add(prefix + "nerve-segal", valid && segal);
    rep.add(prefix + "nerve-roundtrip", roundtrip);
    bool agree = true;
    for (int e = 0; e < (int)c.mors.size() && agree; ++e)
      agree = is_equivalence_edge(n, e) == is_equivalence(c, e);
    rep.add(prefix + "equivalence-agreement", agree);
  }
}

int cmd_check(const std::string& path, const std::string& ctx_text, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  CwfFile file = parse_cwf_file(slurp(path));
  Con ctx = parse_context(ctx_text);
  Report rep;
  rep.command = "check " + path;
  for_each_item(file, [&](const std::string& name, const AnyExpr& e) {
    try {
      std::string extra;
      switch (e.sort) {
        case Sort::Con: check_con(e.c); break;
        case Sort::Sub:
          check_sub(e.s);
          extra = print_con(sub_src(e.s)) + " -> " + print_con(sub_tgt(e.s));
          break;
        case Sort::Ty: check_ty(ctx, e.ty); break;
        default: extra = "type " + print_ty(infer_tm(ctx, e.tm));
      }
      rep.add(name, true, extra);
    } catch (const error& err) {
      rep.add(name, false, err.what());
    }
  });
  return emit(rep, o, start);
}

int cmd_norm(const std::string& path, const std::string& ctx_text, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  CwfFile file = parse_cwf_file(slurp(path));
  Con ctx = parse_context(ctx_text);
  Report rep;
  rep.command = "norm " + path;
  for_each_item(file, [&](const std::string& name, const AnyExpr& e) {
    try {
      rep.info(name, print_any(normalize_any(ctx, e)));
    } catch (const error& err) {
      rep.add(name, false, err.what());
    }
  });
  return emit(rep, o, start);
}

int cmd_eq(const std::string& a_path, const std::string& b_path, const std::string& ctx_text,
           const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  AnyExpr a = parse_cwf_file(slurp(a_path)).subject();
  AnyExpr b = parse_cwf_file(slurp(b_path)).subject();
  Con ctx = parse_context(ctx_text);
  require(a.sort == b.sort, "eq: expressions have different sorts");
  Report rep;
  rep.command = "eq " + a_path + " " + b_path;
  bool equal = false;
  switch (a.sort) {
    case Sort::Con:
      check_con(a.c);
      check_con(b.c);
      equal = convertible_con(a.c, b.c);
      break;
    case Sort::Sub:
      check_sub(a.s);
      check_sub(b.s);
      equal = convertible_sub(a.s, b.s);
      break;
    case Sort::Ty:
      check_ty(ctx, a.ty);
      check_ty(ctx, b.ty);
      equal = convertible_ty(ctx, a.ty, b.ty);
      break;
    default:
      equal = convertible_tm(ctx, a.tm, b.tm);
  }
  rep.add("convertible", equal, equal ? "equal" : "not equal");
  return emit(rep, o, start);
}

int cmd_eval(const std::string& path, const std::string& ctx_text, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  CwfFile file = parse_cwf_file(slurp(path));
  Con ctx = parse_context(ctx_text);
  Report rep;
  rep.command = "eval " + path;
  auto envs = eval_con(ctx);
  for_each_item(file, [&](const std::string& name, const AnyExpr& e) {
    try {
      switch (e.sort) {
        case Sort::Con: {
          check_con(e.c);
          rep.info(name, std::to_string(eval_con(e.c).size()) + " environments");
          break;
        }
        case Sort::Ty: {
          check_ty(ctx, e.ty);
          std::string table;
          for (const auto& env : envs)
            table += show_env(env) + " |-> " + show_sem_ty(sem_eval_ty(e.ty, env)) + "; ";
          rep.info(name, table);
          break;
        }
        case Sort::Tm: {
          infer_tm(ctx, e.tm);
          std::string table;
          for (const auto& env : envs)
            table += show_env(env) + " |-> " + show_sem_val(sem_eval_tm(e.tm, env)) + "; ";
          rep.info(name, table);
          break;
        }
        default: {
          check_sub(e.s);
          require(convertible_con(sub_src(e.s), ctx), "substitution source is not --context");
          std::string table;
          for (const auto& env : envs)
            table += show_env(env) + " |-> " + show_env(sem_eval_sub(e.s, env)) + "; ";
          rep.info(name, table);
        }
      }
    } catch (const error& err) {
      rep.add(name, false, err.what());
    }
  });
  return emit(rep, o, start);
}

int cmd_nerve(const std::string& path, const std::string& out_path, const CommonOpts& o) {
  FinSemicat c = parse_semicat(slurp(path));
  std::string text = write_sset(nerve(c, o.max_level));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    require(out.good(), "cannot write " + out_path);
    out << text;
  }
  return 0;
}

int cmd_verify_sset(const std::string& path, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  FinSSet a = parse_sset(slurp(path));
  Report rep;
  rep.command = "verify-sset " + path;
  auto val = validate(a);
  rep.add("validate", val.ok(), val.ok() ? "" : val.violations.front().detail);
  if (!val.ok()) return emit(rep, o, start);

  int lv = std::min(o.max_level, a.max_level);
  auto seg = segal_report(a, lv);
  std::string detail = std::to_string(seg.instances_checked) + " horn instances";
  if (!seg.pass())
    detail = std::to_string(seg.existence_failures.size()) + " existence / " +
             std::to_string(seg.uniqueness_failures.size()) + " uniqueness failures";
  rep.add("segal", seg.pass(), detail);
  if (seg.pass() && a.max_level >= 2) {
    auto ids = identity_structure(a);
    rep.add("at-most-one-identity", ids.multiple.empty());
    std::string names;
    for (int v = 0; v < a.cell_count(0); ++v)
      if (ids.identity[v] >= 0)
        names += (names.empty() ? "" : ", ") + a.names[0][v] + ": " + a.names[1][ids.identity[v]];
    rep.info("identity-structure", ids.exists ? "present (" + names + ")" : "absent");
    if (ids.exists) {
      auto univ = univalence_check(a);
      rep.info("univalence", univ.pass ? "holds"
                                       : "fails (" + std::to_string(univ.offences.size()) +
                                             " offending vertex pairs)");
    }
  }
  return emit(rep, o, start);
}

int cmd_verify_semicat(const std::string& path, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "verify-semicat " + path;
  FinSemicat c;
  try {
    c = parse_semicat(slurp(path));
  } catch (const error& err) {
    rep.add("validate", false, err.what());
    return emit(rep, o, start);
  }
  rep.add("validate", true,
          std::to_string(c.objects.size()) + " objects, " + std::to_string(c.mors.size()) +
              " morphisms");
  run_semicat_lemmas(c, "", true, rep);
  auto ids = identity_structure(c);
  if (ids.exists) {
    auto univ = univalence_check(nerve(c, 3));
    rep.info("univalence", univ.pass ? "holds"
                                     : "fails (" + std::to_string(univ.offences.size()) +
                                           " offending vertex pairs)");
  }
  return emit(rep, o, start);
}

int cmd_verify_map(const std::string& path, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "verify-map " + path;
  FunctorFile f = parse_functor(slurp(path), dir_of(path));
  auto res = category_of_elements(f.functor, o.max_level);
  auto vm = validate_map(res.projection);
  rep.add("projection-valid", vm.ok());
  if (vm.ok()) {
    auto fib = fibration_kind(res.projection, o.max_level);
    rep.info("fibration-kind", to_string(fib.kind()));
    rep.add("left-fibration", fib.left_ok);
  }
  return emit(rep, o, start);
}

int cmd_enumerate(int max_objects, int max_morphisms, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "enumerate --max-objects " + std::to_string(max_objects) +
                " --max-morphisms " + std::to_string(max_morphisms);
  int count = 0;
  std::vector<int> by_size(max_morphisms + 1, 0);
  bool all_ok = true;
  std::string first_bad;
  for_each_semicat({max_objects, max_morphisms}, [&](const FinSemicat& c) {
    ++count;
    ++by_size[(int)c.mors.size()];
    Report inst;
    run_semicat_lemmas(c, "", o.oracle, inst);
    if (!inst.pass() && all_ok) {
      all_ok = false;
      first_bad = "instance #" + std::to_string(count);
    }
    if (o.format == "text" && count % 25 == 0)
      std::cerr << "... " << count << " instances checked\r";
  });
  if (o.format == "text") std::cerr << '\n';
  std::string sizes;
  for (int s = 0; s <= max_morphisms; ++s)
    sizes += (s ? " " : "") + std::to_string(s) + ":" + std::to_string(by_size[s]);
  rep.info("instances", std::to_string(count) + " (by morphism count: " + sizes + ")");
  rep.add("lemma-suite", all_ok, first_bad);
  return emit(rep, o, start);
}

void run_harness_on(const std::string& model, const std::string& ctx_text, bool sliced,
                    const CommonOpts& o, Report& rep) {
  auto add_entries = [&](const HarnessReport& hr) {
    for (const auto& e : hr.entries)
      rep.add(e.schema, e.failed == 0,
              e.failed ? std::to_string(e.failed) + "/" + std::to_string(e.checked) +
                             " failed; first: " + e.counterexample
                       : std::to_string(e.checked) + " samples");
  };
  std::uint64_t seed = o.seed == 0 ? 1 : o.seed;
  if (model == "syntactic") {
    SyntacticModel m;
    SyntacticSampler s(seed);
    if (!sliced) {
      add_entries(law_harness(m, s, o.budget));
    } else {
      Con g0 = parse_context(ctx_text);
      SliceModel<SyntacticModel> sm{m, g0};
      SliceSampler<SyntacticModel, SyntacticSampler> ss(m, s, g0);
      add_entries(law_harness(sm, ss, o.budget));
    }
    return;
  }
  if (model == "standard" || model == "faulty-standard") {
    FiniteStandardModel m;
    m.forget_term_on_pair = model == "faulty-standard";
    FiniteSampler s(seed);
    if (!sliced) {
      add_entries(law_harness(m, s, o.budget));
    } else {
      SemTy g0 = sem_unit();
      if (!ctx_text.empty()) {
        Con g = parse_context(ctx_text);
        std::function<SemTy(const Con&)> conv = [&](const Con& c) -> SemTy {
          if (c->kind == ConNode::Empty) return sem_unit();
          SemTy base = conv(c->parent);
          std::vector<SemTy> cod;
          for (const auto& env : eval_con(c->parent))
            cod.push_back(sem_eval_ty(c->ty, env));
          return mk_semty({SemTyNode::Sigma, base, std::move(cod)});
        };
        g0 = conv(g);
      }
      SliceModel<FiniteStandardModel> sm{m, g0};
      SliceSampler<FiniteStandardModel, FiniteSampler> ss(m, s, g0);
      add_entries(law_harness(sm, ss, o.budget));
    }
    return;
  }
  throw error("unknown model '" + model + "' (expected syntactic|standard|faulty-standard)");
}

int cmd_harness(const std::string& model, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "harness --model " + model;
  run_harness_on(model, "", false, o, rep);
  return emit(rep, o, start);
}

int cmd_slice(const std::string& file, const std::string& object, const std::string& model,
              const std::string& ctx_text, const std::string& out_path, const CommonOpts& o) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  if (!model.empty()) {
    rep.command = "slice --model " + model;
    run_harness_on(model, ctx_text, true, o, rep);
    return emit(rep, o, start);
  }
  require(!file.empty(), "slice: need a .semicat file or --model");
  rep.command = "slice " + file;
  FinSemicat c = parse_semicat(slurp(file));
  int obj = c.find_object(object);
  require(obj >= 0, "slice: unknown object '" + object + "'");
  auto res = slice(c, obj);
  rep.info("slice", std::to_string(res.slice.objects.size()) + " objects, " +
                        std::to_string(res.slice.mors.size()) + " morphisms");
  if (res.base_has_identities)
    rep.add("identity-lift", res.lifted,
            res.lifted ? "slice identities are the base identities" : "lift failed");
  else
    rep.info("identity-lift", "base has no identity structure");
  std::string text = write_semicat(res.slice);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    require(out.good(), "cannot write " + out_path);
    out << text;
  } else if (o.format == "text") {
    std::cout << text;
  }
  return emit(rep, o, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CwF kernel and finite semisimplicial verifier"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string file, file_b, ctx_text, out_path, object, model;
  int max_objects = 1, max_morphisms = 3;

  auto* c_check = app.add_subcommand("check", "well-formedness of surface expressions");
  c_check->add_option("file", file)->required();
  c_check->add_option("--context", ctx_text, "ambient context for types/terms");
  add_common(c_check, o);

  auto* c_norm = app.add_subcommand("norm", "print normal forms");
  c_norm->add_option("file", file)->required();
  c_norm->add_option("--context", ctx_text);
  add_common(c_norm, o);

  auto* c_eq = app.add_subcommand("eq", "conversion check between two files");
  c_eq->add_option("a", file)->required();
  c_eq->add_option("b", file_b)->required();
  c_eq->add_option("--context", ctx_text);
  add_common(c_eq, o);

  auto* c_eval = app.add_subcommand("eval", "finite-model value tables");
  c_eval->add_option("file", file)->required();
  c_eval->add_option("--context", ctx_text);
  add_common(c_eval, o);

  auto* c_nerve = app.add_subcommand("nerve", "nerve of a semicategory as an sset file");
  c_nerve->add_option("file", file)->required();
  c_nerve->add_option("-o,--output", out_path);
  add_common(c_nerve, o);

  auto* c_vsset = app.add_subcommand("verify-sset", "validate + segal + identities + univalence");
  c_vsset->add_option("file", file)->required();
  add_common(c_vsset, o);

  auto* c_vsc = app.add_subcommand("verify-semicat", "identity-theory checks on a semicategory");
  c_vsc->add_option("file", file)->required();
  add_common(c_vsc, o);

  auto* c_vmap =
      app.add_subcommand("verify-map", "fibration classification of an elements projection");
  c_vmap->add_option("file", file)->required();
  add_common(c_vmap, o);

  auto* c_enum = app.add_subcommand("enumerate", "lemma suite over enumerated semicategories");
  c_enum->add_option("--max-objects", max_objects)->capture_default_str();
  c_enum->add_option("--max-morphisms", max_morphisms)->capture_default_str();
  add_common(c_enum, o);

  auto* c_slice = app.add_subcommand("slice", "slice a semicategory or a model");
  c_slice->add_option("file", file);
  c_slice->add_option("--object", object);
  c_slice->add_option("--model", model);
  c_slice->add_option("--context", ctx_text);
  c_slice->add_option("-o,--output", out_path);
  add_common(c_slice, o);

  auto* c_harness = app.add_subcommand("harness", "equation harness on a named model");
  c_harness->add_option("--model", model)->required();
  add_common(c_harness, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_check) return cmd_check(file, ctx_text, o);
    if (*c_norm) return cmd_norm(file, ctx_text, o);
    if (*c_eq) return cmd_eq(file, file_b, ctx_text, o);
    if (*c_eval) return cmd_eval(file, ctx_text, o);
    if (*c_nerve) return cmd_nerve(file, out_path, o);
    if (*c_vsset) return cmd_verify_sset(file, o);
    if (*c_vsc) return cmd_verify_semicat(file, o);
    if (*c_vmap) return cmd_verify_map(file, o);
    if (*c_enum) return cmd_enumerate(max_objects, max_morphisms, o);
    if (*c_slice) return cmd_slice(file, object, model, ctx_text, out_path, o);
    if (*c_harness) return cmd_harness(model, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
