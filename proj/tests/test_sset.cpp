#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "scwf/segal.hpp"
#include "scwf/semicat.hpp"
#include "scwf/simplex.hpp"

using namespace scwf;

// Hand-built two-vertex sset with named pieces, for negative fixtures.
static FinSSet two_points() {
  auto a = FinSSet::empty(2);
  a.add_cell(0, "x");
  a.add_cell(0, "y");
  return a;
}

TEST_CASE("validate flags broken simplicial identities") {
  REQUIRE(validate(standard_simplex(3, 3)).ok());

  // a 2-cell over a wrong boundary: d0 d2 != d1 d0
  auto a = FinSSet::empty(2);
  int x = a.add_cell(0, "x");
  int y = a.add_cell(0, "y");
  int z = a.add_cell(0, "z");
  int f = a.add_cell(1, "f", {y, x});   // x -> y
  int g = a.add_cell(1, "g", {z, y});   // y -> z
  int h = a.add_cell(1, "h", {z, x});   // x -> z
  a.add_cell(2, "good", {g, h, f});
  REQUIRE(validate(a).ok());
  a.add_cell(2, "bad", {f, h, g});      // boundary does not close up
  auto rep = validate(a);
  REQUIRE(!rep.ok());
  REQUIRE(rep.violations.size() >= 1);

  // nerves of enumerated semicategories validate (oracle: the enumerator)
  int seen = 0;
  for_each_semicat({1, 3}, [&](const FinSemicat& c) {
    ++seen;
    REQUIRE(validate(nerve(c, 3)).ok());
  });
  REQUIRE(seen > 0);
}

TEST_CASE("horn_instances enumerates face-commuting assignments") {
  auto d2 = standard_simplex(2, 2);
  REQUIRE(horn_instances(d2, 2, 1).size() == 1);

  REQUIRE(horn_instances(two_points(), 1, 0).size() == 2);  // just a vertex
  {
    auto a = two_points();
    a.max_level = 2;  // ensure levels exist; no edges, no 2-cells
    REQUIRE(horn_instances(a, 2, 1).empty());
  }

  // nerve of the one-object three-morphism cyclic group: |hom|^2 instances
  auto n3 = nerve(fixtures::z3(), 2);
  REQUIRE(horn_instances(n3, 2, 1).size() == 9);
}

TEST_CASE("fillers agree with the composition table on nerves") {
  auto c = fixtures::z3();
  auto n = nerve(c, 2);
  for (const auto& inst : horn_instances(n, 2, 1)) {
    auto fl = fillers(n, inst);
    REQUIRE(fl.size() == 1);
    // oracle: the table. The horn's 01-edge is f, its 12-edge g; the filler's
    // missing edge must be g.f from the table.
    FinSSet shape = horn(2, 1, 2);
    int e01 = inst.assignment[1][shape.find_cell(1, "01")];
    int e12 = inst.assignment[1][shape.find_cell(1, "12")];
    // nerve level-1 cells are morphisms in order
    int expect = c.comp[e12][e01];
    REQUIRE(fl[0].first == expect);
  }
}

TEST_CASE("duplicated and missing fillers are counted") {
  // duplicated 2-cell over one boundary
  auto a = FinSSet::empty(2);
  int x = a.add_cell(0, "x");
  int f = a.add_cell(1, "f", {x, x});
  a.add_cell(2, "c1", {f, f, f});
  a.add_cell(2, "c2", {f, f, f});
  auto insts = horn_instances(a, 2, 1);
  REQUIRE(insts.size() == 1);
  REQUIRE(fillers(a, insts[0]).size() == 2);
  auto rep = segal_report(a, 2);
  REQUIRE(!rep.pass());
  REQUIRE(rep.uniqueness_failures.size() == 1);
  REQUIRE(rep.existence_failures.empty());

  // no 2-cells at all
  auto b = FinSSet::empty(2);
  int y = b.add_cell(0, "x");
  b.add_cell(1, "f", {y, y});
  auto insts2 = horn_instances(b, 2, 1);
  REQUIRE(insts2.size() == 1);
  REQUIRE(fillers(b, insts2[0]).empty());
  auto rep2 = segal_report(b, 2);
  REQUIRE(rep2.existence_failures.size() == 1);
}

TEST_CASE("segal_report passes on nerves") {
  REQUIRE(segal_report(nerve(fixtures::z2(), 3), 3).pass());
  REQUIRE(segal_report(nerve(fixtures::codiscrete2(), 4), 4).pass());
}

TEST_CASE("composition_from_segal recovers the table") {
  auto c = fixtures::z3();
  auto n = nerve(c, 3);
  auto tab = composition_from_segal(n);
  for (int g = 0; g < 3; ++g)
    for (int f = 0; f < 3; ++f) REQUIRE(tab.composite[g][f] == c.comp[g][f]);
  REQUIRE(tab.associativity_checked);
  REQUIRE(tab.associative);

  // the standard 2-simplex has one composable pair
  auto d2 = standard_simplex(2, 2);
  auto t2 = composition_from_segal(d2);
  int defined = 0;
  for (auto& row : t2.composite)
    for (int v : row) defined += (v >= 0);
  REQUIRE(defined == 1);

  // duplicated-filler sset errors out
  auto dup = FinSSet::empty(2);
  int x = dup.add_cell(0, "x");
  int f2 = dup.add_cell(1, "f", {x, x});
  dup.add_cell(2, "c1", {f2, f2, f2});
  dup.add_cell(2, "c2", {f2, f2, f2});
  REQUIRE_THROWS_AS(composition_from_segal(dup), error);
}

TEST_CASE("equivalence edges agree with bijectivity of translations") {
  auto c = fixtures::z2();
  auto n = nerve(c, 3);
  // both self-edges of Z/2 are equivalences
  REQUIRE(is_equivalence_edge(n, 0));
  REQUIRE(is_equivalence_edge(n, 1));

  auto cc = fixtures::constant2();
  auto nc = nerve(cc, 3);
  REQUIRE(!is_equivalence_edge(nc, 0));   // (a . -) is constant
  REQUIRE(!is_equivalence_edge(nc, 1));

  auto tr = nerve(fixtures::trivial(), 3);
  REQUIRE(is_equivalence_edge(tr, 0));

  // oracle: semicategory-level bijection detection, morphism by morphism
  for_each_semicat({1, 3}, [&](const FinSemicat& sc) {
    auto nn = nerve(sc, 2);
    for (int e = 0; e < (int)sc.mors.size(); ++e)
      REQUIRE(is_equivalence_edge(nn, e) == is_equivalence(sc, e));
  });
}

TEST_CASE("identity structure on ssets") {
  auto rep = identity_structure(nerve(fixtures::z2(), 3));
  REQUIRE(rep.exists);
  REQUIRE(rep.identity[0] == 0);  // e, not g
  REQUIRE(rep.multiple.empty());

  auto rep2 = identity_structure(nerve(fixtures::constant2(), 3));
  REQUIRE(!rep2.exists);
  REQUIRE(rep2.good_per_vertex[0].empty());

  auto rep3 = identity_structure(nerve(fixtures::trivial(), 3));
  REQUIRE(rep3.exists);
  REQUIRE(rep3.identity[0] == 0);
}

TEST_CASE("terminal objects") {
  auto cod = nerve(fixtures::codiscrete2(), 2);
  REQUIRE(is_terminal(cod, 0));
  REQUIRE(is_terminal(cod, 1));

  REQUIRE(!is_terminal(nerve(fixtures::z2(), 2), 0));  // two self-edges

  auto arrow = nerve(fixtures::single_arrow(), 2);
  REQUIRE(!is_terminal(arrow, 0));  // nothing from b into a
}

TEST_CASE("univalence check") {
  REQUIRE(univalence_check(nerve(fixtures::trivial(), 3)).pass);

  auto r2 = univalence_check(nerve(fixtures::z2(), 3));
  REQUIRE(!r2.pass);  // g is a non-identity auto-equivalence

  auto rc = univalence_check(nerve(fixtures::codiscrete2(), 3));
  REQUIRE(!rc.pass);  // cross-object equivalences

  REQUIRE_THROWS_AS(univalence_check(nerve(fixtures::constant2(), 3)), error);
}

TEST_CASE("opposite is involutive and matches the semicategory opposite") {
  auto n = nerve(fixtures::z3(), 3);
  auto op2 = opposite(opposite(n));
  REQUIRE(op2.faces == n.faces);
  REQUIRE(validate(opposite(standard_simplex(2, 2))).ok());

  // opposite(nerve(C)) vs nerve(opposite(C)) under chain reversal
  for (const auto& c : {fixtures::z3(), fixtures::codiscrete2(), fixtures::single_arrow()}) {
    auto lhs = opposite(nerve(c, 3));
    auto rhs = nerve(opposite(c), 3);
    SSetMap relabel;
    relabel.level_maps.resize(4);
    for (int v = 0; v < lhs.cell_count(0); ++v) relabel.level_maps[0].push_back(v);
    for (int n2 = 1; n2 <= 3; ++n2)
      for (int cidx = 0; cidx < lhs.cell_count(n2); ++cidx) {
        // reverse the chain name
        std::string nm = lhs.names[n2][cidx];
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
          size_t dot = nm.find('.', pos);
          parts.push_back(nm.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos));
          if (dot == std::string::npos) break;
          pos = dot + 1;
        }
        std::string rev;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
          if (!rev.empty()) rev += '.';
          rev += *it;
        }
        int img = rhs.find_cell(n2, rev);
        REQUIRE(img >= 0);
        relabel.level_maps[n2].push_back(img);
      }
    relabel.source = lhs;
    relabel.target = rhs;
    REQUIRE(validate_map(relabel).ok());
  }
}

TEST_CASE("fibration classification") {
  // identity on a Segal sset: every lifting problem has the simplex itself
  // as its unique lift
  auto n = nerve(fixtures::z2(), 3);
  SSetMap idm;
  idm.level_maps.resize(4);
  for (int lv = 0; lv <= 3; ++lv)
    for (int c = 0; c < n.cell_count(lv); ++c) idm.level_maps[lv].push_back(c);
  idm.source = n;
  idm.target = n;
  auto rep = fibration_kind(idm, 3);
  REQUIRE(rep.inner_ok);  // at minimum inner

  // category-of-elements projection is a left fibration
  auto pr = category_of_elements(fixtures::z2_swap(), 3).projection;
  auto rep2 = fibration_kind(pr, 3);
  REQUIRE(rep2.left_ok);

  // a non-face-commuting assignment is rejected
  SSetMap bad = idm;
  if (!bad.level_maps[1].empty()) bad.level_maps[1][0] = (bad.level_maps[1][0] + 1) % n.cell_count(1);
  REQUIRE_THROWS_AS(fibration_kind(bad, 2), error);

  // a projection that is right-only: opposite of the elements projection
  auto prop = pr;
  prop.source = opposite(pr.source);
  prop.target = opposite(pr.target);
  auto rep3 = fibration_kind(prop, 2);
  REQUIRE(rep3.right_ok);
}
