#pragma once

// A fixed corpus of small semisimplicial sets with known Segal verdicts,
// including duplicated-filler and missing-composite negatives. Used by the
// Segal round-trip suites: segal_report must pass exactly when the induced
// composition-with-witness structure is total, unique, and coherent.

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "scwf/segal.hpp"
#include "scwf/semicat.hpp"
#include "scwf/simplex.hpp"

namespace corpus {

using scwf::FinSemicat;
using scwf::FinSSet;

struct Entry {
  std::string name;
  FinSSet sset;
  bool expect_segal;  // verdict of segal_report through level min(3, max_level)
};

// one self-edge, no 2-cells: the composite of (f, f) is missing
inline FinSSet missing_composite() {
  auto a = FinSSet::empty(2);
  int x = a.add_cell(0, "x");
  a.add_cell(1, "f", {x, x});
  return a;
}

// two 2-cells over the same boundary
inline FinSSet duplicated_filler() {
  auto a = FinSSet::empty(2);
  int x = a.add_cell(0, "x");
  int f = a.add_cell(1, "f", {x, x});
  a.add_cell(2, "c1", {f, f, f});
  a.add_cell(2, "c2", {f, f, f});
  return a;
}

// a "nerve up to level 2" of a binary operation table (2-cells witness
// composites, level 3 left empty)
inline FinSSet table_sset(const std::vector<std::vector<int>>& comp, int max_level) {
  int n = (int)comp.size();
  auto a = FinSSet::empty(max_level);
  int x = a.add_cell(0, "x");
  for (int f = 0; f < n; ++f) a.add_cell(1, "m" + std::to_string(f), {x, x});
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      a.add_cell(2, "w" + std::to_string(f) + "_" + std::to_string(g),
                 {g, comp[g][f], f});
  return a;
}

// parallel pair a => b with no composable pairs
inline FinSSet parallel_pair() {
  auto a = FinSSet::empty(3);
  int va = a.add_cell(0, "a");
  int vb = a.add_cell(0, "b");
  a.add_cell(1, "f", {vb, va});
  a.add_cell(1, "g", {vb, va});
  return a;
}

inline FinSSet two_points() {
  auto a = FinSSet::empty(2);
  a.add_cell(0, "x");
  a.add_cell(0, "y");
  return a;
}

inline FinSemicat arrow_category() {
  // a -> b with identities on both ends
  return FinSemicat::make(
      {"a", "b"}, {{0, 0, "ia"}, {0, 1, "f"}, {1, 1, "ib"}},
      {{0, -1, -1}, {1, -1, 1}, {-1, 1, 2}});
}

inline FinSemicat right_projection2() {
  // comp[g][f] = f on two self-morphisms
  return FinSemicat::make({"x"}, {{0, 0, "a"}, {0, 0, "b"}}, {{0, 1}, {0, 1}});
}

inline std::vector<Entry> entries() {
  using namespace fixtures;
  std::vector<Entry> out;
  auto add_nerve = [&](const std::string& name, const FinSemicat& c, int cap) {
    out.push_back({name, scwf::nerve(c, cap), true});
  };
  add_nerve("nerve-trivial-3", trivial(), 3);
  add_nerve("nerve-z2-3", z2(), 3);
  add_nerve("nerve-z3-3", z3(), 3);
  add_nerve("nerve-constant2-3", constant2(), 3);
  add_nerve("nerve-codiscrete2-3", codiscrete2(), 3);
  add_nerve("nerve-single-arrow-3", single_arrow(), 3);
  add_nerve("nerve-arrow-category-3", arrow_category(), 3);
  add_nerve("nerve-right-projection-3", right_projection2(), 3);
  add_nerve("nerve-z2-2", z2(), 2);

  out.push_back({"simplex-1-3", scwf::standard_simplex(1, 3), true});
  out.push_back({"simplex-2-2", scwf::standard_simplex(2, 2), true});
  out.push_back({"simplex-2-3", scwf::standard_simplex(2, 3), true});
  out.push_back({"simplex-3-3", scwf::standard_simplex(3, 3), true});
  out.push_back({"simplex-4-3", scwf::standard_simplex(4, 3), true});

  out.push_back({"horn-2-1", scwf::horn(2, 1, 2), false});   // missing composite edge
  out.push_back({"horn-3-1", scwf::horn(3, 1, 3), false});   // missing inner face
  out.push_back({"two-points", two_points(), true});
  out.push_back({"parallel-pair", parallel_pair(), true});
  out.push_back({"missing-composite", missing_composite(), false});
  out.push_back({"duplicated-filler", duplicated_filler(), false});

  // non-associative table: g . f := not f; unique 2-cells but no coherent
  // level 3
  out.push_back({"magma-negation", table_sset({{1, 0}, {1, 0}}, 3), false});
  // associative table with the level-3 witnesses left out
  out.push_back({"assoc-without-3-cells", table_sset({{0, 1}, {1, 0}}, 3), false});

  return out;
}

/// Independent oracle for the corpus: scans raw cells (not the horn
/// machinery) for totality/uniqueness of level-2 fillers, associativity of
/// the induced table, and (when level 3 exists) canonicity of the
/// associativity witnesses.
inline bool induced_composition_ok(const FinSSet& a) {
  using scwf::edge_dst;
  using scwf::edge_src;
  int ne = a.cell_count(1);
  std::vector<std::vector<int>> table(ne, std::vector<int>(ne, -1));
  for (int f = 0; f < ne; ++f)
    for (int g = 0; g < ne; ++g) {
      if (edge_dst(a, f) != edge_src(a, g)) continue;
      int found = 0, missing = -1;
      for (int c = 0; c < a.cell_count(2); ++c)
        if (a.faces[2][c][2] == f && a.faces[2][c][0] == g) {
          ++found;
          missing = a.faces[2][c][1];
        }
      if (found != 1) return false;  // not total or not unique
      table[g][f] = missing;
    }
  if (a.max_level < 3) return true;
  for (int f = 0; f < ne; ++f)
    for (int g = 0; g < ne; ++g) {
      if (table[g][f] < 0) continue;
      for (int h = 0; h < ne; ++h) {
        if (edge_src(a, h) != edge_dst(a, g)) continue;
        if (table[h][table[g][f]] != table[table[h][g]][f]) return false;
        // exactly one 3-cell witnesses this triple
        int w = 0;
        for (int c = 0; c < a.cell_count(3); ++c) {
          // d3 = (f,g)-cell, d0 = (g,h)-cell determine the chain
          int d3 = a.faces[3][c][3], d0 = a.faces[3][c][0];
          if (a.faces[2][d3][2] == f && a.faces[2][d3][0] == g &&
              a.faces[2][d0][2] == g && a.faces[2][d0][0] == h)
            ++w;
        }
        if (w != 1) return false;
      }
    }
  return true;
}

}  // namespace corpus
