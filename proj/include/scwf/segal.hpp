#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scwf/simplex.hpp"
#include "scwf/sset.hpp"

namespace scwf {

/// A face-commuting assignment of the cells of horn(n,k) to cells of a
/// target sset, stored level-wise in horn cell order.
struct HornInstance {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> assignment;
};

namespace detail {

// Backtracking enumeration of all face-commuting maps shape -> target,
// visiting shape cells level by level and candidates in increasing index
// order, which makes the output lexicographic in the flattened assignment.
inline void enumerate_sset_maps(const FinSSet& shape, const FinSSet& target,
                                int up_to_level,
                                const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::vector<int>> asg(up_to_level + 1);
  for (int m = 0; m <= up_to_level; ++m) asg[m].assign(shape.cell_count(m), -1);

  std::function<void(int, int)> go = [&](int level, int cell) {
    while (level <= up_to_level && cell >= shape.cell_count(level)) {
      ++level;
      cell = 0;
    }
    if (level > up_to_level) {
      emit(asg);
      return;
    }
    for (int cand = 0; cand < target.cell_count(level); ++cand) {
      bool ok = true;
      if (level >= 1) {
        for (int i = 0; i <= level && ok; ++i)
          ok = target.faces[level][cand][i] == asg[level - 1][shape.faces[level][cell][i]];
      }
      if (!ok) continue;
      asg[level][cell] = cand;
      go(level, cell + 1);
    }
    asg[level][cell] = -1;
  };
  go(0, 0);
}

}  // namespace detail

/// All face-commuting assignments horn(n,k) -> A, in deterministic
/// lexicographic order of the flattened assignment vector.
inline std::vector<HornInstance> horn_instances(const FinSSet& a, int n, int k) {
  require(n <= a.max_level, "horn_instances: n exceeds max_level");
  FinSSet h = horn(n, k, n);
  std::vector<HornInstance> out;
  detail::enumerate_sset_maps(h, a, n, [&](const std::vector<std::vector<int>>& asg) {
    out.push_back(HornInstance{n, k, asg});
  });
  return out;
}

/// Fillers of a horn instance: pairs (missing-face cell, top cell). The top
/// cell must agree with the instance on every face except k; the missing
/// face is then its k-th face.
inline std::vector<std::pair<int, int>> fillers(const FinSSet& a, const HornInstance& h) {
  require(h.n <= a.max_level, "fillers: horn level exceeds max_level");
  FinSSet shape = horn(h.n, h.k, h.n);
  // image of the (n-1)-cell of the full simplex omitting vertex i, i != k
  std::vector<int> want(h.n + 1, -1);
  for (int i = 0; i <= h.n; ++i) {
    if (i == h.k) continue;
    std::vector<int> vs;
    for (int t = 0; t <= h.n; ++t)
      if (t != i) vs.push_back(t);
    int hc = shape.find_cell(h.n - 1, vertex_set_name(vs));
    require(hc >= 0, "fillers: malformed horn shape");
    want[i] = h.assignment[h.n - 1][hc];
  }
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < a.cell_count(h.n); ++t) {
    bool ok = true;
    for (int i = 0; i <= h.n && ok; ++i)
      if (i != h.k) ok = a.faces[h.n][t][i] == want[i];
    if (ok) out.push_back({a.faces[h.n][t][h.k], t});
  }
  return out;
}

struct SegalFailure {
  int n = 0;
  int k = 0;
  int instance = 0;      // index into horn_instances(a, n, k)
  int filler_count = 0;  // 0 = existence failure, >= 2 = uniqueness failure
};

/// Set-level Segal check: every inner horn (2 <= n <= up_to, 0 < k < n) must
/// have exactly one filler. Existence failures (count 0) and uniqueness
/// failures (count >= 2) are reported separately.
struct SegalReport {
  int up_to = 0;
  long instances_checked = 0;
  std::vector<SegalFailure> existence_failures;
  std::vector<SegalFailure> uniqueness_failures;
  bool pass() const { return existence_failures.empty() && uniqueness_failures.empty(); }
};

inline SegalReport segal_report(const FinSSet& a, int up_to) {
  require(up_to <= a.max_level, "segal_report: up_to exceeds max_level");
  SegalReport rep;
  rep.up_to = up_to;
  for (int n = 2; n <= up_to; ++n)
    for (int k = 1; k < n; ++k) {
      auto insts = horn_instances(a, n, k);
      for (int idx = 0; idx < (int)insts.size(); ++idx) {
        int cnt = (int)fillers(a, insts[idx]).size();
        ++rep.instances_checked;
        if (cnt == 0) rep.existence_failures.push_back({n, k, idx, 0});
        else if (cnt >= 2) rep.uniqueness_failures.push_back({n, k, idx, cnt});
      }
    }
  return rep;
}

// --- edges ----------------------------------------------------------------
//
// With the face convention of FinSSet, an edge e has source faces[1][e][1]
// and target faces[1][e][0].

inline int edge_src(const FinSSet& a, int e) { return a.faces[1][e][1]; }
inline int edge_dst(const FinSSet& a, int e) { return a.faces[1][e][0]; }

/// 2-cells witnessing f : x0->x1, g : x1->x2, h : x0->x2 (i.e. d2 = f,
/// d0 = g, d1 = h).
inline std::vector<int> triangle_cells(const FinSSet& a, int f, int g, int h) {
  std::vector<int> out;
  for (int c = 0; c < a.cell_count(2); ++c)
    if (a.faces[2][c][2] == f && a.faces[2][c][0] == g && a.faces[2][c][1] == h)
      out.push_back(c);
  return out;
}

/// Composition extracted from unique inner 2-horn fillers, plus an
/// associativity verdict from inner 3-horn uniqueness (when level 3 exists).
struct CompositionTable {
  // composite[g][f] = the unique filler edge of the horn (f, g), or -1 when
  // f, g are not composable (dst f != src g).
  std::vector<std::vector<int>> composite;
  bool associativity_checked = false;
  bool associative = false;
  std::vector<SegalFailure> level3_failures;
};

inline CompositionTable composition_from_segal(const FinSSet& a) {
  auto base = segal_report(a, std::min(2, a.max_level));
  require(a.max_level >= 2 && base.pass(),
          "composition_from_segal: inner 2-horns are not uniquely fillable");
  int ne = a.cell_count(1);
  CompositionTable tab;
  tab.composite.assign(ne, std::vector<int>(ne, -1));
  for (int f = 0; f < ne; ++f)
    for (int g = 0; g < ne; ++g) {
      if (edge_dst(a, f) != edge_src(a, g)) continue;
      // the inner 2-horn with d2-position f and d0-position g
      std::vector<int> tops;
      for (int c = 0; c < a.cell_count(2); ++c)
        if (a.faces[2][c][2] == f && a.faces[2][c][0] == g) tops.push_back(c);
      require(tops.size() == 1, "composition_from_segal: horn filler not unique");
      tab.composite[g][f] = a.faces[2][tops[0]][1];
    }
  if (a.max_level >= 3) {
    tab.associativity_checked = true;
    auto rep3 = segal_report(a, 3);
    tab.associative = rep3.pass();
    for (auto& fa : rep3.existence_failures)
      if (fa.n == 3) tab.level3_failures.push_back(fa);
    for (auto& fa : rep3.uniqueness_failures)
      if (fa.n == 3) tab.level3_failures.push_back(fa);
  }
  return tab;
}

/// An edge e is an equivalence if every outer horn presenting e in the fixed
/// position (e as the 01-edge of a (2,0)-horn, or the 12-edge of a
/// (2,2)-horn) has exactly one filler. In composition terms this says both
/// translation maps (- . e) and (e . -) are bijections.
inline bool is_equivalence_edge(const FinSSet& a, int e) {
  require(a.max_level >= 2, "is_equivalence_edge: need 2-cells");
  int x = edge_src(a, e), y = edge_dst(a, e);
  // horns 1 <-e- 0 -g-> 2: count pairs (h : y->z, cell witnessing e,h,g)
  for (int g = 0; g < a.cell_count(1); ++g) {
    if (edge_src(a, g) != x) continue;
    int cnt = 0;
    for (int h = 0; h < a.cell_count(1); ++h) {
      if (edge_src(a, h) != y || edge_dst(a, h) != edge_dst(a, g)) continue;
      cnt += (int)triangle_cells(a, e, h, g).size();
    }
    if (cnt != 1) return false;
  }
  // horns 0 -g-> 2 <-e- 1: count pairs (f : w->x, cell witnessing f,e,g)
  for (int g = 0; g < a.cell_count(1); ++g) {
    if (edge_dst(a, g) != y) continue;
    int cnt = 0;
    for (int f = 0; f < a.cell_count(1); ++f) {
      if (edge_dst(a, f) != x || edge_src(a, f) != edge_src(a, g)) continue;
      cnt += (int)triangle_cells(a, f, e, g).size();
    }
    if (cnt != 1) return false;
  }
  return true;
}

/// Good identities per vertex: self-edges that are equivalences and carry an
/// idempotency witness (a 2-cell over (i, i, i)).
struct IdentityStructureReport {
  std::vector<std::vector<int>> good_per_vertex;
  // vertices carrying >= 2 good identities; must be empty for any valid
  // input, so a non-empty list flags an internal inconsistency.
  std::vector<int> multiple;
  bool exists = false;
  std::vector<int> identity;  // per vertex, -1 when absent
};

inline IdentityStructureReport identity_structure(const FinSSet& a) {
  require(a.max_level >= 2, "identity_structure: need 2-cells");
  IdentityStructureReport rep;
  int nv = a.cell_count(0);
  rep.good_per_vertex.resize(nv);
  rep.identity.assign(nv, -1);
  for (int e = 0; e < a.cell_count(1); ++e) {
    int x = edge_src(a, e);
    if (edge_dst(a, e) != x) continue;
    if (triangle_cells(a, e, e, e).empty()) continue;  // not idempotent
    if (!is_equivalence_edge(a, e)) continue;
    rep.good_per_vertex[x].push_back(e);
  }
  rep.exists = true;
  for (int v = 0; v < nv; ++v) {
    if (rep.good_per_vertex[v].size() >= 2) rep.multiple.push_back(v);
    if (rep.good_per_vertex[v].size() == 1) rep.identity[v] = rep.good_per_vertex[v][0];
    else rep.exists = false;
  }
  return rep;
}

/// x is terminal iff every vertex has exactly one edge into x.
inline bool is_terminal(const FinSSet& a, int x) {
  require(a.max_level >= 1, "is_terminal: need edges");
  for (int y = 0; y < a.cell_count(0); ++y) {
    int cnt = 0;
    for (int e = 0; e < a.cell_count(1); ++e)
      if (edge_src(a, e) == y && edge_dst(a, e) == x) ++cnt;
    if (cnt != 1) return false;
  }
  return true;
}

/// Set-level univalence: for each ordered vertex pair (x,y) the number of
/// equivalence edges x -> y must be 1 when x = y (that edge being the
/// identity) and 0 otherwise.
struct UnivalenceReport {
  bool pass = false;
  struct Offence {
    int x, y;
    std::vector<int> eqv_edges;
  };
  std::vector<Offence> offences;
};

inline UnivalenceReport univalence_check(const FinSSet& a) {
  auto ids = identity_structure(a);
  require(ids.exists, "univalence_check: no identity structure");
  UnivalenceReport rep;
  rep.pass = true;
  int nv = a.cell_count(0);
  std::vector<std::vector<std::vector<int>>> eqv(nv, std::vector<std::vector<int>>(nv));
  for (int e = 0; e < a.cell_count(1); ++e)
    if (is_equivalence_edge(a, e)) eqv[edge_src(a, e)][edge_dst(a, e)].push_back(e);
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y) {
      bool ok = (x == y) ? (eqv[x][y].size() == 1 && eqv[x][y][0] == ids.identity[x])
                         : eqv[x][y].empty();
      if (!ok) {
        rep.pass = false;
        rep.offences.push_back({x, y, eqv[x][y]});
      }
    }
  return rep;
}

// --- fibration classification ---------------------------------------------

enum class FibrationKind { kan, left, right, inner, none };

inline const char* to_string(FibrationKind k) {
  switch (k) {
    case FibrationKind::kan: return "kan";
    case FibrationKind::left: return "left";
    case FibrationKind::right: return "right";
    case FibrationKind::inner: return "inner";
    default: return "none";
  }
}

/// Which horn lifting problems (squares: horn in the source over a simplex
/// in the target) have exactly one lift, checked exhaustively for n <= up_to.
struct FibrationReport {
  bool inner_ok = true;  // unique lifts for all 0 < k < n
  bool left_ok = true;   // ... for all 0 <= k < n
  bool right_ok = true;  // ... for all 0 < k <= n
  std::vector<std::pair<int, int>> failing;  // offending (n, k) pairs
  FibrationKind kind() const {
    if (left_ok && right_ok) return FibrationKind::kan;
    if (left_ok) return FibrationKind::left;
    if (right_ok) return FibrationKind::right;
    if (inner_ok) return FibrationKind::inner;
    return FibrationKind::none;
  }
};

inline FibrationReport fibration_kind(const SSetMap& m, int up_to) {
  auto v = validate_map(m);
  require(v.ok(), "fibration_kind: map does not commute with faces");
  require(up_to <= m.source.max_level && up_to <= m.target.max_level,
          "fibration_kind: up_to exceeds a max_level");
  FibrationReport rep;
  for (int n = 1; n <= up_to; ++n)
    for (int k = 0; k <= n; ++k) {
      FinSSet shape = horn(n, k, n);
      bool all_unique = true;
      // enumerate horns in the source, then compatible simplexes below
      detail::enumerate_sset_maps(shape, m.source, n,
          [&](const std::vector<std::vector<int>>& asg) {
            if (!all_unique) return;
            // project the horn to the target
            std::vector<std::vector<int>> proj(asg.size());
            for (int lv = 0; lv < (int)asg.size(); ++lv) {
              proj[lv].reserve(asg[lv].size());
              for (int c : asg[lv]) proj[lv].push_back(m.level_maps[lv][c]);
            }
            // faces of candidate base simplexes, in simplex-cell order
            FinSSet full = standard_simplex(n, n);
            for (int s = 0; s < m.target.cell_count(n); ++s) {
              bool compat = true;
              for (int lv = 0; lv <= n - 1 && compat; ++lv) {
                for (int c = 0; c < shape.cell_count(lv) && compat; ++c) {
                  // locate the same-named cell of the full simplex and chase
                  // its image under s's iterated faces
                  int fc = full.find_cell(lv, shape.names[lv][c]);
                  // walk down from s: remove vertices not in the cell
                  int cur = s;
                  std::string nm = shape.names[lv][c];
                  std::vector<bool> keep(n + 1, false);
                  for (char ch : nm) keep[ch - '0'] = true;
                  int cur_level = n;
                  std::vector<int> verts(n + 1);
                  for (int t2 = 0; t2 <= n; ++t2) verts[t2] = t2;
                  while (cur_level > lv) {
                    int drop = -1;
                    for (int p = 0; p <= cur_level; ++p)
                      if (!keep[verts[p]]) { drop = p; break; }
                    cur = m.target.faces[cur_level][cur][drop];
                    verts.erase(verts.begin() + drop);
                    --cur_level;
                  }
                  (void)fc;
                  compat = cur == proj[lv][c];
                }
              }
              if (!compat) continue;
              // count lifts: n-cells of the source over s matching the horn
              int lifts = 0;
              for (int t = 0; t < m.source.cell_count(n); ++t) {
                if (m.level_maps[n][t] != s) continue;
                bool ok = true;
                for (int i = 0; i <= n && ok; ++i) {
                  if (i == k) continue;
                  std::vector<int> vs;
                  for (int t2 = 0; t2 <= n; ++t2)
                    if (t2 != i) vs.push_back(t2);
                  int hc = shape.find_cell(n - 1, vertex_set_name(vs));
                  ok = m.source.faces[n][t][i] == asg[n - 1][hc];
                }
                if (ok) ++lifts;
              }
              if (lifts != 1) {
                all_unique = false;
                return;
              }
            }
          });
      if (!all_unique) {
        rep.failing.push_back({n, k});
        if (k > 0 && k < n) rep.inner_ok = false;
        if (k < n) rep.left_ok = false;
        if (k > 0) rep.right_ok = false;
      }
    }
  if (!rep.left_ok || !rep.right_ok) {
    // inner status depends only on inner pairs, already tracked
  }
  return rep;
}

}  // namespace scwf
