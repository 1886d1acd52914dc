#pragma once

#include <string>
#include <vector>

#include "scwf/error.hpp"

namespace scwf {

// Finite truncated semisimplicial set.
//
// Face convention used throughout: for an n-cell c (n >= 1), faces[n][c][i]
// is the (n-1)-cell obtained by omitting vertex i of c. In particular an
// edge e has faces[1][e] = {target, source}: d0 drops vertex 0 and keeps the
// far end. The semisimplicial identities then read
//   d_i . d_j = d_{j-1} . d_i   for i < j.
struct FinSSet {
  int max_level = 0;
  // names[n][i] is the display name of cell i at level n; names are unique
  // per level and stable, so reports and files are reproducible.
  std::vector<std::vector<std::string>> names;
  // faces[n][i] has n+1 entries (indices into level n-1); faces[0] unused.
  std::vector<std::vector<std::vector<int>>> faces;

  int levels() const { return max_level + 1; }
  int cell_count(int n) const {
    return (n >= 0 && n < (int)names.size()) ? (int)names[n].size() : 0;
  }

  static FinSSet empty(int max_level) {
    FinSSet a;
    a.max_level = max_level;
    a.names.resize(max_level + 1);
    a.faces.resize(max_level + 1);
    return a;
  }

  int add_cell(int level, std::string name, std::vector<int> face_refs = {}) {
    names[level].push_back(std::move(name));
    faces[level].push_back(std::move(face_refs));
    return (int)names[level].size() - 1;
  }

  // Index of the named cell at `level`, or -1.
  int find_cell(int level, const std::string& name) const {
    for (int i = 0; i < cell_count(level); ++i)
      if (names[level][i] == name) return i;
    return -1;
  }
};

struct SSetViolation {
  int level = 0;
  int cell = 0;
  int i = 0, j = 0;   // offending face index pair; j = -1 for arity/range errors
  std::string detail;
};

struct ValidationReport {
  std::vector<SSetViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks face-reference validity and the semisimplicial identities.
inline ValidationReport validate(const FinSSet& a) {
  ValidationReport rep;
  for (int n = 1; n <= a.max_level; ++n) {
    for (int c = 0; c < a.cell_count(n); ++c) {
      const auto& fs = a.faces[n][c];
      if ((int)fs.size() != n + 1) {
        rep.violations.push_back({n, c, 0, -1,
            "cell " + a.names[n][c] + " has " + std::to_string(fs.size()) +
            " faces, expected " + std::to_string(n + 1)});
        continue;
      }
      bool in_range = true;
      for (int i = 0; i <= n; ++i) {
        if (fs[i] < 0 || fs[i] >= a.cell_count(n - 1)) {
          rep.violations.push_back({n, c, i, -1,
              "cell " + a.names[n][c] + ": face " + std::to_string(i) +
              " out of range"});
          in_range = false;
        }
      }
      if (!in_range || n < 2) continue;
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          int lhs = a.faces[n - 1][fs[j]][i];      // d_i d_j
          int rhs = a.faces[n - 1][fs[i]][j - 1];  // d_{j-1} d_i
          if (lhs != rhs)
            rep.violations.push_back({n, c, i, j,
                "cell " + a.names[n][c] + ": d" + std::to_string(i) + " d" +
                std::to_string(j) + " != d" + std::to_string(j - 1) + " d" +
                std::to_string(i)});
        }
    }
  }
  return rep;
}

/// Level-wise map between semisimplicial sets, defined up to
/// min(source, target) level. Commutation with faces is checked by
/// validate_map, not assumed.
struct SSetMap {
  FinSSet source;
  FinSSet target;
  std::vector<std::vector<int>> level_maps;

  int levels() const { return (int)level_maps.size(); }
};

inline ValidationReport validate_map(const SSetMap& m) {
  ValidationReport rep;
  int lv = std::min(m.source.max_level, m.target.max_level) + 1;
  if ((int)m.level_maps.size() < lv)
    rep.violations.push_back({0, 0, 0, -1, "map defined on too few levels"});
  lv = std::min(lv, (int)m.level_maps.size());
  for (int n = 0; n < lv; ++n) {
    if ((int)m.level_maps[n].size() != m.source.cell_count(n)) {
      rep.violations.push_back({n, 0, 0, -1, "level map arity mismatch"});
      continue;
    }
    for (int c = 0; c < m.source.cell_count(n); ++c) {
      int img = m.level_maps[n][c];
      if (img < 0 || img >= m.target.cell_count(n)) {
        rep.violations.push_back({n, c, 0, -1,
            "image of " + m.source.names[n][c] + " out of range"});
        continue;
      }
      if (n == 0) continue;
      for (int i = 0; i <= n; ++i) {
        int lhs = m.level_maps[n - 1][m.source.faces[n][c][i]];
        int rhs = m.target.faces[n][img][i];
        if (lhs != rhs)
          rep.violations.push_back({n, c, i, -1,
              "map does not commute with d" + std::to_string(i) + " at " +
              m.source.names[n][c]});
      }
    }
  }
  return rep;
}

/// Reverses vertex order: face i of a cell becomes face n-i. Involutive and
/// validity-preserving; cells and names are kept as-is.
inline FinSSet opposite(const FinSSet& a) {
  FinSSet b = a;
  for (int n = 1; n <= a.max_level; ++n)
    for (int c = 0; c < a.cell_count(n); ++c)
      for (int i = 0; i <= n; ++i) b.faces[n][c][i] = a.faces[n][c][n - i];
  return b;
}

}  // namespace scwf
