#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "scwf/error.hpp"
#include "scwf/sset.hpp"

namespace scwf {

/// A strictly increasing map [dom] -> [cod], where [k] = {0, ..., k}.
/// These are the morphisms of the semi-simplex category; values has
/// dom+1 entries.
struct MonotoneMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> values;

  bool valid() const {
    if ((int)values.size() != dom + 1) return false;
    for (int i = 0; i <= dom; ++i) {
      if (values[i] < 0 || values[i] > cod) return false;
      if (i > 0 && values[i] <= values[i - 1]) return false;
    }
    return true;
  }

  bool operator==(const MonotoneMap& o) const {
    return dom == o.dom && cod == o.cod && values == o.values;
  }
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (std::uint64_t)(n - i) / (i + 1);
  return r;
}

/// All strictly monotone maps [i] -> [j], in lexicographic order of their
/// value sequences. The count is C(j+1, i+1).
inline std::vector<MonotoneMap> enumerate_monotone(int i, int j) {
  require(i >= 0 && j >= 0, "enumerate_monotone: ordinals must be >= 0");
  std::vector<MonotoneMap> out;
  if (i > j) return out;
  std::vector<int> v(i + 1);
  for (int t = 0; t <= i; ++t) v[t] = t;
  while (true) {
    out.push_back(MonotoneMap{i, j, v});
    // next (i+1)-subset of {0..j} in lex order
    int t = i;
    while (t >= 0 && v[t] == j - (i - t)) --t;
    if (t < 0) break;
    ++v[t];
    for (int s = t + 1; s <= i; ++s) v[s] = v[s - 1] + 1;
  }
  return out;
}

/// Pointwise composite g . f; strictly monotone by construction.
inline MonotoneMap compose_monotone(const MonotoneMap& g, const MonotoneMap& f) {
  require(f.cod == g.dom, "compose_monotone: domain mismatch");
  MonotoneMap r{f.dom, g.cod, {}};
  r.values.reserve(f.dom + 1);
  for (int v : f.values) r.values.push_back(g.values[v]);
  return r;
}

inline MonotoneMap identity_monotone(int n) {
  MonotoneMap r{n, n, {}};
  for (int t = 0; t <= n; ++t) r.values.push_back(t);
  return r;
}

/// The injection [n-1] -> [n] omitting i.
inline MonotoneMap face_map(int n, int i) {
  require(n >= 1, "face_map: n must be >= 1");
  require(0 <= i && i <= n, "face_map: index out of range");
  MonotoneMap r{n - 1, n, {}};
  for (int t = 0; t <= n; ++t)
    if (t != i) r.values.push_back(t);
  return r;
}

// Cells of the standard simplex are named by their vertex sets, e.g. "013".
inline std::string vertex_set_name(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += std::to_string(v);
  return s;
}

/// The standard n-simplex truncated at level cap: m-cells are the strictly
/// monotone maps [m] -> [n] (so C(n+1, m+1) of them); levels above n are
/// empty. Face i of a cell deletes the i-th entry of its vertex set.
inline FinSSet standard_simplex(int n, int cap) {
  require(n >= 0 && cap >= 0, "standard_simplex: ordinals must be >= 0");
  FinSSet a = FinSSet::empty(cap);
  std::vector<std::vector<MonotoneMap>> cells(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    cells[m] = enumerate_monotone(m, n);
    for (const auto& mm : cells[m]) {
      std::vector<int> frefs;
      if (m >= 1) {
        for (int i = 0; i <= m; ++i) {
          std::vector<int> sub = mm.values;
          sub.erase(sub.begin() + i);
          MonotoneMap fm{m - 1, n, sub};
          int idx = (int)(std::lower_bound(cells[m - 1].begin(), cells[m - 1].end(), fm,
                              [](const MonotoneMap& a2, const MonotoneMap& b2) {
                                return a2.values < b2.values;
                              }) -
                          cells[m - 1].begin());
          frefs.push_back(idx);
        }
      }
      a.add_cell(m, vertex_set_name(mm.values), std::move(frefs));
    }
  }
  return a;
}

/// The horn (n,k): the standard n-simplex with the unique n-cell removed and
/// the (n-1)-cell opposite vertex k (vertex set {0..n} minus k) removed.
/// Cells keep their simplex names, so the inclusion into standard_simplex is
/// name-directed.
inline FinSSet horn(int n, int k, int cap) {
  require(n >= 1, "horn: n must be >= 1");
  require(0 <= k && k <= n, "horn: index out of range");
  FinSSet full = standard_simplex(n, cap);
  std::vector<int> opposite_k;
  for (int t = 0; t <= n; ++t)
    if (t != k) opposite_k.push_back(t);
  std::string drop_top = vertex_set_name([&] {
    std::vector<int> all(n + 1);
    for (int t = 0; t <= n; ++t) all[t] = t;
    return all;
  }());
  std::string drop_face = vertex_set_name(opposite_k);

  FinSSet a = FinSSet::empty(cap);
  // old index -> new index, per level
  std::vector<std::vector<int>> remap(cap + 1);
  for (int m = 0; m <= cap; ++m) {
    remap[m].assign(full.cell_count(m), -1);
    for (int c = 0; c < full.cell_count(m); ++c) {
      const std::string& nm = full.names[m][c];
      if ((m == n && nm == drop_top) || (m == n - 1 && nm == drop_face)) continue;
      std::vector<int> frefs;
      if (m >= 1) {
        for (int i = 0; i <= m; ++i) {
          int old = full.faces[m][c][i];
          int nw = remap[m - 1][old];
          require(nw >= 0, "horn: removed cell is a face of a kept cell");
          frefs.push_back(nw);
        }
      }
      remap[m][c] = a.add_cell(m, nm, std::move(frefs));
    }
  }
  return a;
}

}  // namespace scwf
