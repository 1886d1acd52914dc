#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scwf/error.hpp"
#include "scwf/sset.hpp"

namespace scwf {

/// Finite semicategory: objects, morphisms carrying their endpoints, and a
/// total associative composition table. Tables are validated eagerly; an
/// inconsistent table is a construction error, not a report entry.
struct FinSemicat {
  struct Mor {
    int src = 0;
    int dst = 0;
    std::string name;
  };

  std::vector<std::string> objects;
  std::vector<Mor> mors;
  // comp[g][f] = index of g . f when dst(f) == src(g), else -1
  std::vector<std::vector<int>> comp;

  int hom_size(int a, int b) const {
    int c = 0;
    for (const auto& m : mors) c += (m.src == a && m.dst == b);
    return c;
  }
  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int i = 0; i < (int)mors.size(); ++i)
      if (mors[i].src == a && mors[i].dst == b) out.push_back(i);
    return out;
  }
  int find_object(const std::string& n) const {
    for (int i = 0; i < (int)objects.size(); ++i)
      if (objects[i] == n) return i;
    return -1;
  }
  int find_mor(const std::string& n) const {
    for (int i = 0; i < (int)mors.size(); ++i)
      if (mors[i].name == n) return i;
    return -1;
  }

  bool composable(int g, int f) const { return mors[f].dst == mors[g].src; }

  int compose(int g, int f) const {
    require(composable(g, f), "compose: endpoints do not match");
    return comp[g][f];
  }

  /// Builds and validates. Throws on a partial, ill-typed, or
  /// non-associative table.
  static FinSemicat make(std::vector<std::string> objects, std::vector<Mor> mors,
                         std::vector<std::vector<int>> comp) {
    FinSemicat c;
    c.objects = std::move(objects);
    c.mors = std::move(mors);
    c.comp = std::move(comp);
    int nm = (int)c.mors.size();
    require((int)c.comp.size() == nm, "semicat: composition table has wrong shape");
    for (int g = 0; g < nm; ++g) {
      require((int)c.comp[g].size() == nm, "semicat: composition table has wrong shape");
      for (int f = 0; f < nm; ++f) {
        int r = c.comp[g][f];
        if (!c.composable(g, f)) {
          require(r == -1, "semicat: entry for non-composable pair " +
                               c.mors[g].name + " . " + c.mors[f].name);
        } else {
          require(r >= 0 && r < nm, "semicat: missing composite " + c.mors[g].name +
                                        " . " + c.mors[f].name);
          require(c.mors[r].src == c.mors[f].src && c.mors[r].dst == c.mors[g].dst,
                  "semicat: composite " + c.mors[g].name + " . " + c.mors[f].name +
                      " has wrong endpoints");
        }
      }
    }
    for (int f = 0; f < nm; ++f)
      for (int g = 0; g < nm; ++g) {
        if (!c.composable(g, f)) continue;
        for (int h = 0; h < nm; ++h) {
          if (!c.composable(h, g)) continue;
          int lhs = c.comp[c.comp[h][g]][f];
          int rhs = c.comp[h][c.comp[g][f]];
          require(lhs == rhs, "semicat: associativity fails at (" + c.mors[h].name +
                                  ", " + c.mors[g].name + ", " + c.mors[f].name + ")");
        }
      }
    return c;
  }
};

/// A morphism e : x -> y is an equivalence when all pre- and post-composition
/// translations by e are bijections between the respective hom sets.
inline bool is_equivalence(const FinSemicat& c, int e) {
  int x = c.mors[e].src, y = c.mors[e].dst;
  for (int z = 0; z < (int)c.objects.size(); ++z) {
    // (- . e) : hom(y,z) -> hom(x,z)
    auto dom = c.hom(y, z), cod = c.hom(x, z);
    std::vector<bool> hit(c.mors.size(), false);
    for (int h : dom) {
      int r = c.comp[h][e];
      if (hit[r]) return false;
      hit[r] = true;
    }
    for (int r : cod)
      if (!hit[r]) return false;
  }
  for (int w = 0; w < (int)c.objects.size(); ++w) {
    // (e . -) : hom(w,x) -> hom(w,y)
    auto dom = c.hom(w, x), cod = c.hom(w, y);
    std::vector<bool> hit(c.mors.size(), false);
    for (int f : dom) {
      int r = c.comp[e][f];
      if (hit[r]) return false;
      hit[r] = true;
    }
    for (int r : cod)
      if (!hit[r]) return false;
  }
  return true;
}

/// Self-morphisms of x that are equivalences and idempotent.
inline std::vector<int> good_identities(const FinSemicat& c, int x) {
  std::vector<int> out;
  for (int i : c.hom(x, x))
    if (c.comp[i][i] == i && is_equivalence(c, i)) out.push_back(i);
  return out;
}

struct SemicatIdentityReport {
  bool exists = false;
  std::vector<int> identity;           // per object, -1 when absent
  std::vector<int> multiple;           // objects with >= 2 good identities
  std::vector<std::vector<int>> good;  // per object
};

inline SemicatIdentityReport identity_structure(const FinSemicat& c) {
  SemicatIdentityReport rep;
  int no = (int)c.objects.size();
  rep.identity.assign(no, -1);
  rep.good.resize(no);
  rep.exists = true;
  for (int x = 0; x < no; ++x) {
    rep.good[x] = good_identities(c, x);
    if (rep.good[x].size() >= 2) rep.multiple.push_back(x);
    if (rep.good[x].size() == 1) rep.identity[x] = rep.good[x][0];
    else rep.exists = false;
  }
  return rep;
}

/// Checks, for every self-morphism i, the biconditional
///   i is a good identity  <=>  i . f = f and g . i = g for all composable f, g.
struct IdCharacterisationReport {
  bool pass = true;
  struct Counterexample {
    int i;
    bool claimed_good;  // left side of the biconditional
    std::string detail;
  };
  std::vector<Counterexample> counterexamples;
};

inline IdCharacterisationReport check_id_characterisation(const FinSemicat& c) {
  IdCharacterisationReport rep;
  for (int i = 0; i < (int)c.mors.size(); ++i) {
    if (c.mors[i].src != c.mors[i].dst) continue;
    int x = c.mors[i].src;
    bool good = c.comp[i][i] == i && is_equivalence(c, i);
    bool neutral = true;
    std::string why;
    for (int f = 0; f < (int)c.mors.size() && neutral; ++f) {
      if (c.mors[f].dst == x && c.comp[i][f] != f) {
        neutral = false;
        why = "i . " + c.mors[f].name + " != " + c.mors[f].name;
      }
      if (neutral && c.mors[f].src == x && c.comp[f][i] != f) {
        neutral = false;
        why = c.mors[f].name + " . i != " + c.mors[f].name;
      }
    }
    if (good != neutral) {
      rep.pass = false;
      rep.counterexamples.push_back({i, good, why});
    }
  }
  return rep;
}

/// I(e): the unique i : x -> x with e . i = e, for an equivalence e : x -> y.
/// The result is asserted to be a good identity.
inline int I_of(const FinSemicat& c, int e) {
  require(is_equivalence(c, e), "I_of: morphism is not an equivalence");
  int x = c.mors[e].src;
  int found = -1;
  for (int i : c.hom(x, x))
    if (c.comp[e][i] == e) {
      require(found < 0, "I_of: (e . -) preimage not unique");
      found = i;
    }
  require(found >= 0, "I_of: no preimage of e under (e . -)");
  require(c.comp[found][found] == found && is_equivalence(c, found),
          "I_of: extracted morphism is not a good identity");
  return found;
}

/// Nerve: level n cells are composable chains (f1, ..., fn); outer faces
/// drop an end morphism, inner face i composes f_{i+1} . f_i. Level-1 cells
/// are the morphisms, level-0 cells the objects.
inline FinSSet nerve(const FinSemicat& c, int cap) {
  require(cap >= 0, "nerve: cap must be >= 0");
  FinSSet a = FinSSet::empty(cap);
  for (const auto& o : c.objects) a.add_cell(0, o);

  // chains[n][i] = morphism list of cell i at level n (n >= 1)
  std::vector<std::vector<std::vector<int>>> chains(cap + 1);
  auto chain_name = [&](const std::vector<int>& ch) {
    std::string s;
    for (size_t i = 0; i < ch.size(); ++i) {
      if (i) s += '.';
      s += c.mors[ch[i]].name;
    }
    return s;
  };
  auto find_chain = [&](int n, const std::vector<int>& ch) {
    for (int i = 0; i < (int)chains[n].size(); ++i)
      if (chains[n][i] == ch) return i;
    return -1;
  };
  for (int n = 1; n <= cap; ++n) {
    // extend each (n-1)-chain by each compatible morphism, in index order
    std::vector<std::vector<int>> prev =
        n == 1 ? std::vector<std::vector<int>>{{}} : chains[n - 1];
    if (n == 1) {
      for (int f = 0; f < (int)c.mors.size(); ++f)
        chains[1].push_back({f});
    } else {
      for (const auto& ch : prev)
        for (int f = 0; f < (int)c.mors.size(); ++f)
          if (c.mors[f].src == c.mors[ch.back()].dst) {
            auto ext = ch;
            ext.push_back(f);
            chains[n].push_back(ext);
          }
    }
    for (const auto& ch : chains[n]) {
      std::vector<int> frefs(n + 1, -1);
      if (n == 1) {
        frefs[0] = c.mors[ch[0]].dst;  // d0 keeps the target vertex
        frefs[1] = c.mors[ch[0]].src;
      } else {
        for (int i = 0; i <= n; ++i) {
          std::vector<int> sub;
          if (i == 0) sub.assign(ch.begin() + 1, ch.end());
          else if (i == n) sub.assign(ch.begin(), ch.end() - 1);
          else {
            sub.assign(ch.begin(), ch.end());
            sub[i - 1] = c.comp[ch[i]][ch[i - 1]];
            sub.erase(sub.begin() + i);
          }
          frefs[i] = find_chain(n - 1, sub);
        }
      }
      a.add_cell(n, chain_name(ch), std::move(frefs));
    }
  }
  return a;
}

/// Endpoints swapped, composition arguments flipped. Involutive.
inline FinSemicat opposite(const FinSemicat& c) {
  FinSemicat o = c;
  for (auto& m : o.mors) std::swap(m.src, m.dst);
  for (int g = 0; g < (int)c.mors.size(); ++g)
    for (int f = 0; f < (int)c.mors.size(); ++f) o.comp[g][f] = c.comp[f][g];
  return o;
}

/// Slice over an object g: objects are morphisms into g; a morphism
/// (a,f) -> (b,h) is m : a -> b with h . m = f. Composition is inherited.
struct SliceResult {
  FinSemicat slice;
  std::vector<int> object_of;  // slice object index -> original morphism index
  // identity-lift report: when the base has an identity structure, the slice
  // must have one, with the identity over (a, f) being the identity of a.
  bool base_has_identities = false;
  bool lifted = false;
};

inline SliceResult slice(const FinSemicat& c, int g) {
  require(g >= 0 && g < (int)c.objects.size(), "slice: no such object");
  SliceResult res;
  FinSemicat& s = res.slice;
  std::vector<int> mor_of;           // slice morphism -> base morphism
  std::vector<std::pair<int, int>> ends;  // slice morphism -> (src obj, dst obj)
  for (int f = 0; f < (int)c.mors.size(); ++f)
    if (c.mors[f].dst == g) {
      res.object_of.push_back(f);
      s.objects.push_back(c.mors[f].name);
    }
  auto obj_index = [&](int f) {
    for (int i = 0; i < (int)res.object_of.size(); ++i)
      if (res.object_of[i] == f) return i;
    return -1;
  };
  for (int a = 0; a < (int)s.objects.size(); ++a)
    for (int b = 0; b < (int)s.objects.size(); ++b) {
      int fa = res.object_of[a], fb = res.object_of[b];
      for (int m = 0; m < (int)c.mors.size(); ++m) {
        if (c.mors[m].src != c.mors[fa].src || c.mors[m].dst != c.mors[fb].src) continue;
        if (c.comp[fb][m] != fa) continue;
        s.mors.push_back({a, b, c.mors[m].name + "/" + s.objects[b]});
        mor_of.push_back(m);
        ends.push_back({a, b});
      }
    }
  int nm = (int)s.mors.size();
  s.comp.assign(nm, std::vector<int>(nm, -1));
  for (int q = 0; q < nm; ++q)
    for (int p = 0; p < nm; ++p) {
      if (s.mors[p].dst != s.mors[q].src) continue;
      int base = c.comp[mor_of[q]][mor_of[p]];
      // locate the slice morphism with the right endpoints and underlying map
      int found = -1;
      for (int r = 0; r < nm; ++r)
        if (mor_of[r] == base && s.mors[r].src == s.mors[p].src &&
            s.mors[r].dst == s.mors[q].dst) {
          found = r;
          break;
        }
      require(found >= 0, "slice: composite escaped the slice");
      s.comp[q][p] = found;
    }
  s = FinSemicat::make(s.objects, s.mors, s.comp);

  auto base_ids = identity_structure(c);
  res.base_has_identities = base_ids.exists;
  if (base_ids.exists) {
    auto slice_ids = identity_structure(s);
    res.lifted = slice_ids.exists;
    if (res.lifted) {
      for (int a = 0; a < (int)s.objects.size(); ++a) {
        int fa = res.object_of[a];
        int want = base_ids.identity[c.mors[fa].src];
        res.lifted = res.lifted && mor_of[slice_ids.identity[a]] == want;
      }
    }
  }
  (void)obj_index;
  return res;
}

/// Functor from a finite semicategory to finite sets: a carrier per object
/// and a function per morphism, required to preserve composition.
struct FinSetFunctor {
  FinSemicat base;
  std::vector<std::vector<std::string>> carrier;  // element names per object
  std::vector<std::vector<int>> action;           // per morphism, index table

  static FinSetFunctor make(FinSemicat base, std::vector<std::vector<std::string>> carrier,
                            std::vector<std::vector<int>> action) {
    FinSetFunctor f;
    f.base = std::move(base);
    f.carrier = std::move(carrier);
    f.action = std::move(action);
    require(f.carrier.size() == f.base.objects.size(), "functor: carrier count mismatch");
    require(f.action.size() == f.base.mors.size(), "functor: action count mismatch");
    for (int m = 0; m < (int)f.base.mors.size(); ++m) {
      const auto& mor = f.base.mors[m];
      require((int)f.action[m].size() == (int)f.carrier[mor.src].size(),
              "functor: action table arity mismatch for " + mor.name);
      for (int v : f.action[m])
        require(v >= 0 && v < (int)f.carrier[mor.dst].size(),
                "functor: action value out of range for " + mor.name);
    }
    for (int g2 = 0; g2 < (int)f.base.mors.size(); ++g2)
      for (int f2 = 0; f2 < (int)f.base.mors.size(); ++f2) {
        if (!f.base.composable(g2, f2)) continue;
        int c2 = f.base.comp[g2][f2];
        for (int x = 0; x < (int)f.action[f2].size(); ++x)
          require(f.action[c2][x] == f.action[g2][f.action[f2][x]],
                  "functor: action not functorial at " + f.base.mors[g2].name + " . " +
                      f.base.mors[f2].name);
      }
    return f;
  }
};

/// Category of elements plus the projection between nerves (computed to
/// level `cap`), which should classify as a left fibration.
struct ElementsResult {
  FinSemicat elements;
  std::vector<std::pair<int, int>> object_of;  // element object -> (base obj, elem)
  std::vector<int> mor_of;                     // element morphism -> base morphism
  SSetMap projection;                          // nerve(elements) -> nerve(base)
};

inline ElementsResult category_of_elements(const FinSetFunctor& f, int cap = 3) {
  ElementsResult res;
  FinSemicat& e = res.elements;
  const FinSemicat& b = f.base;
  for (int a = 0; a < (int)b.objects.size(); ++a)
    for (int x = 0; x < (int)f.carrier[a].size(); ++x) {
      e.objects.push_back(b.objects[a] + "@" + f.carrier[a][x]);
      res.object_of.push_back({a, x});
    }
  auto eobj = [&](int a, int x) {
    for (int i = 0; i < (int)res.object_of.size(); ++i)
      if (res.object_of[i] == std::make_pair(a, x)) return i;
    return -1;
  };
  for (int i = 0; i < (int)e.objects.size(); ++i) {
    auto [a, x] = res.object_of[i];
    for (int m = 0; m < (int)b.mors.size(); ++m) {
      if (b.mors[m].src != a) continue;
      int j = eobj(b.mors[m].dst, f.action[m][x]);
      e.mors.push_back({i, j, b.mors[m].name + "@" + f.carrier[a][x]});
      res.mor_of.push_back(m);
    }
  }
  int nm = (int)e.mors.size();
  e.comp.assign(nm, std::vector<int>(nm, -1));
  for (int q = 0; q < nm; ++q)
    for (int p = 0; p < nm; ++p) {
      if (e.mors[p].dst != e.mors[q].src) continue;
      int base = b.comp[res.mor_of[q]][res.mor_of[p]];
      int found = -1;
      for (int r = 0; r < nm; ++r)
        if (res.mor_of[r] == base && e.mors[r].src == e.mors[p].src) {
          found = r;
          break;
        }
      require(found >= 0, "category_of_elements: composite not found");
      e.comp[q][p] = found;
    }
  e = FinSemicat::make(e.objects, e.mors, e.comp);

  // projection on nerves: chains map by the underlying morphisms
  FinSSet en = nerve(e, cap);
  FinSSet bn = nerve(b, cap);
  SSetMap proj;
  proj.level_maps.resize(cap + 1);
  for (int i = 0; i < (int)e.objects.size(); ++i)
    proj.level_maps[0].push_back(res.object_of[i].first);
  for (int n = 1; n <= cap; ++n) {
    for (int cidx = 0; cidx < en.cell_count(n); ++cidx) {
      // recover the chain by splitting the name on '.', then map each
      // morphism through mor_of
      std::string nm2 = en.names[n][cidx];
      std::vector<int> chain;
      size_t pos = 0;
      while (pos <= nm2.size()) {
        size_t dot = nm2.find('.', pos);
        std::string part = nm2.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        chain.push_back(e.find_mor(part));
        if (dot == std::string::npos) break;
        pos = dot + 1;
      }
      std::string bname;
      for (size_t t = 0; t < chain.size(); ++t) {
        if (t) bname += '.';
        bname += b.mors[res.mor_of[chain[t]]].name;
      }
      proj.level_maps[n].push_back(bn.find_cell(n, bname));
    }
  }
  proj.source = std::move(en);
  proj.target = std::move(bn);
  res.projection = std::move(proj);
  return res;
}

/// (x, u) represents the functor iff for every object y and element v there
/// is exactly one f : x -> y with action(f)(u) = v.
inline bool representation_check(const FinSetFunctor& f, int x, int u) {
  require(x >= 0 && x < (int)f.base.objects.size(), "representation_check: no such object");
  require(u >= 0 && u < (int)f.carrier[x].size(), "representation_check: no such element");
  for (int y = 0; y < (int)f.base.objects.size(); ++y)
    for (int v = 0; v < (int)f.carrier[y].size(); ++v) {
      int cnt = 0;
      for (int m : f.base.hom(x, y)) cnt += (f.action[m][u] == v);
      if (cnt != 1) return false;
    }
  return true;
}

/// True iff the action of every good identity of the base is a bijection on
/// its carrier.
inline bool functor_id_preserving(const FinSetFunctor& f) {
  auto ids = identity_structure(f.base);
  require(ids.exists, "functor_id_preserving: base has no identity structure");
  for (int x = 0; x < (int)f.base.objects.size(); ++x) {
    for (int i : good_identities(f.base, x)) {
      std::vector<bool> hit(f.carrier[x].size(), false);
      for (int v : f.action[i]) {
        if (hit[v]) return false;
        hit[v] = true;
      }
    }
  }
  return true;
}

// --- exhaustive enumeration -------------------------------------------------

/// Bounds for brute-force generation of labeled semicategories.
struct EnumSpec {
  int max_objects = 0;
  int max_total_morphisms = 0;
};

/// Every associative labeled composition table over every object count
/// 0..max_objects and hom-size matrix summing to <= max_total_morphisms.
/// Deterministic order: object count, then hom matrix (row-major lex), then
/// table entries (row-major lex). The feasibility guard rejects bounds past
/// max_total_morphisms = 4.
inline void for_each_semicat(const EnumSpec& spec,
                             const std::function<void(const FinSemicat&)>& visit) {
  require(spec.max_objects >= 0 && spec.max_total_morphisms >= 0,
          "enumerate_semicats: bounds must be >= 0");
  require(spec.max_total_morphisms <= 4,
          "enumerate_semicats: bound exceeded (max_total_morphisms <= 4)");
  require(spec.max_objects <= 4, "enumerate_semicats: bound exceeded (max_objects <= 4)");

  for (int nobj = 0; nobj <= spec.max_objects; ++nobj) {
    // hom-size matrix, row-major
    std::vector<int> sizes(nobj * nobj, 0);
    std::function<void(int, int)> pick_sizes = [&](int cell, int used) {
      if (cell == nobj * nobj) {
        // materialise morphisms in matrix order
        FinSemicat c;
        for (int i = 0; i < nobj; ++i) c.objects.push_back("x" + std::to_string(i));
        for (int a = 0; a < nobj; ++a)
          for (int b = 0; b < nobj; ++b)
            for (int t = 0; t < sizes[a * nobj + b]; ++t) {
              c.mors.push_back({a, b, "m" + std::to_string(c.mors.size())});
            }
        int nm = (int)c.mors.size();
        c.comp.assign(nm, std::vector<int>(nm, -1));
        // composable pairs in (g, f) row-major order
        std::vector<std::pair<int, int>> pairs;
        for (int g = 0; g < nm; ++g)
          for (int f2 = 0; f2 < nm; ++f2)
            if (c.composable(g, f2)) pairs.push_back({g, f2});

        // DFS over table entries with incremental associativity pruning
        std::function<bool()> consistent = [&]() {
          for (int f2 = 0; f2 < nm; ++f2)
            for (int g = 0; g < nm; ++g) {
              if (!c.composable(g, f2) || c.comp[g][f2] < 0) continue;
              for (int h = 0; h < nm; ++h) {
                if (!c.composable(h, g) || c.comp[h][g] < 0) continue;
                int hg = c.comp[h][g], gf = c.comp[g][f2];
                if (c.comp[hg][f2] < 0 || c.comp[h][gf] < 0) continue;
                if (c.comp[hg][f2] != c.comp[h][gf]) return false;
              }
            }
          return true;
        };
        std::function<void(size_t)> fill = [&](size_t at) {
          if (at == pairs.size()) {
            visit(FinSemicat::make(c.objects, c.mors, c.comp));
            return;
          }
          auto [g, f2] = pairs[at];
          auto targets = c.hom(c.mors[f2].src, c.mors[g].dst);
          for (int r : targets) {
            c.comp[g][f2] = r;
            if (consistent()) fill(at + 1);
          }
          c.comp[g][f2] = -1;
        };
        fill(0);
        return;
      }
      for (int s = 0; used + s <= spec.max_total_morphisms; ++s) {
        sizes[cell] = s;
        pick_sizes(cell + 1, used + s);
      }
      sizes[cell] = 0;
    };
    pick_sizes(0, 0);
  }
}

inline std::vector<FinSemicat> enumerate_semicats(const EnumSpec& spec) {
  std::vector<FinSemicat> out;
  for_each_semicat(spec, [&](const FinSemicat& c) { out.push_back(c); });
  return out;
}

/// All functors from `base` to finite sets with carriers of size
/// 0..max_carrier, deterministically ordered. Used as a brute-force fixture
/// source for representability and fibration checks.
inline std::vector<FinSetFunctor> enumerate_functors(const FinSemicat& base, int max_carrier) {
  std::vector<FinSetFunctor> out;
  int nobj = (int)base.objects.size();
  int nm = (int)base.mors.size();
  std::vector<int> csize(nobj, 0);
  std::function<void(int)> pick_sizes = [&](int at) {
    if (at == nobj) {
      std::vector<std::vector<std::string>> carrier(nobj);
      for (int a = 0; a < nobj; ++a)
        for (int x = 0; x < csize[a]; ++x) carrier[a].push_back("e" + std::to_string(x));
      // choose each action table in odometer order; reject non-functorial
      std::vector<std::vector<int>> action(nm);
      std::function<void(int)> pick_action = [&](int m) {
        if (m == nm) {
          // make() validates functoriality; cheap pre-check to avoid throws
          for (int g = 0; g < nm; ++g)
            for (int f2 = 0; f2 < nm; ++f2) {
              if (!base.composable(g, f2)) continue;
              int c2 = base.comp[g][f2];
              for (int x = 0; x < (int)action[f2].size(); ++x)
                if (action[c2][x] != action[g][action[f2][x]]) return;
            }
          out.push_back(FinSetFunctor::make(base, carrier, action));
          return;
        }
        int ds = csize[base.mors[m].src], dt = csize[base.mors[m].dst];
        if (ds > 0 && dt == 0) return;  // no function into an empty carrier
        std::vector<int> tab(ds, 0);
        std::function<void(int)> odo = [&](int pos) {
          if (pos == ds) {
            action[m] = tab;
            pick_action(m + 1);
            return;
          }
          for (int v = 0; v < dt; ++v) {
            tab[pos] = v;
            odo(pos + 1);
          }
        };
        if (ds == 0) {
          action[m] = {};
          pick_action(m + 1);
        } else {
          odo(0);
        }
        return;
      };
      pick_action(0);
      return;
    }
    for (int s = 0; s <= max_carrier; ++s) {
      csize[at] = s;
      pick_sizes(at + 1);
    }
  };
  pick_sizes(0);
  return out;
}

}  // namespace scwf
