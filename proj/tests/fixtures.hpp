#pragma once

// Shared small fixtures used across the suites.

#include "scwf/semicat.hpp"

namespace fixtures {

using scwf::FinSemicat;
using scwf::FinSetFunctor;

// One object, one morphism f with f.f = f.
inline FinSemicat trivial() {
  return FinSemicat::make({"x"}, {{0, 0, "f"}}, {{0}});
}

// Z/2 as a one-object semicategory: hom = {e, g}, group table.
inline FinSemicat z2() {
  return FinSemicat::make({"x"}, {{0, 0, "e"}, {0, 0, "g"}},
                          {{0, 1}, {1, 0}});
}

// Z/3: hom = {e, g, h} with g.g = h, g.h = e.
inline FinSemicat z3() {
  return FinSemicat::make({"x"}, {{0, 0, "e"}, {0, 0, "g"}, {0, 0, "h"}},
                          {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

// One object, hom = {a, b}, x.y = a for all x, y (left-zero style constant
// table; associative, no identity).
inline FinSemicat constant2() {
  return FinSemicat::make({"x"}, {{0, 0, "a"}, {0, 0, "b"}},
                          {{0, 0}, {0, 0}});
}

// Codiscrete on two objects: every hom set a singleton.
inline FinSemicat codiscrete2() {
  std::vector<FinSemicat::Mor> mors = {
      {0, 0, "faa"}, {0, 1, "fab"}, {1, 0, "fba"}, {1, 1, "fbb"}};
  // composites determined by endpoints
  std::vector<std::vector<int>> comp(4, std::vector<int>(4, -1));
  auto idx = [&](int s, int d) {
    for (int i = 0; i < 4; ++i)
      if (mors[i].src == s && mors[i].dst == d) return i;
    return -1;
  };
  for (int g = 0; g < 4; ++g)
    for (int f = 0; f < 4; ++f)
      if (mors[f].dst == mors[g].src) comp[g][f] = idx(mors[f].src, mors[g].dst);
  return FinSemicat::make({"a", "b"}, mors, comp);
}

// Two objects, one morphism a -> b, nothing else.
inline FinSemicat single_arrow() {
  return FinSemicat::make({"a", "b"}, {{0, 1, "f"}},
                          {{-1}});
}

// Z/2 with carrier {0, 1}; e acts as identity, g as the swap.
inline FinSetFunctor z2_swap() {
  return FinSetFunctor::make(z2(), {{"0", "1"}}, {{0, 1}, {1, 0}});
}

}  // namespace fixtures
