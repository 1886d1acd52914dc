#include <catch2/catch_amalgamated.hpp>

#include "scwf/simplex.hpp"

using namespace scwf;

TEST_CASE("enumerate_monotone counts and order") {
  auto maps = enumerate_monotone(1, 2);
  REQUIRE(maps.size() == 3);
  REQUIRE(maps[0].values == std::vector<int>{0, 1});
  REQUIRE(maps[1].values == std::vector<int>{0, 2});
  REQUIRE(maps[2].values == std::vector<int>{1, 2});

  auto id0 = enumerate_monotone(0, 0);
  REQUIRE(id0.size() == 1);
  REQUIRE(id0[0].values == std::vector<int>{0});

  REQUIRE(enumerate_monotone(2, 1).empty());

  for (int i = 0; i <= 5; ++i)
    for (int j = i; j <= 5; ++j) {
      auto ms = enumerate_monotone(i, j);
      REQUIRE(ms.size() == binomial(j + 1, i + 1));
      for (size_t t = 0; t < ms.size(); ++t) {
        REQUIRE(ms[t].valid());
        if (t > 0) REQUIRE(ms[t - 1].values < ms[t].values);
      }
    }
}

TEST_CASE("compose_monotone basics") {
  // face(2,0) . face(1,0) skips 0 twice: [0] -> [2] hitting 2
  auto c = compose_monotone(face_map(2, 0), face_map(1, 0));
  REQUIRE(c.dom == 0);
  REQUIRE(c.cod == 2);
  REQUIRE(c.values == std::vector<int>{2});

  for (const auto& f : enumerate_monotone(2, 4)) {
    auto lhs = compose_monotone(identity_monotone(4), f);
    REQUIRE(lhs == f);
    auto rhs = compose_monotone(f, identity_monotone(2));
    REQUIRE(rhs == f);
  }

  REQUIRE_THROWS_AS(compose_monotone(face_map(1, 0), face_map(3, 1)), error);
}

TEST_CASE("cosimplicial identity d_j . d_i = d_i . d_{j-1} for i < j") {
  // spot check from the spec
  REQUIRE(compose_monotone(face_map(2, 2), face_map(1, 0)) ==
          compose_monotone(face_map(2, 0), face_map(1, 1)));
  // exhaustive over all faces up to dimension 4
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        REQUIRE(compose_monotone(face_map(n, j), face_map(n - 1, i)) ==
                compose_monotone(face_map(n, i), face_map(n - 1, j - 1)));
}

TEST_CASE("composition of monotone maps is associative and monotone") {
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = b; c <= 4; ++c)
        for (int d = c; d <= 4; ++d)
          for (const auto& f : enumerate_monotone(a, b))
            for (const auto& g : enumerate_monotone(b, c))
              for (const auto& h : enumerate_monotone(c, d)) {
                auto gf = compose_monotone(g, f);
                REQUIRE(gf.valid());
                REQUIRE(compose_monotone(h, gf) ==
                        compose_monotone(compose_monotone(h, g), f));
              }
}

TEST_CASE("face_map values") {
  REQUIRE(face_map(1, 0).values == std::vector<int>{1});
  REQUIRE(face_map(2, 1).values == std::vector<int>{0, 2});
  REQUIRE(face_map(3, 3).values == std::vector<int>{0, 1, 2});
  REQUIRE_THROWS_AS(face_map(2, 3), error);
}

static std::vector<int> level_counts(const FinSSet& a) {
  std::vector<int> out;
  for (int n = 0; n <= a.max_level; ++n) out.push_back(a.cell_count(n));
  return out;
}

TEST_CASE("standard simplex cell counts") {
  REQUIRE(level_counts(standard_simplex(2, 2)) == std::vector<int>{3, 3, 1});
  REQUIRE(level_counts(standard_simplex(3, 2)) == std::vector<int>{4, 6, 4});
  REQUIRE(level_counts(standard_simplex(1, 3)) == std::vector<int>{2, 1, 0, 0});
  for (int n = 0; n <= 5; ++n) {
    auto a = standard_simplex(n, 5);
    REQUIRE(validate(a).ok());
    for (int m = 0; m <= 5; ++m)
      REQUIRE(a.cell_count(m) == (int)binomial(n + 1, m + 1));
  }
}

TEST_CASE("horn cell counts follow the removal rule") {
  REQUIRE(level_counts(horn(2, 1, 2)) == std::vector<int>{3, 2, 0});
  REQUIRE(level_counts(horn(3, 1, 3)) == std::vector<int>{4, 6, 3, 0});

  // oracle: standard simplex counts minus the two removed cells
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      auto h = horn(n, k, n);
      REQUIRE(validate(h).ok());
      for (int m = 0; m <= n; ++m) {
        int expect = (int)binomial(n + 1, m + 1);
        if (m == n || m == n - 1) expect -= 1;
        REQUIRE(h.cell_count(m) == expect);
      }
    }

  // the missing edge of horn(2,0,2) runs from vertex 1 to vertex 2
  auto h20 = horn(2, 0, 2);
  REQUIRE(h20.find_cell(1, "12") == -1);
  REQUIRE(h20.find_cell(1, "01") >= 0);
  REQUIRE(h20.find_cell(1, "02") >= 0);

  REQUIRE_THROWS_AS(horn(2, 3, 2), error);
}

TEST_CASE("horn embeds into the standard simplex") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      auto h = horn(n, k, n);
      auto s = standard_simplex(n, n);
      SSetMap incl;
      incl.level_maps.resize(n + 1);
      for (int m = 0; m <= n; ++m)
        for (int c = 0; c < h.cell_count(m); ++c) {
          int img = s.find_cell(m, h.names[m][c]);
          REQUIRE(img >= 0);
          incl.level_maps[m].push_back(img);
        }
      incl.source = h;
      incl.target = s;
      REQUIRE(validate_map(incl).ok());
      // injective level-wise
      for (int m = 0; m <= n; ++m) {
        auto lm = incl.level_maps[m];
        std::sort(lm.begin(), lm.end());
        REQUIRE(std::adjacent_find(lm.begin(), lm.end()) == lm.end());
      }
    }
}
