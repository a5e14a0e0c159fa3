#include <doctest.h>

#include "cosop/conormalization.hpp"
#include "cosop/delta.hpp"
#include "cosop/errors.hpp"
#include "cosop/simplicial_set.hpp"

using namespace cosop;

TEST_CASE("cofaces and codegeneracies") {
  CHECK(coface(1, 0).values == std::vector<int>{1, 2});
  CHECK(coface(1, 2).values == std::vector<int>{0, 1});
  CHECK(codegeneracy(1, 0).values == std::vector<int>{0, 0});
  CHECK(codegeneracy(2, 1).values == std::vector<int>{0, 1, 1});
  CHECK_THROWS_AS(coface(1, 3), IndexOutOfRange);
  CHECK_THROWS_AS(codegeneracy(1, 1), IndexOutOfRange);
  CHECK_THROWS_AS(OrderedMap(2, {1, 0}), InvalidInput);
}

TEST_CASE("cosimplicial identities up to level 6") {
  for (int m = 0; m <= 6; ++m) {
    for (int j = 0; j <= m + 2; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(coface(m + 1, j), coface(m, i)) == compose(coface(m + 1, i), coface(m, j - 1)));
    for (int j = 0; j + 1 < m; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(codegeneracy(m - 1, j), codegeneracy(m, i)) ==
              compose(codegeneracy(m - 1, i), codegeneracy(m, j + 1)));
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= m + 1; ++i) {
        const auto lhs = compose(codegeneracy(m + 1, j), coface(m, i));
        if (i < j)
          CHECK(lhs == compose(coface(m - 1, i), codegeneracy(m, j - 1)));
        else if (i == j || i == j + 1)
          CHECK(lhs.is_identity());
        else
          CHECK(lhs == compose(coface(m - 1, i - 1), codegeneracy(m, j)));
      }
  }
}

TEST_CASE("epi-mono factorization examples") {
  auto [e1, m1] = factor_epi_mono(OrderedMap(2, {0, 0, 1}));
  CHECK(e1.values == std::vector<int>{0, 0, 1});
  CHECK(m1.is_identity());
  auto [e2, m2] = factor_epi_mono(OrderedMap(3, {1, 2}));
  CHECK(e2.is_identity());
  CHECK(m2.values == std::vector<int>{1, 2});
  auto [e3, m3] = factor_epi_mono(OrderedMap(3, {0, 0, 2}));
  CHECK(e3.values == std::vector<int>{0, 0, 1});
  CHECK(m3.values == std::vector<int>{0, 2});
}

TEST_CASE("epi-mono factorization is a bijection for sizes up to 6") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      std::size_t pairs = 0;
      for (int c = 1; c <= std::min(a, b); ++c) {
        std::size_t epis = 0;
        for (const auto& e : all_ordered_maps(a, c)) epis += e.surjective();
        pairs += epis * all_injections(c, b).size();
      }
      const auto maps = all_ordered_maps(a, b);
      CHECK(maps.size() == pairs);
      for (const auto& phi : maps) {
        auto [e, m] = factor_epi_mono(phi);
        CHECK(e.surjective());
        CHECK(m.injective());
        CHECK(compose(m, e) == phi);
      }
    }
}

TEST_CASE("standard simplex chains") {
  const auto c1 = standard_simplex_chains(1);
  CHECK(c1.rank(0) == 2);
  CHECK(c1.rank(1) == 1);
  CHECK(c1.differential(1) == IntMatrix::from_dense({{-1}, {1}}));
  const auto c2 = standard_simplex_chains(2);
  CHECK(c2.rank(0) == 3);
  CHECK(c2.rank(1) == 3);
  CHECK(c2.rank(2) == 1);
  CHECK(c2.homology(0) == HomologyGroup{1, {}});
  CHECK(c2.homology(1) == HomologyGroup{});
  CHECK(c2.homology(2) == HomologyGroup{});
  const auto c0 = standard_simplex_chains(0);
  CHECK(c0.rank(0) == 1);
  CHECK(c0.rank(1) == 0);
}

TEST_CASE("normalized cochains of small simplicial sets") {
  const auto d1 = cochains(FiniteSimplicialSet::standard_simplex(1));
  CHECK(d1.rank(0) == 2);
  CHECK(d1.rank(-1) == 1);
  CHECK(cochains(FiniteSimplicialSet::point()).rank(0) == 1);
  const auto s1 = cochains(FiniteSimplicialSet::circle());
  CHECK(s1.homology(0) == HomologyGroup{1, {}});
  CHECK(s1.homology(-1) == HomologyGroup{1, {}});
}

TEST_CASE("simplicial sets: faces, degeneracies and restriction") {
  const auto w = FiniteSimplicialSet::standard_simplex(2);
  const auto top = w.generator_simplex(w.find("0.1.2"));
  CHECK(w.face(top, 1) == w.generator_simplex(w.find("0.2")));
  CHECK(w.apply(OrderedMap(3, {0, 2}), top) == w.generator_simplex(w.find("0.2")));
  const auto dgn = w.degeneracy(w.generator_simplex(w.find("0")), 0);
  CHECK_FALSE(dgn.nondegenerate());
  CHECK(w.face(dgn, 0) == w.generator_simplex(w.find("0")));
  CHECK(w.simplices(1).size() == 6);  // 3 edges and 3 degenerate vertices
}

TEST_CASE("json round trip and validation") {
  const auto w = FiniteSimplicialSet::sphere(2);
  const auto back = FiniteSimplicialSet::from_json(w.to_json());
  CHECK(back.nondegenerate_count() == w.nondegenerate_count());
  CHECK(back.to_json() == w.to_json());
  nlohmann::json bad = {{"simplices",
                         {{{"name", "a"}, {"dim", 0}},
                          {{"name", "b"}, {"dim", 0}},
                          {{"name", "e"}, {"dim", 1}, {"faces", {"a", "b"}}},
                          {{"name", "t"}, {"dim", 2}, {"faces", {"e", "e", "e"}}}}}};
  CHECK_THROWS_AS(FiniteSimplicialSet::from_json(bad), InvalidInput);
}

TEST_CASE("cochains match the kernel conormalization of the dual") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto w = FiniteSimplicialSet::random(seed, 10);
    const int top = w.dimension() + 1;
    const auto direct = cochains(w);
    const auto kernel = conormalize_kernel(dual_cosimplicial_group(w, top + 1));
    for (int m = 0; m <= top; ++m) CHECK(direct.rank(-m) == kernel.rank(-m));
    for (int m = 0; m < top; ++m)
      CHECK(direct.homology(-m) == kernel.homology(-m));
    CHECK(direct.d_squared_zero());
  }
}
