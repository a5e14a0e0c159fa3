#include <doctest.h>

#include <set>

#include "cosop/box_product.hpp"
#include "cosop/brute_colimit.hpp"
#include "cosop/chain_operad.hpp"
#include "cosop/errors.hpp"

using namespace cosop;

TEST_CASE("complexity worked examples") {
  CHECK(complexity({1, 1, 2, 2, 2, 1, 2, 2, 1, 1, 2}) == 5);
  CHECK(complexity({1, 2, 3, 1, 3, 2, 1, 2}) == 5);
  CHECK(complexity({1, 2, 1, 2, 1, 2}) == 5);
  CHECK(complexity({2, 3, 3, 2, 2}) == 2);
  CHECK(complexity({1, 3, 1, 3, 1}) == 4);
  CHECK(complexity({1, 1, 1}) == 0);
  CHECK(complexity({1, 1, 2, 2}) == 1);
  CHECK(complexity({}) == 0);
  CHECK(complexity({3}) == 0);
  CHECK_THROWS_AS(complexity({1, 0}), ValueOutOfRange);
  CHECK_THROWS_AS(ComplexityBound(0), ValueOutOfRange);
}

TEST_CASE("symbol enumeration examples") {
  const auto s = enumerate_symbols(2, 1, 0);
  REQUIRE(s.size() == 2);
  CHECK(s[0].f_values() == std::vector<int>{1, 2});
  CHECK(s[1].f_values() == std::vector<int>{2, 1});
  CHECK(s[0].phi_values() == std::vector<int>{0, 0});
  CHECK(enumerate_symbols(1, 1, 0).empty());
  CHECK(enumerate_symbols(2, 2, 0, ComplexityBound(1)).empty());
  const auto two = enumerate_symbols(2, 2, 0, ComplexityBound(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].f_values() == std::vector<int>{1, 2, 1});
  CHECK(two[1].f_values() == std::vector<int>{2, 1, 2});
}

TEST_CASE("symbols satisfy the normal form conditions") {
  for (int k = 1; k <= 3; ++k)
    for (int q = 0; q <= 4; ++q)
      for (int r = 0; r <= q + 1; ++r)
        for (const auto& s : enumerate_symbols(k, q, r)) {
          CHECK(s.onto());
          CHECK(s.condition_b());
          CHECK(s.condition_d());
        }
}

TEST_CASE("complexity filtration is monotone and exhausts") {
  for (int q = 0; q <= 5; ++q)
    for (int r = 0; r <= 2; ++r) {
      std::set<std::string> prev;
      for (int n = 1; n <= q + 1; ++n) {
        std::set<std::string> cur;
        for (const auto& s : enumerate_symbols(3, q, r, ComplexityBound(n))) cur.insert(s.label());
        for (const auto& l : prev) CHECK(cur.count(l));
        prev = cur;
      }
      CHECK(prev.size() == enumerate_symbols(3, q, r).size());
    }
}

TEST_CASE("transposition fixes no symbol of arity 2") {
  for (int q = 0; q <= 6; ++q)
    for (int r = 0; r <= q + 1; ++r)
      for (const auto& s : enumerate_symbols(2, q, r)) CHECK_FALSE(relabel(s, {2, 1}).first == s);
}

TEST_CASE("box level of arity one is the standard simplex") {
  for (int r = 0; r <= 3; ++r) {
    const auto b = box_level(1, ComplexityBound{}, r, r + 1);
    for (int m = 0; m <= r; ++m) {
      std::size_t binom = 1;
      for (int i = 0; i < m + 1; ++i) binom = binom * (r + 1 - i) / (i + 1);
      CHECK(b.rank(m) == binom);
    }
    CHECK(b.d_squared_zero());
  }
}

TEST_CASE("box level of arity two at [0]") {
  const auto b = box_level(2, ComplexityBound{}, 0, 3);
  CHECK(b.rank(1) == 2);
  CHECK(b.d_squared_zero());
}

TEST_CASE("cosimplicial identities of the box product") {
  for (int m = 0; m <= 2; ++m) CHECK_NOTHROW(box_cosimplicial_group(2, ComplexityBound{}, m, 3).validate());
  CHECK_NOTHROW(box_cosimplicial_group(3, ComplexityBound(2), 1, 3).validate());
}

TEST_CASE("brute-force colimit agrees with the canonical basis") {
  for (int k = 1; k <= 2; ++k)
    for (int r = 0; r <= 2; ++r)
      for (int m = 0; m + k <= 4; ++m) {
        const auto rep = brute_force_colimit(k, r, m, m + k + 1);
        CAPTURE(rep.to_json().dump());
        CHECK(rep.ok());
      }
}

TEST_CASE("functorial map with identity arguments is the identity") {
  // the unit of T(1) has one component id_r per level
  Chain unit;
  for (int r = 0; r <= 3; ++r) unit.push_back({ChainOperad::unit_component(r), 1});
  normalize(unit);
  const std::vector<Chain> ids{unit, unit};
  for (int r = 0; r <= 2; ++r) {
    const auto src = box_level(2, ComplexityBound{}, r, 3);
    const auto map = box_functorial_map(2, r, 3, ids, {1, 1}, ComplexityBound{}, ComplexityBound{}, 3);
    for (const auto& [deg, mat] : map.matrices) CHECK(mat == IntMatrix::identity(src.rank(deg)));
  }
}

TEST_CASE("cosimplicial action is natural for d0 from [0] to [1]") {
  for (const auto& s : enumerate_level_basis(2, 2, 0)) {
    const Chain lhs = act(coface(0, 0), internal_boundary(s));
    Chain rhs;
    if (auto moved = act(coface(0, 0), s)) rhs = internal_boundary(*moved);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("basis reconciliation for small cells") {
  const auto rep = reconcile_basis(3, 3);
  CHECK(rep.ok());
  CHECK(rep.functions == 68);
  CHECK(rep.counts.at("k2q1r0").first == 2);
}

TEST_CASE("symbol json") {
  const auto s = Symbol::make(2, 1, {1, 2, 1}, {0, 1, 1});
  CHECK(s.to_json() == nlohmann::json{{"k", 2}, {"r", 1}, {"f", {1, 2, 1}}, {"phi", {0, 1, 1}}});
  CHECK(s.degree() == 3 - 2 - 1);
}
