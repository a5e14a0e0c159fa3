#include <doctest.h>

#include "cosop/chain_operad.hpp"
#include "cosop/errors.hpp"
#include "cosop/operad_axioms.hpp"
#include "cosop/operad_homology.hpp"

using namespace cosop;

namespace {

Chain one(const Symbol& s) { return {{s, 1}}; }

}  // namespace

TEST_CASE("unit laws on degree 0 generators of T(2)") {
  const ChainOperad op;
  const auto unit = ChainOperad::unit_component(0);
  for (const auto& g : enumerate_symbols(2, 1, 0)) {
    CHECK(op.gamma(unit, {g}) == one(g));
    CHECK(op.gamma(g, {unit, unit}) == one(g));
  }
}

TEST_CASE("substituting 12 into the first slot of 12") {
  const ChainOperad op;
  const auto h = Symbol::make(2, 0, {1, 2}, {0, 0});
  const auto c = op.gamma(h, {h, ChainOperad::unit_component(0)});
  REQUIRE(c.size() == 1);
  CHECK(c[0].first.f_values() == std::vector<int>{1, 2, 3});
  CHECK(c[0].first.q() == 2);
  CHECK(c == op.gamma_matrix(h, {h, ChainOperad::unit_component(0)}));
}

TEST_CASE("degree additivity and agreement of the two composites") {
  const ChainOperad op;
  for (const auto& h : enumerate_symbols(2, 2, 1))
    for (const auto& a : enumerate_symbols(1, 1, 1))
      for (const auto& b : enumerate_symbols(2, 1, 0)) {
        const auto c = op.gamma(h, {a, b});
        CHECK(c == op.gamma_matrix(h, {a, b}));
        for (const auto& [s, coeff] : c) CHECK(s.degree() == h.degree() + a.degree() + b.degree());
      }
}

TEST_CASE("axioms hold in a small window") {
  AxiomPolicy pol;
  pol.k_max = 3;
  pol.qmax = 3;
  for (int n : {1, 2, 0}) {
    const ChainOperad op(n ? ComplexityBound(n) : ComplexityBound{});
    const auto rep = verify_operad_axioms(op, pol);
    CAPTURE(rep.to_json().dump());
    CHECK(rep.exhaustive);
    CHECK(rep.passed());
  }
}

TEST_CASE("a flipped sign breaks associativity") {
  AxiomPolicy pol;
  pol.k_max = 3;
  pol.qmax = 3;
  const ChainOperad op;
  const auto rep = verify_operad_axioms(op, pol, corrupted_gamma(op));
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.check("associativity").passed());
  CHECK_FALSE(rep.check("associativity").witnesses.empty());
}

TEST_CASE("sigma action is free in arity 2 and 3") {
  const ChainOperad op;
  for (int k : {2, 3})
    for (int p = -2; p <= 2; ++p)
      for (const auto& s : op.basis(k, p, 4))
        for (const auto& perm : permutations(k)) {
          if (perm == permutations(k).front()) continue;
          CHECK_FALSE(ChainOperad::act(one(s), perm) == one(s));
        }
}

TEST_CASE("homology of T(1), T(2) and T_1(2)") {
  const auto t1 = operad_homology(ComplexityBound{}, 1, 0, 2, 4);
  CHECK(t1.groups.at(0) == HomologyGroup{1, {}});
  CHECK(t1.groups.at(1) == HomologyGroup{});
  CHECK(t1.groups.at(2) == HomologyGroup{});
  const auto t2 = operad_homology(ComplexityBound{}, 2, 0, 1, 4);
  CHECK(t2.groups.at(0) == HomologyGroup{1, {}});
  CHECK(t2.groups.at(1) == HomologyGroup{});
  const auto t12 = operad_homology(ComplexityBound(1), 2, 0, 1, 4);
  CHECK(t12.groups.at(0) == HomologyGroup{2, {}});
  CHECK(t12.groups.at(1) == HomologyGroup{});
}

TEST_CASE("homology of T_2(2) is that of a circle") {
  const auto rep = operad_homology(ComplexityBound(2), 2, 0, 2, 5);
  CHECK(rep.groups.at(0) == HomologyGroup{1, {}});
  CHECK(rep.groups.at(1) == HomologyGroup{1, {}});
  CHECK(rep.groups.at(2) == HomologyGroup{});
}

TEST_CASE("little cubes comparison") {
  CHECK(little_cubes_comparison(1, 2, 0, 1, 4).match);
  CHECK(little_cubes_comparison(2, 1, 0, 1, 4).match);
  CHECK_THROWS_AS(little_cubes_comparison(3, 2, 0, 1, 4), UnsupportedInstance);
  const auto circle = cellular_cubes_model(2, 2);
  CHECK(circle.homology(0) == HomologyGroup{1, {}});
  CHECK(circle.homology(1) == HomologyGroup{1, {}});
}

TEST_CASE("homology window beyond qmax") {
  CHECK_THROWS_AS(operad_homology(ComplexityBound{}, 3, 0, 6, 2), WindowTooSmall);
}
