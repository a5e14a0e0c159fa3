#include <doctest.h>

#include "cosop/errors.hpp"
#include "cosop/hochschild.hpp"

using namespace cosop;

namespace {

HochschildCochain element(const FiniteRankAlgebra& r, std::vector<long> v) {
  HochschildCochain c = zero_cochain(r, 0);
  for (std::size_t i = 0; i < v.size(); ++i) c.coeffs[i] = v[i];
  return c;
}

}  // namespace

TEST_CASE("algebras validate") {
  CHECK(FiniteRankAlgebra::integers().rank() == 1);
  CHECK(FiniteRankAlgebra::dual_numbers(2).rank() == 2);
  CHECK(FiniteRankAlgebra::upper_triangular(2).rank() == 3);
  CHECK(FiniteRankAlgebra::matrices(2).rank() == 4);
  FiniteRankAlgebra::Tensor bad(2, std::vector<std::vector<Integer>>(2, std::vector<Integer>(2, 0)));
  bad[0][0][0] = 1;
  bad[0][1][1] = 1;
  bad[1][0][1] = 1;
  bad[1][1][0] = 1;
  bad[0][1][0] = 1;  // e0 e1 = e0 + e1, so e0 is no longer a unit
  CHECK_THROWS_AS(FiniteRankAlgebra("bad", CoefficientRing::ModP, 2, bad, {1, 0}), InvalidInput);
}

TEST_CASE("json round trip") {
  const auto r = FiniteRankAlgebra::upper_triangular(2);
  const auto back = FiniteRankAlgebra::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
}

TEST_CASE("degree 0 differential is a commutator") {
  const auto r = FiniteRankAlgebra::upper_triangular(2);
  // ρ = E11: dρ(a) = aρ - ρa
  const auto rho = element(r, {1, 0, 0});
  const auto d = hochschild_differential(r, rho);
  for (int a = 0; a < r.rank(); ++a) {
    std::vector<Integer> ea(r.rank(), 0);
    ea[a] = 1;
    const auto left = r.multiply(ea, rho.coeffs);
    const auto right = r.multiply(rho.coeffs, ea);
    for (int k = 0; k < r.rank(); ++k) CHECK(d.coeffs[a * r.rank() + k] == r.reduce(left[k] - right[k]));
  }
  const auto dual = FiniteRankAlgebra::dual_numbers(2);
  CHECK(hochschild_differential(dual, element(dual, {0, 1})).is_zero());
}

TEST_CASE("d squared is zero on the upper-triangular algebra") {
  const auto r = FiniteRankAlgebra::upper_triangular(2);
  for (int p = 0; p <= 2; ++p)
    for (std::size_t i = 0; i < cochain_size(r, p); ++i)
      CHECK(hochschild_differential(r, hochschild_differential(r, basis_cochain(r, p, i))).is_zero());
}

TEST_CASE("cup in degree 0 is multiplication and the unit is a unit") {
  const auto r = FiniteRankAlgebra::upper_triangular(2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto a = basis_cochain(r, 0, i), b = basis_cochain(r, 0, j);
      CHECK(hochschild_cup(r, a, b).coeffs == r.multiply(a.coeffs, b.coeffs));
    }
  const auto u = unit_cochain(r);
  for (int p = 0; p <= 2; ++p)
    for (std::size_t i = 0; i < cochain_size(r, p); ++i) {
      const auto x = basis_cochain(r, p, i);
      CHECK(hochschild_cup(r, u, x) == x);
      CHECK(hochschild_cup(r, x, u) == x);
    }
}

TEST_CASE("bracket of two degree 1 cochains is the commutator") {
  const auto r = FiniteRankAlgebra::dual_numbers(3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto a = basis_cochain(r, 1, i), b = basis_cochain(r, 1, j);
      const auto want = add(r, hochschild_circle(r, a, b), hochschild_circle(r, b, a), -1);
      CHECK(gerstenhaber_bracket(r, a, b) == want);
    }
}

TEST_CASE("cohomology of Z") {
  const auto h = hochschild_cohomology(FiniteRankAlgebra::integers(), 3);
  REQUIRE(h.size() == 4);
  CHECK(h[0].rank == 1);
  for (int p = 1; p <= 3; ++p) {
    CHECK(h[p].rank == 0);
    CHECK(h[p].torsion.empty());
  }
}

TEST_CASE("cohomology of the dual numbers mod 2") {
  const auto r = FiniteRankAlgebra::dual_numbers(2);
  const auto h = hochschild_cohomology(r, 3);
  for (const auto& g : h) CHECK(g.rank == 2);
  const auto o = hochschild_oracle(r, 3);
  CHECK(o.differentials_agree);
  CHECK(o.groups == h);
}

TEST_CASE("cohomology of 2x2 matrices mod 2") {
  const auto h = hochschild_cohomology(FiniteRankAlgebra::matrices(2), 2);
  CHECK(h[0].rank == 1);
  CHECK(h[1].rank == 0);
  CHECK(h[2].rank == 0);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(hochschild_cohomology(FiniteRankAlgebra::matrices(2), 8), InfeasibleSize);
}

TEST_CASE("report on the dual numbers and the skewed control") {
  const auto r = FiniteRankAlgebra::dual_numbers(2);
  const auto rep = hochschild_report(r, 3, 2);
  CAPTURE(rep.to_json().dump());
  CHECK(rep.passed());
  CHECK_FALSE(rep.certificates.empty());
  const auto bad = hochschild_report(r, 2, 2, skewed_cup());
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.check("cup_unit").passed());
}
