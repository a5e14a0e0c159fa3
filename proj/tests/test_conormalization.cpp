#include <doctest.h>

#include "cosop/chain_operad.hpp"
#include "cosop/conormalization.hpp"
#include "cosop/errors.hpp"
#include "cosop/simplicial_set.hpp"

using namespace cosop;

TEST_CASE("dual of the 1-simplex") {
  const auto a = dual_cosimplicial_group(FiniteSimplicialSet::standard_simplex(1), 3);
  a.validate();
  const auto k = conormalize_kernel(a);
  const auto c = conormalize_cokernel(a);
  for (int m = 0; m <= 3; ++m) {
    const std::size_t want = m == 0 ? 2 : m == 1 ? 1 : 0;
    CHECK(k.rank(-m) == want);
    CHECK(c.rank(-m) == want);
  }
  const auto cert = compare_conormalizations(a);
  CHECK(cert.levels_checked >= 3);
}

TEST_CASE("constant and zero cosimplicial groups") {
  const auto a = constant_cosimplicial_group(4);
  a.validate();
  const auto k = conormalize_kernel(a);
  const auto c = conormalize_cokernel(a);
  CHECK(k.rank(0) == 1);
  CHECK(c.rank(0) == 1);
  for (int m = 1; m <= 4; ++m) {
    CHECK(k.rank(-m) == 0);
    CHECK(c.rank(-m) == 0);
  }
  const auto z = zero_cosimplicial_group(3);
  CHECK(conormalize_kernel(z).rank(0) == 0);
  CHECK_NOTHROW(compare_conormalizations(z));
}

TEST_CASE("cokernel form keeps level 0") {
  const auto a = dual_cosimplicial_group(FiniteSimplicialSet::sphere(2), 3);
  CHECK(conormalize_cokernel(a).rank(0) == a.rank(0));
}

TEST_CASE("broken identities are rejected") {
  auto a = constant_cosimplicial_group(2);
  a.coface[0][0] = IntMatrix::from_dense({{2}});
  CHECK_THROWS_AS(a.validate(), InvalidInput);
}

TEST_CASE("random simplicial sets: both forms agree with nondegenerate counts") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto w = FiniteSimplicialSet::random(seed, 10);
    const int top = w.dimension() + 2;
    const auto a = dual_cosimplicial_group(w, top);
    const auto cert = compare_conormalizations(a);
    CHECK(cert.levels_checked > 0);
    const auto k = conormalize_kernel(a);
    const auto c = conormalize_cokernel(a);
    CHECK(k.d_squared_zero());
    CHECK(c.d_squared_zero());
    for (int m = 0; m <= top; ++m) {
      CHECK(k.rank(-m) == w.nondegenerate(m).size());
      CHECK(c.rank(-m) == w.nondegenerate(m).size());
    }
  }
}

TEST_CASE("totalization of the standard cosimplicial chains") {
  const auto b = standard_cosimplicial_chains(8);
  for (int r : {5, 6, 7}) {
    const auto t = conormalize_bicomplex(b, r, 0, 0);
    CHECK(t.d_squared_zero());
    CHECK(t.homology(0) == HomologyGroup{1, {}});
  }
  CHECK_THROWS_AS(conormalize_bicomplex(b, 9, 0, 0), WindowTooSmall);
}

TEST_CASE("totalization in internal degree zero is the kernel form") {
  const auto a = dual_cosimplicial_group(FiniteSimplicialSet::circle(), 4);
  const auto t = conormalize_bicomplex(concentrated_in_degree_zero(a), 3, -2, 0);
  const auto k = conormalize_kernel(a);
  for (int p = -2; p <= 0; ++p) {
    CHECK(t.rank(p) == k.rank(p));
    CHECK(t.homology(p) == k.homology(p));
  }
}

TEST_CASE("totalization of T(2) has square zero") {
  const auto b = box_cosimplicial_chain_complex(2, ComplexityBound{}, 4, 4);
  const auto t = conormalize_bicomplex(b, 3, -1, 1);
  CHECK(t.d_squared_zero());
}
