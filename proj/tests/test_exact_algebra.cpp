#include <doctest.h>

#include "cosop/errors.hpp"
#include "cosop/graded_complex.hpp"
#include "cosop/simplicial_set.hpp"
#include "cosop/smith.hpp"

using namespace cosop;

namespace {

GradedIntComplex interval() {
  GradedIntComplex c;
  c.set_basis(0, {"v0", "v1"});
  c.set_basis(1, {"e"});
  c.set_differential(1, IntMatrix::from_dense({{-1}, {1}}));
  return c;
}

bool is_diagonal(const IntMatrix& m, const std::vector<Integer>& d) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer want = (r == c && r < d.size()) ? d[r] : Integer(0);
      if (m.get(r, c) != want) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("smith form of a 2x2 matrix") {
  const auto m = IntMatrix::from_dense({{2, 4}, {6, 8}});
  const auto s = smith_normal_form(m);
  REQUIRE(s.diagonal.size() == 2);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 4);
  CHECK(is_diagonal(s.u * m * s.v, s.diagonal));
  CHECK(unimodular_inverse(s.u) * s.u == IntMatrix::identity(2));
  CHECK(unimodular_inverse(s.v) * s.v == IntMatrix::identity(2));
}

TEST_CASE("smith form trivial cases") {
  const auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.diagonal == std::vector<Integer>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix(2, 3)).diagonal.empty());
  CHECK(invariant_factors(IntMatrix::from_dense({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
}

TEST_CASE("smith divisibility on a larger matrix") {
  const auto m = IntMatrix::from_dense({{6, 4, 10}, {4, 6, 2}, {10, 2, 14}, {3, 9, 0}});
  const auto s = smith_normal_form(m);
  CHECK(is_diagonal(s.u * m * s.v, s.diagonal));
  for (std::size_t i = 1; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
  CHECK(s.diagonal == invariant_factors(m));
}

TEST_CASE("kernel and solve") {
  const auto m = IntMatrix::from_dense({{1, 2, 3}, {2, 4, 6}});
  const auto k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  const auto x = solve_integer(IntMatrix::from_dense({{2, 0}, {0, 3}}), {4, 9});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_integer(IntMatrix::from_dense({{2}}), {3}));
}

TEST_CASE("cokernel presentation detects torsion") {
  CHECK_THROWS_AS(cokernel_presentation(IntMatrix::from_dense({{2}})), TorsionCokernel);
  const auto p = cokernel_presentation(IntMatrix::from_dense({{1}, {1}}));
  CHECK(p.reduce.rows() == 1);
  CHECK(p.reduce * p.section == IntMatrix::identity(1));
}

TEST_CASE("homology of the three-edge circle") {
  const auto c = chains(FiniteSimplicialSet::simplicial_complex({{0, 1}, {1, 2}, {0, 2}}));
  CHECK(c.homology(0) == HomologyGroup{1, {}});
  CHECK(c.homology(1) == HomologyGroup{1, {}});
}

TEST_CASE("homology with zero differential and with torsion") {
  GradedIntComplex z;
  z.set_basis(0, {"a", "b"});
  z.set_basis(1, {"c"});
  CHECK(z.homology(0) == HomologyGroup{2, {}});

  GradedIntComplex two;
  two.set_basis(0, {"x"});
  two.set_basis(1, {"y"});
  two.set_differential(1, IntMatrix::from_dense({{2}}));
  CHECK(two.homology(0) == HomologyGroup{0, {2}});
  CHECK(two.homology(1) == HomologyGroup{0, {}});
}

TEST_CASE("homology outside the window throws") {
  GradedIntComplex c = interval();
  c.set_window(-1, 1);
  CHECK_THROWS_AS(c.homology(1), DegreeOutsideWindow);
  CHECK_NOTHROW(c.homology(0));
}

TEST_CASE("tensor with a point is the identity") {
  GradedIntComplex pt;
  pt.set_basis(0, {"p"});
  const auto t = tensor(pt, interval());
  CHECK(t.rank(0) == 2);
  CHECK(t.rank(1) == 1);
  CHECK(t.differential(1) == interval().differential(1));
}

TEST_CASE("tensor square of the interval") {
  const auto t = tensor(interval(), interval());
  CHECK(t.rank(0) == 4);
  CHECK(t.rank(1) == 4);
  CHECK(t.rank(2) == 1);
  CHECK(t.d_squared_zero());
  const auto d = t.differential(2);
  auto at = [&](const std::string& label) { return d.get(t.index_of(1, label), 0); };
  // ∂(e⊗e) = (v1 - v0)⊗e - e⊗(v1 - v0)
  CHECK(at("(v1)x(e)") == 1);
  CHECK(at("(v0)x(e)") == -1);
  CHECK(at("(e)x(v1)") == -1);
  CHECK(at("(e)x(v0)") == 1);
  CHECK(t.homology(0) == HomologyGroup{1, {}});
  CHECK(t.homology(1) == HomologyGroup{});
}

TEST_CASE("chain map check") {
  const auto c = interval();
  ChainMap id;
  id.matrices[0] = IntMatrix::identity(2);
  id.matrices[1] = IntMatrix::identity(1);
  CHECK(is_chain_map(c, c, id));
  id.matrices[1] = IntMatrix::from_dense({{2}});
  CHECK_FALSE(is_chain_map(c, c, id));
}

TEST_CASE("modular rank and kernel") {
  const modp::Mat m{{1, 1}, {1, 1}};
  CHECK(modp::rank(m, 2) == 1);
  CHECK(modp::kernel(m, 2).size() == 1);
  CHECK(modp::rank({{2, 0}, {0, 1}}, 2) == 1);
}
