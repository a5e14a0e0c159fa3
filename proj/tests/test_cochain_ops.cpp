#include <doctest.h>

#include "cosop/cochain_ops.hpp"
#include "cosop/errors.hpp"

using namespace cosop;

namespace {

struct Interval {
  FiniteSimplicialSet w = FiniteSimplicialSet::standard_simplex(1);
  CochainSystem sys{w, 3};
  std::size_t idx(int level, const char* name) const { return w.simplex_index(w.generator_simplex(w.find(name))); }
  Cochain dual(int level, const char* name) const { return sys.basis(level, idx(level, name)); }
  Integer at(const Cochain& x, const char* name) const { return x.values[idx(x.level, name)]; }
};

}  // namespace

TEST_CASE("restriction of simplices") {
  const auto d1 = FiniteSimplicialSet::standard_simplex(1);
  const CochainSystem s1(d1, 2);
  const auto e = d1.generator_simplex(d1.find("0.1"));
  CHECK(s1.restrict(e, {0}) == d1.generator_simplex(d1.find("0")));
  CHECK(s1.restrict(e, {0, 1}) == e);
  const auto d2 = FiniteSimplicialSet::standard_simplex(2);
  const CochainSystem s2(d2, 2);
  CHECK(s2.restrict(d2.generator_simplex(d2.find("0.1.2")), {0, 2}) == d2.generator_simplex(d2.find("0.2")));
}

TEST_CASE("cup on the interval") {
  const Interval t;
  const auto v0 = t.dual(0, "0"), v1 = t.dual(0, "1"), e = t.dual(1, "0.1");
  CHECK(t.at(t.sys.cup(v0, e), "0.1") == 1);
  CHECK(t.at(t.sys.cup(v1, e), "0.1") == 0);
  CHECK(t.at(t.sys.cup(e, v1), "0.1") == 1);
  CHECK(t.at(t.sys.cup(e, v0), "0.1") == 0);
  const auto sq = t.sys.cup(v0, v0);
  CHECK(t.at(sq, "0") == 1);
  CHECK(t.at(sq, "1") == 0);
}

TEST_CASE("sqcup on the interval") {
  const Interval t;
  const auto v0 = t.dual(0, "0"), v1 = t.dual(0, "1");
  CHECK(t.at(t.sys.sqcup(v0, v1), "0.1") == 1);
  CHECK(t.at(t.sys.sqcup(v1, v0), "0.1") == 0);
}

TEST_CASE("angle realizes sqcup and has a unit") {
  const auto w = FiniteSimplicialSet::standard_simplex(2);
  const CochainSystem sys(w, 3);
  for (std::size_t a = 0; a < sys.rank(0); ++a)
    for (std::size_t b = 0; b < sys.rank(1); ++b) {
      const auto x = sys.basis(0, a), y = sys.basis(1, b);
      CHECK(sys.angle({1, 2, 2}, 2, {x, y}) == sys.sqcup(x, y));
      CHECK(sys.angle({1, 1}, 2, {y, sys.epsilon()}) == y);
    }
  CHECK_THROWS_AS(sys.angle({1, 2}, 2, {sys.basis(1, 0), sys.basis(0, 0)}), LevelMismatch);
}

TEST_CASE("codegeneracy of sqcup is cup") {
  const auto w = FiniteSimplicialSet::standard_simplex(2);
  const CochainSystem sys(w, 3);
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; p + q + 1 <= 3; ++q)
      for (std::size_t a = 0; a < sys.rank(p); ++a)
        for (std::size_t b = 0; b < sys.rank(q); ++b) {
          const auto x = sys.basis(p, a), y = sys.basis(q, b);
          CHECK(sys.codegeneracy(sys.sqcup(x, y), p) == sys.cup(x, y));
          CHECK(sys.sqcup(x, y) == sys.cup(sys.coface(x, p + 1), y));
          CHECK(sys.sqcup(x, y) == sys.cup(x, sys.coface(y, 0)));
        }
}

TEST_CASE("unit and augmentation") {
  const CochainSystem sys(FiniteSimplicialSet::circle(), 2);
  CHECK(sys.rank(-1) == 1);
  const auto x = sys.basis(1, 0);
  CHECK(sys.cup(sys.unit(), x) == x);
  CHECK(sys.cup(x, sys.unit()) == x);
  CHECK(sys.normalized(sys.unit()));
}

TEST_CASE("identity report on the interval and the circle") {
  CochainIdentityPolicy pol;
  pol.max_level = 3;
  pol.ternary_level = 2;
  for (const auto& [w, name] : {std::pair{FiniteSimplicialSet::standard_simplex(1), "delta1"},
                                std::pair{FiniteSimplicialSet::circle(), "circle"}}) {
    const auto rep = verify_cochain_identities(w, name, pol);
    CAPTURE(rep.to_json().dump());
    CHECK(rep.passed());
  }
}

TEST_CASE("dropping the renumbering is detected") {
  CochainIdentityPolicy pol;
  pol.max_level = 3;
  pol.ternary_level = 2;
  const auto rep =
      verify_cochain_identities(FiniteSimplicialSet::standard_simplex(2), "delta2", pol, corrupted_angle());
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.check("angle_naturality").passed());
}

TEST_CASE("oversized levels are refused") {
  CochainIdentityPolicy pol;
  pol.max_level = 8;
  CHECK_THROWS_AS(verify_cochain_identities(FiniteSimplicialSet::point(), "pt", pol), InfeasibleSize);
}
