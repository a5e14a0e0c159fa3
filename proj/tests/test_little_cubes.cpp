#include <doctest.h>

#include <fstream>

#include "cosop/errors.hpp"
#include "cosop/little_cubes.hpp"

using namespace cosop;

namespace {

Rational q(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

TDMap td(std::vector<Rational> a, Rational b) { return TDMap{std::move(a), std::move(b)}; }

}  // namespace

TEST_CASE("worked composition example") {
  const auto kappa = td({q("55/100"), q("55/100")}, q("4/10"));
  const auto lambda = td({q("1/10"), q("3/10")}, q("1/4"));
  const auto c = kappa.compose(lambda);
  CHECK(c.a[0] == q("59/100"));
  CHECK(c.a[1] == q("67/100"));
  CHECK(c.b == q("1/10"));
}

TEST_CASE("worked example from the data file") {
  std::ifstream in(COSOP_DATA_DIR "/cubes_example.json");
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  const auto outer = CubesElement::from_json(j["outer"]);
  std::vector<CubesElement> inner;
  for (const auto& e : j["inner"]) inner.push_back(CubesElement::from_json(e));
  const auto g = gamma_cubes(outer, inner);
  REQUIRE(g.arity() == 1);
  CHECK(g.cubes[0].a == std::vector<Rational>{q("59/100"), q("67/100")});
  CHECK(g.cubes[0].b == q("1/10"));
}

TEST_CASE("unit laws") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= 3; ++k) {
      const auto c = random_cubes(n, k, rng);
      CHECK(gamma_cubes(CubesElement::unit(n), {c}) == c);
      CHECK(gamma_cubes(c, std::vector<CubesElement>(k, CubesElement::unit(n))) == c);
    }
}

TEST_CASE("permutations") {
  std::mt19937_64 rng(3);
  const auto c = random_cubes(2, 2, rng);
  CHECK(sigma_cubes(c, {1, 2}) == c);
  CHECK(sigma_cubes(sigma_cubes(c, {2, 1}), {2, 1}) == c);
  CHECK(block_permutation({2, 1}, {1, 2}) == std::vector<int>{2, 3, 1});
  CHECK(block_sum({{1}, {2, 1}}) == std::vector<int>{1, 3, 2});
}

TEST_CASE("disjointness is enforced") {
  CubesElement c;
  c.n = 1;
  c.cubes = {td({q("0")}, q("1/2")), td({q("1/4")}, q("1/2"))};
  CHECK_THROWS_AS(c.validate(), DisjointnessViolation);
  CHECK_THROWS_AS(IntervalsElement({{q("1/2"), q("1/2")}}), DegenerateInterval);
}

TEST_CASE("intervals") {
  const IntervalsElement a({{q("0"), q("1/2")}});
  const auto c = intervals_to_cubes(a);
  REQUIRE(c.arity() == 1);
  CHECK(c.cubes[0].a == std::vector<Rational>{q("0")});
  CHECK(c.cubes[0].b == q("1/2"));
  CHECK(intervals_to_cubes(IntervalsElement({})).arity() == 0);
  const IntervalsElement two({{q("0"), q("1/4")}, {q("1/2"), q("1")}});
  CHECK_FALSE(generated_operad_element(two, {1, 2}) == generated_operad_element(two, {2, 1}));
}

TEST_CASE("randomized axioms") {
  const auto rep = verify_cubes_axioms(2, 2, 50, 11);
  CAPTURE(rep.to_json().dump());
  CHECK(rep.passed());
  CHECK(rep.instances > 0);
}

TEST_CASE("component counts") {
  CHECK(count_components(1, 2, 4).components == 2);
  CHECK(count_components(2, 2, 4).components == 1);
  CHECK(count_components(1, 1, 4).components == 1);
}
