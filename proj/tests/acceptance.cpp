// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cosop/box_product.hpp"
#include "cosop/brute_colimit.hpp"
#include "cosop/chain_operad.hpp"
#include "cosop/cochain_ops.hpp"
#include "cosop/conormalization.hpp"
#include "cosop/errors.hpp"
#include "cosop/hochschild.hpp"
#include "cosop/little_cubes.hpp"
#include "cosop/operad_axioms.hpp"
#include "cosop/operad_homology.hpp"
#include "cosop/parallel.hpp"

using namespace cosop;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome complexity_examples() {
  const int a = complexity({1, 1, 2, 2, 2, 1, 2, 2, 1, 1, 2});
  const int b = complexity({1, 2, 3, 1, 3, 2, 1, 2});
  // two-valued subsequences of 12313212
  const int s12 = complexity({1, 2, 1, 2, 1, 2});
  const int s23 = complexity({2, 3, 3, 2, 2});
  const int s13 = complexity({1, 3, 1, 3, 1});
  std::ostringstream d;
  d << a << ", " << b << " with (" << s12 << ", " << s23 << ", " << s13 << ")";
  return {a == 5 && b == 5 && s12 == 5 && s23 == 2 && s13 == 4, d.str()};
}

Outcome conormalization_equivalence() {
  std::vector<std::pair<std::string, FiniteSimplicialSet>> spaces{
      {"point", FiniteSimplicialSet::point()},
      {"circle", FiniteSimplicialSet::circle()},
      {"delta1", FiniteSimplicialSet::standard_simplex(1)},
      {"delta2", FiniteSimplicialSet::standard_simplex(2)},
      {"sphere2", FiniteSimplicialSet::sphere(2)},
      {"sphere3", FiniteSimplicialSet::sphere(3)},
      {"hollow triangle", FiniteSimplicialSet::simplicial_complex({{0, 1}, {1, 2}, {0, 2}})}};
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    spaces.emplace_back("random " + std::to_string(seed), FiniteSimplicialSet::random(seed, 12));
  std::size_t ok = 0, tested = 0;
  std::string first_bad;
  for (const auto& [name, w] : spaces) {
    if (w.nondegenerate_count() > 12) continue;
    ++tested;
    const int top = w.dimension() + 2;
    const auto a = dual_cosimplicial_group(w, top);
    bool good = true;
    try {
      compare_conormalizations(a);
      const auto k = conormalize_kernel(a);
      const auto c = conormalize_cokernel(a);
      for (int m = 0; m <= top; ++m)
        good = good && k.rank(-m) == w.nondegenerate(m).size() && c.rank(-m) == w.nondegenerate(m).size();
      good = good && k.d_squared_zero() && c.d_squared_zero();
    } catch (const Error&) {
      good = false;
    }
    if (good)
      ++ok;
    else if (first_bad.empty())
      first_bad = name;
  }
  std::string d = std::to_string(ok) + "/" + std::to_string(tested) + " simplicial sets certified";
  if (!first_bad.empty()) d += ", first failure: " + first_bad;
  return {tested >= 20 && ok == tested, d};
}

Outcome basis_reconciliation() {
  const auto rep = reconcile_basis(3, 6);
  std::ostringstream d;
  d << rep.functions << " functions, " << rep.basis_elements << " basis elements, " << rep.mismatches
    << " mismatches";
  bool counts = true;
  for (const auto& [cell, c] : rep.counts) counts = counts && c.first == c.second;
  return {rep.ok() && counts, d.str()};
}

Outcome operad_integrity() {
  AxiomPolicy pol;
  pol.k_max = 3;
  pol.qmax = 6;
  pol.cap = std::size_t(1) << 40;
  std::ostringstream d;
  bool pass = true;
  for (int n : {1, 2, 0}) {
    const ChainOperad op(n ? ComplexityBound(n) : ComplexityBound{});
    const auto rep = verify_operad_axioms(op, pol);
    std::size_t instances = 0, failures = 0;
    for (const auto& c : rep.checks) {
      instances += c.instances;
      failures += c.failures;
    }
    const bool have_routes = [&] {
      for (const auto& c : rep.checks)
        if (c.name == "gamma_routes_agree") return c.instances > 0;
      return false;
    }();
    pass = pass && rep.passed() && rep.exhaustive && have_routes;
    d << (n ? "T_" + std::to_string(n) : std::string("T")) << ": " << instances << " instances, " << failures
      << " failures; ";
  }
  auto s = d.str();
  return {pass, s.substr(0, s.size() - 2)};
}

Outcome operad_homology_claims() {
  const HomologyGroup z{1, {}}, zero{};
  std::ostringstream d;
  bool pass = true;
  auto record = [&](const std::string& name, const OperadHomologyReport& rep,
                    const std::map<int, HomologyGroup>& want) {
    const bool ok = rep.stabilized() && rep.groups == want;
    pass = pass && ok;
    d << name << " ";
    for (const auto& [deg, g] : rep.groups) d << g.to_string() << (deg == rep.hi ? "" : ",");
    d << (ok ? "" : " (unexpected)") << "; ";
  };
  record("T(1)", operad_homology_unchecked(ComplexityBound{}, 1, 0, 2, 6), {{0, z}, {1, zero}, {2, zero}});
  record("T(2)", operad_homology_unchecked(ComplexityBound{}, 2, 0, 2, 6), {{0, z}, {1, zero}, {2, zero}});
  const auto c1 = little_cubes_comparison(1, 2, 0, 1, 6);
  record("T_1(2)", c1.operad, {{0, {2, {}}}, {1, zero}});
  const auto c2 = little_cubes_comparison(2, 2, 0, 1, 6);
  record("T_2(2)", c2.operad, {{0, z}, {1, z}});
  pass = pass && c1.match && c2.match && c1.components.components == 2 && c2.components.components == 1;
  d << "cubes components " << c1.components.components << " and " << c2.components.components;
  return {pass, d.str()};
}

Outcome sigma2_freeness() {
  std::size_t symbols = 0, fixed = 0;
  for (int q = 0; q <= 6; ++q)
    for (int r = 0; r <= q + 1; ++r)
      for (const auto& s : enumerate_symbols(2, q, r)) {
        ++symbols;
        if (relabel(s, {2, 1}).first == s) ++fixed;
      }
  return {symbols > 0 && fixed == 0, std::to_string(symbols) + " symbols, " + std::to_string(fixed) + " fixed"};
}

Outcome cochain_calculus() {
  struct Case {
    std::string name;
    FiniteSimplicialSet w;
    int level;
  };
  const std::vector<Case> cases{{"delta2", FiniteSimplicialSet::standard_simplex(2), 4},
                                {"circle", FiniteSimplicialSet::circle(), 4},
                                {"delta3", FiniteSimplicialSet::standard_simplex(3), 3}};
  std::ostringstream d;
  bool pass = true;
  for (const auto& c : cases) {
    CochainIdentityPolicy pol;
    pol.max_level = c.level;
    pol.ternary_level = 3;
    const auto rep = verify_cochain_identities(c.w, c.name, pol);
    std::size_t instances = 0, failures = 0;
    for (const auto& ch : rep.checks) {
      instances += ch.instances;
      failures += ch.failures;
    }
    pass = pass && rep.passed();
    d << c.name << " " << instances << " instances, " << failures << " failures; ";
  }
  auto s = d.str();
  return {pass, s.substr(0, s.size() - 2)};
}

Outcome hochschild_claims() {
  std::ostringstream d;
  bool pass = true;
  for (const auto& r : {FiniteRankAlgebra::integers(), FiniteRankAlgebra::dual_numbers(2),
                        FiniteRankAlgebra::upper_triangular(2)}) {
    const auto rep = hochschild_report(r, 3, 3);
    pass = pass && rep.passed() && rep.oracle.groups == rep.cohomology;
    d << r.name() << " H=(";
    for (std::size_t p = 0; p < rep.cohomology.size(); ++p) d << (p ? "," : "") << rep.cohomology[p].rank;
    d << ") " << (rep.passed() ? "ok" : "failed") << "; ";
  }
  auto s = d.str();
  return {pass, s.substr(0, s.size() - 2)};
}

Outcome little_cubes_claims(std::uint64_t seed) {
  const auto rep = verify_cubes_axioms(2, 3, 1000, seed);
  TDMap kappa{{Rational(55, 100), Rational(55, 100)}, Rational(4, 10)};
  TDMap lambda{{Rational(1, 10), Rational(3, 10)}, Rational(1, 4)};
  for (auto* m : {&kappa, &lambda}) {
    for (auto& x : m->a) x.canonicalize();
    m->b.canonicalize();
  }
  const auto c = kappa.compose(lambda);
  const bool example = c.a == std::vector<Rational>{Rational(59, 100), Rational(67, 100)} && c.b == Rational(1, 10);
  std::ostringstream d;
  d << rep.configurations << " configurations, " << rep.instances << " instances, " << rep.failures
    << " failures; example a=(" << c.a[0] << "," << c.a[1] << ") b=" << c.b;
  return {rep.passed() && example && rep.instances >= rep.configurations * 1000, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  std::uint64_t seed = 20240601;
  app.add_option("--only", only, "Run only these criteria (1..9)");
  app.add_option("--seed", seed, "Seed for the randomized cubes instances");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"complexity oracle", complexity_examples},
      {"conormalization equivalence", conormalization_equivalence},
      {"basis reconciliation", basis_reconciliation},
      {"chain-operad integrity", operad_integrity},
      {"operad homology", operad_homology_claims},
      {"sigma_2 freeness", sigma2_freeness},
      {"cochain calculus", cochain_calculus},
      {"hochschild and gerstenhaber", hochschild_claims},
      {"little cubes", [seed] { return little_cubes_claims(seed); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << o.detail << " ("
              << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
