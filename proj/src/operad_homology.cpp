#include "cosop/operad_homology.hpp"

#include "cosop/chain_operad.hpp"
#include "cosop/errors.hpp"
#include "cosop/simplicial_set.hpp"

namespace cosop {

namespace {

nlohmann::json table(const std::map<int, HomologyGroup>& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, h] : g) {
    nlohmann::json tor = nlohmann::json::array();
    for (const auto& t : h.torsion) tor.push_back(t.get_str());
    out.push_back({{"degree", p}, {"rank", h.betti}, {"torsion", tor}, {"group", h.to_string()}});
  }
  return out;
}

std::map<int, HomologyGroup> homology_table(const ChainOperad& op, int k, int level, int lo, int hi) {
  const GradedIntComplex c = op.complex(k, level, lo, hi);
  c.assert_d_squared_zero();
  std::map<int, HomologyGroup> out;
  for (int p = lo; p <= hi; ++p) out[p] = c.homology(p);
  return out;
}

}  // namespace

nlohmann::json OperadHomologyReport::to_json() const {
  return {{"family", family}, {"k", k},
          {"degrees", {lo, hi}}, {"qmax", qmax},
          {"level", level},   {"refined_level", refined_level},
          {"stabilized", stabilized()}, {"homology", table(groups)},
          {"refined_homology", table(refined)}};
}

OperadHomologyReport operad_homology_unchecked(ComplexityBound n, int k, int lo, int hi, int qmax) {
  if (k < 1) throw ValueOutOfRange("arity must be positive");
  if (lo > hi) throw ValueOutOfRange("empty degree window");
  OperadHomologyReport rep;
  rep.family = n.unbounded() ? "T" : "T" + n.to_string();
  rep.k = k;
  rep.lo = lo;
  rep.hi = hi;
  rep.qmax = qmax;
  rep.level = truncation_level(k, hi, qmax);
  rep.refined_level = truncation_level(k, hi, qmax + 1);
  if (rep.level < 0) throw WindowTooSmall("qmax " + std::to_string(qmax) + " cannot reach degree " + std::to_string(hi + 1));
  if (qmax + 2 > kMaxPositions) throw BoundsExceeded("qmax too large");
  const ChainOperad op(n);
  rep.groups = homology_table(op, k, rep.level, lo, hi);
  rep.refined = homology_table(op, k, rep.refined_level, lo, hi);
  return rep;
}

OperadHomologyReport operad_homology(ComplexityBound n, int k, int lo, int hi, int qmax) {
  OperadHomologyReport rep = operad_homology_unchecked(n, k, lo, hi, qmax);
  if (!rep.stabilized()) throw NotStabilized("homology changes between qmax and qmax+1: " + rep.to_json().dump());
  return rep;
}

GradedIntComplex cellular_cubes_model(int n, int k) {
  if (k == 1 || k == 0) return chains(FiniteSimplicialSet::point());
  if (k == 2 && n == 1) return chains(FiniteSimplicialSet::simplicial_complex({{0}, {1}}));
  if (k == 2 && n == 2) return chains(FiniteSimplicialSet::circle());
  throw UnsupportedInstance("no cellular model for n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

nlohmann::json CubesComparisonReport::to_json() const {
  return {{"n", n},
          {"k", k},
          {"operad", operad.to_json()},
          {"cellular_homology", table(cellular)},
          {"components", components.to_json()},
          {"match", match}};
}

CubesComparisonReport little_cubes_comparison(int n, int k, int lo, int hi, int qmax, int resolution) {
  if (n < 1 || n > 2 || k < 1 || k > 2)
    throw UnsupportedInstance("comparison is available for n in {1,2} and k in {1,2}");
  CubesComparisonReport rep;
  rep.n = n;
  rep.k = k;
  rep.operad = operad_homology(ComplexityBound(n), k, lo, hi, qmax);
  const GradedIntComplex cell = cellular_cubes_model(n, k);
  for (int p = lo; p <= hi; ++p) {
    if (p < 0 || p > cell.window_hi() - 1)
      rep.cellular[p] = HomologyGroup{};
    else
      rep.cellular[p] = cell.homology(p);
  }
  rep.components = count_components(n, k, resolution);
  rep.match = rep.operad.groups == rep.cellular;
  if (lo <= 0 && 0 <= hi)
    rep.match = rep.match && rep.cellular.at(0).betti == static_cast<std::size_t>(rep.components.components);
  return rep;
}

}  // namespace cosop
