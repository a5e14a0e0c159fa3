#pragma once

#include <map>

#include <json.hpp>

#include "cosop/box_product.hpp"
#include "cosop/graded_complex.hpp"
#include "cosop/little_cubes.hpp"

namespace cosop {

struct OperadHomologyReport {
  std::string family;
  int k = 0, lo = 0, hi = 0, qmax = 0;
  int level = 0;          // truncation level used for qmax
  int refined_level = 0;  // and for qmax + 1
  std::map<int, HomologyGroup> groups;
  std::map<int, HomologyGroup> refined;
  bool stabilized() const { return groups == refined; }
  nlohmann::json to_json() const;
};

/// Homology of T_n(k) in degrees lo..hi from the truncations matching qmax
/// and qmax + 1. Throws NotStabilized (carrying both tables in the message)
/// when they differ, WindowTooSmall when qmax cannot reach the window.
OperadHomologyReport operad_homology(ComplexityBound n, int k, int lo, int hi, int qmax);
/// Same computation without throwing on disagreement.
OperadHomologyReport operad_homology_unchecked(ComplexityBound n, int k, int lo, int hi, int qmax);

struct CubesComparisonReport {
  int n = 0, k = 0;
  OperadHomologyReport operad;
  std::map<int, HomologyGroup> cellular;
  ComponentCount components;
  bool match = false;
  nlohmann::json to_json() const;
};

/// Compares T_n(k) against a cellular model of C_n(k) for n <= 2, k <= 2 and
/// checks the degree-0 rank against the sampled component count.
CubesComparisonReport little_cubes_comparison(int n, int k, int lo, int hi, int qmax, int resolution = 4);

/// The cellular model: a point, two points, or the one-cell circle.
GradedIntComplex cellular_cubes_model(int n, int k);

}  // namespace cosop
