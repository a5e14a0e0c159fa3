#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/box_product.hpp"

namespace cosop {

/// Outcome of the explicit-quotient computation of one colimit cell: level
/// [r], arity k, internal degree m, objects of the indexing category with at
/// most `bound` elements.
struct BruteColimitReport {
  int k = 0, r = 0, m = 0, bound = 0;
  std::size_t generators = 0;
  std::size_t relations = 0;
  std::size_t relation_rank = 0;
  std::size_t canonical = 0;
  /// The canonical symbols map isomorphically onto the quotient.
  bool canonical_is_basis = false;
  /// The tensor differential agrees with internal_boundary modulo relations.
  bool boundary_matches = false;
  bool ok() const { return canonical_is_basis && boundary_matches; }
  nlohmann::json to_json() const;
};

/// Free abelian group on (f, φ, x_1..x_k) with x_i a face of the fiber
/// simplex, modulo the identifications induced by elementary cofaces and
/// codegeneracies of the indexing category.
BruteColimitReport brute_force_colimit(int k, int r, int m, int bound, ComplexityBound n = {});

/// Runs the cell at the natural bound m + k + 1 and one larger, and requires
/// both to succeed.
bool brute_force_colimit_stable(int k, int r, int m, ComplexityBound n = {});

/// Conormalized basis of the box product against symbol enumeration, one
/// onto f at a time: the cokernel form at level [r] must be presented by the
/// symbols of U_{q,r}(k) themselves. Levels up to q + 2 are inspected so
/// that vanishing above q + 1 is confirmed.
struct BasisReconciliation {
  int k_max = 0, q_max = 0;
  std::size_t functions = 0;
  std::size_t basis_elements = 0;
  std::size_t mismatches = 0;
  // "k<k>q<q>r<r>" -> {expected, found}
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  std::vector<nlohmann::json> witnesses;
  bool ok() const { return mismatches == 0; }
  nlohmann::json to_json() const;
};
BasisReconciliation reconcile_basis(int k_max, int q_max);

}  // namespace cosop
