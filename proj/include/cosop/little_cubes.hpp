#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace cosop {

using Rational = mpq_class;

/// t ↦ a + b t on the unit n-cube.
struct TDMap {
  std::vector<Rational> a;
  Rational b = 1;

  int dim() const { return static_cast<int>(a.size()); }
  /// a_i >= 0, b > 0 and a_i + b <= 1 for every coordinate.
  bool valid() const;
  /// this ∘ inner.
  TDMap compose(const TDMap& inner) const;
  bool operator==(const TDMap& o) const { return a == o.a && b == o.b; }
  nlohmann::json to_json() const;
  static TDMap from_json(const nlohmann::json& j);
};

/// True when the images have disjoint interiors.
bool disjoint_interiors(const TDMap& x, const TDMap& y);

struct CubesElement {
  int n = 1;
  std::vector<TDMap> cubes;

  int arity() const { return static_cast<int>(cubes.size()); }
  /// Throws InvalidInput or DisjointnessViolation.
  void validate() const;
  bool operator==(const CubesElement& o) const { return n == o.n && cubes == o.cubes; }
  nlohmann::json to_json() const;
  static CubesElement from_json(const nlohmann::json& j);
  static CubesElement unit(int n);
};

CubesElement gamma_cubes(const CubesElement& c, const std::vector<CubesElement>& d);
/// Right action: position l of the result holds cube perm[l] (1-based).
CubesElement sigma_cubes(const CubesElement& c, const std::vector<int>& perm);
/// Permutation of j_1 + ... + j_k letters moving whole blocks: position l of
/// the output holds block perm[l].
std::vector<int> block_permutation(const std::vector<int>& perm, const std::vector<int>& block_sizes);
/// τ_1 ⊕ ... ⊕ τ_k.
std::vector<int> block_sum(const std::vector<std::vector<int>>& perms);

/// k closed intervals of [0,1] with disjoint interiors, kept in increasing
/// order.
struct IntervalsElement {
  std::vector<std::pair<Rational, Rational>> intervals;
  /// Sorts, checks endpoints and disjointness. Throws DegenerateInterval or
  /// DisjointnessViolation.
  explicit IntervalsElement(std::vector<std::pair<Rational, Rational>> iv);
  int arity() const { return static_cast<int>(intervals.size()); }
  /// The 2k endpoints in increasing order.
  std::vector<Rational> coordinates() const;
  bool operator==(const IntervalsElement& o) const { return intervals == o.intervals; }
};

/// Non-symmetric composition: interval i is filled with the rescaled b_i.
IntervalsElement gamma_intervals(const IntervalsElement& a, const std::vector<IntervalsElement>& b);
CubesElement intervals_to_cubes(const IntervalsElement& a);
/// (a, σ) ∈ A(k) × Σ_k as an element of C_1(k).
CubesElement generated_operad_element(const IntervalsElement& a, const std::vector<int>& perm);

/// Random element of C_n(k): cubes placed in distinct cells of a grid.
CubesElement random_cubes(int n, int k, std::mt19937_64& rng);
IntervalsElement random_intervals(int k, std::mt19937_64& rng);

struct CubesAxiomReport {
  std::size_t configurations = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<nlohmann::json> witnesses;
  std::uint64_t seed = 0;
  bool passed() const { return failures == 0; }
  nlohmann::json to_json() const;
};

/// Unit, associativity and equivariance on random instances for every
/// (k, j_1..j_k) with 1 <= k <= max_arity and 0 <= j_i <= max_arity, for each
/// n in 1..max_dim; also the non-symmetric axioms for intervals and their
/// compatibility with C_1.
CubesAxiomReport verify_cubes_axioms(int max_dim, int max_arity, std::size_t per_configuration, std::uint64_t seed);

struct ComponentCount {
  int n = 0, k = 0, resolution = 0;
  std::size_t samples = 0;
  std::size_t edges = 0;
  int components = 0;
  int refined_components = 0;
  nlohmann::json to_json() const;
};

/// Heuristic path-component count of C_n(k): grid samples with spacing
/// 1/resolution, joined when the straight segment between them stays inside
/// the configuration space. Throws ResolutionTooCoarse when the count
/// changes at resolution + 1.
ComponentCount count_components(int n, int k, int resolution);

}  // namespace cosop
