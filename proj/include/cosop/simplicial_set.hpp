#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/delta.hpp"
#include "cosop/graded_complex.hpp"

namespace cosop {

/// A simplex in normal form: a nondegenerate generator together with the
/// epimorphism [m] -> [dim] that degenerates it.
struct Simplex {
  int generator = -1;
  OrderedMap degeneracy;

  int dim() const { return degeneracy.source_size - 1; }
  bool nondegenerate() const { return degeneracy.is_identity(); }
  bool operator==(const Simplex& o) const = default;
  auto operator<=>(const Simplex& o) const = default;
};

class FiniteSimplicialSet {
 public:
  struct Generator {
    std::string name;
    int dim = 0;
    std::vector<Simplex> faces;  // d_0 .. d_dim, each of dimension dim-1
  };

  /// Faces must refer to generators added earlier.
  int add_generator(std::string name, int dim, std::vector<Simplex> faces);
  /// Checks d_i d_j = d_{j-1} d_i on every generator; throws InvalidInput.
  void validate() const;

  const std::vector<Generator>& generators() const { return gens_; }
  int dimension() const;
  std::size_t nondegenerate_count() const { return gens_.size(); }
  std::vector<int> nondegenerate(int dim) const;
  int find(const std::string& name) const;

  Simplex generator_simplex(int id) const;
  /// α^* σ for α : [m'] -> [m] and σ an m-simplex.
  Simplex apply(const OrderedMap& alpha, const Simplex& s) const;
  Simplex face(const Simplex& s, int i) const;
  Simplex degeneracy(const Simplex& s, int i) const;

  /// All m-simplices, degenerate ones included, in a fixed order.
  const std::vector<Simplex>& simplices(int m) const;
  std::size_t simplex_index(const Simplex& s) const;

  nlohmann::json to_json() const;
  static FiniteSimplicialSet from_json(const nlohmann::json& j);

  static FiniteSimplicialSet point();
  static FiniteSimplicialSet standard_simplex(int n);
  /// One vertex and one edge.
  static FiniteSimplicialSet circle();
  /// One vertex and one n-simplex with all faces collapsed.
  static FiniteSimplicialSet sphere(int n);
  /// Simplicial complex on vertices 0..v-1 spanned by the given facets.
  static FiniteSimplicialSet simplicial_complex(const std::vector<std::vector<int>>& facets);
  /// Small random simplicial set with at most `max_simplices` generators.
  static FiniteSimplicialSet random(std::uint64_t seed, std::size_t max_simplices);

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> by_name_;
  mutable std::map<int, std::vector<Simplex>> level_cache_;
  mutable std::map<int, std::map<Simplex, std::size_t>> index_cache_;
};

/// Normalized cochains: duals of nondegenerate simplices, stored
/// cohomologically (degree m at homological degree -m).
GradedIntComplex cochains(const FiniteSimplicialSet& w);
/// Normalized chains, nondegenerate simplices in their own dimension.
GradedIntComplex chains(const FiniteSimplicialSet& w);

}  // namespace cosop
