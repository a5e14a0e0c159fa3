#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cosop/graded_complex.hpp"

namespace cosop {

/// Order-preserving map between finite ordinals.
///
/// Sizes are element counts, so the object [m] has size m + 1 and size 0 is
/// the empty ordinal.
struct OrderedMap {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> values;

  OrderedMap() = default;
  /// Validates monotonicity and range; throws InvalidInput.
  OrderedMap(int target_size, std::vector<int> values);

  int operator()(int i) const { return values[i]; }
  bool injective() const;
  bool surjective() const;
  bool is_identity() const;
  /// Sorted image.
  std::vector<int> image() const;

  bool operator==(const OrderedMap& o) const = default;
  auto operator<=>(const OrderedMap& o) const = default;
  std::string to_string() const;
};

OrderedMap identity_map(int size);
/// this ∘ other (apply `other` first).
OrderedMap compose(const OrderedMap& outer, const OrderedMap& inner);

/// d^i : [m] -> [m+1], the injection whose image misses i.
OrderedMap coface(int m, int i);
/// s^i : [m] -> [m-1], the surjection hitting i twice.
OrderedMap codegeneracy(int m, int i);

/// φ = mono ∘ epi with epi onto the image.
std::pair<OrderedMap, OrderedMap> factor_epi_mono(const OrderedMap& phi);

/// Every order-preserving map between ordinals of the given sizes, in
/// lexicographic order of value lists.
std::vector<OrderedMap> all_ordered_maps(int source_size, int target_size);
/// Only the injective ones; the image determines the map.
std::vector<OrderedMap> all_injections(int source_size, int target_size);

/// Normalized chains of the standard m-simplex: injections [j] -> [m] in
/// degree j.
GradedIntComplex standard_simplex_chains(int m);

}  // namespace cosop
