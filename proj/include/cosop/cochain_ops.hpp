#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/int_matrix.hpp"
#include "cosop/operad_axioms.hpp"
#include "cosop/simplicial_set.hpp"

namespace cosop {

/// An integer function on the simplices of one level. Level m means the
/// ordinal [m]; level -1 is the empty ordinal, whose single "simplex" is the
/// augmentation point.
struct Cochain {
  int level = -1;
  std::vector<Integer> values;

  bool operator==(const Cochain& o) const = default;
  bool is_zero() const;
  nlohmann::json to_json() const;
};

/// Cochains on all simplices (degenerate ones included) of W at every level
/// up to `max_level`, with the augmented level -1 of rank 1.
class CochainSystem {
 public:
  CochainSystem(FiniteSimplicialSet w, int max_level);

  const FiniteSimplicialSet& space() const { return w_; }
  int max_level() const { return max_level_; }
  std::size_t rank(int level) const;

  Cochain zero(int level) const;
  Cochain basis(int level, std::size_t index) const;
  /// The class 1 in level -1.
  Cochain epsilon() const { return basis(-1, 0); }
  /// The constant function 1 on vertices.
  Cochain unit() const;
  /// True if the cochain vanishes on every degenerate simplex.
  bool normalized(const Cochain& x) const;

  /// σ(U) for a nonempty sorted U ⊆ [m], m = dim σ.
  Simplex restrict(const Simplex& sigma, const std::vector<int>& subset) const;
  /// Index of σ(U) in its level; U is a bit mask over [m].
  std::size_t restrict_index(int level, std::size_t sigma, unsigned mask) const;

  /// φ_* x for φ : [x.level] -> [m'].
  Cochain push(const OrderedMap& phi, const Cochain& x) const;
  Cochain coface(const Cochain& x, int i) const;
  Cochain codegeneracy(const Cochain& x, int i) const;

  Cochain cup(const Cochain& x, const Cochain& y) const;
  Cochain sqcup(const Cochain& x, const Cochain& y) const;
  /// ⟨f⟩(x_1, ..., x_k) with f given by its values in 1..k on [m]. An
  /// empty f is the empty ordinal. x_i must sit at level |f^{-1}(i)| - 1.
  Cochain angle(const std::vector<int>& f, int k, const std::vector<Cochain>& xs) const;

  std::string simplex_label(int level, std::size_t index) const;

 private:
  void check_level(int level) const;

  FiniteSimplicialSet w_;
  int max_level_;
  // tables_[m][mask][σ] = index of σ(mask) at level popcount(mask) - 1
  std::vector<std::vector<std::vector<std::uint32_t>>> tables_;
};

using AngleFn = std::function<Cochain(const CochainSystem&, const std::vector<int>&, int, const std::vector<Cochain>&)>;

/// ⟨f⟩ that restricts to the first |f^{-1}(i)| vertices instead of the fiber.
AngleFn corrupted_angle();

struct CochainIdentityPolicy {
  int max_level = 3;     // every cochain in an instance has level <= this
  int ternary_level = 3; // level cap for the three-input checks
};

struct CochainIdentityReport {
  std::string space;
  int max_level = 0;
  int ternary_level = 0;
  std::vector<AxiomCheck> checks;
  bool passed() const;
  const AxiomCheck& check(const std::string& name) const;
  nlohmann::json to_json() const;
};

CochainIdentityReport verify_cochain_identities(const FiniteSimplicialSet& w, const std::string& name,
                                                const CochainIdentityPolicy& policy);
CochainIdentityReport verify_cochain_identities(const FiniteSimplicialSet& w, const std::string& name,
                                                const CochainIdentityPolicy& policy, const AngleFn& angle);

}  // namespace cosop
