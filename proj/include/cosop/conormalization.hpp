#pragma once

#include <map>
#include <string>
#include <vector>

#include "cosop/graded_complex.hpp"
#include "cosop/int_matrix.hpp"
#include "cosop/simplicial_set.hpp"
#include "cosop/smith.hpp"

namespace cosop {

/// Levelwise free cosimplicial abelian group on levels 0..max_level.
struct CosimplicialAbGroup {
  int max_level = 0;
  std::vector<std::vector<std::string>> labels;           // per level
  std::vector<std::vector<IntMatrix>> coface;             // [m][i] : A^m -> A^{m+1}, m < max_level
  std::vector<std::vector<IntMatrix>> codegeneracy;       // [m][i] : A^m -> A^{m-1}, m >= 1
  // Optional augmentation: the empty level and its map into level 0.
  bool has_empty_level = false;
  std::vector<std::string> empty_labels;
  IntMatrix augmentation;  // A^∅ -> A^0

  std::size_t rank(int m) const { return labels.at(m).size(); }
  /// Checks every cosimplicial identity inside the level window; throws
  /// InvalidInput naming the first failure. Also checks that both cofaces
  /// out of the empty level agree when it is present.
  void validate() const;
};

/// Levelwise dual of a finite simplicial set: A^m = Z^{W_m} on all
/// m-simplices, degenerate ones included.
CosimplicialAbGroup dual_cosimplicial_group(const FiniteSimplicialSet& w, int max_level);
/// Z in every level with identity operators.
CosimplicialAbGroup constant_cosimplicial_group(int max_level);
CosimplicialAbGroup zero_cosimplicial_group(int max_level);

struct KernelConormalization {
  GradedIntComplex complex;           // cohomological: level m at degree -m
  std::vector<IntMatrix> inclusion;   // N^m -> A^m, columns are the basis
};

struct CokernelConormalization {
  GradedIntComplex complex;
  std::vector<CokernelPresentation> presentation;  // per level
};

/// Intersection of the kernels of the codegeneracies with Σ(-1)^i d^i.
KernelConormalization conormalize_kernel_form(const CosimplicialAbGroup& a);
GradedIntComplex conormalize_kernel(const CosimplicialAbGroup& a);
/// Cokernel of the positive cofaces with the differential induced by d^0.
CokernelConormalization conormalize_cokernel_form(const CosimplicialAbGroup& a);
GradedIntComplex conormalize_cokernel(const CosimplicialAbGroup& a);

struct ConormalizationCertificate {
  std::vector<IntMatrix> forward;   // kernel form -> cokernel form
  std::vector<IntMatrix> backward;  // inverse
  int levels_checked = 0;
};

/// Mutually inverse chain maps between the two forms on levels whose
/// differentials are available. Throws ComparisonFailed at the first bad level.
ConormalizationCertificate compare_conormalizations(const CosimplicialAbGroup& a);

/// Cosimplicial chain complex with finitely many levels. Each level is a
/// chain complex in nonnegative internal degrees.
struct CosimplicialChainComplex {
  int max_level = 0;
  std::vector<GradedIntComplex> level;
  // [r][i] : internal degree -> matrix from level r to level r+1 (or r-1)
  std::vector<std::vector<std::map<int, IntMatrix>>> coface;
  std::vector<std::vector<std::map<int, IntMatrix>>> codegeneracy;

  int max_internal_degree() const;
  /// The cosimplicial abelian group in one internal degree.
  CosimplicialAbGroup internal_slice(int m) const;
};

/// Δ^•_*: normalized chains on the standard simplices.
CosimplicialChainComplex standard_cosimplicial_chains(int max_level);
/// Places a cosimplicial abelian group in internal degree 0.
CosimplicialChainComplex concentrated_in_degree_zero(const CosimplicialAbGroup& a);

/// Total complex of the conormalized bicomplex, truncated to levels
/// r <= max_level (a quotient complex, since the cosimplicial part raises r).
/// Level r, internal degree m sits in total degree m - r and the total
/// differential is D = ∂ - (-1)^p δ on total degree p. The returned window is
/// [lo - 1, hi + 1]. Throws WindowTooSmall when the input has fewer levels.
GradedIntComplex conormalize_bicomplex(const CosimplicialChainComplex& b, int max_level, int lo, int hi);

}  // namespace cosop
