#pragma once

#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "cosop/box_product.hpp"
#include "cosop/graded_complex.hpp"

namespace cosop {

/// Symbol-level model of T_n (n unbounded gives T). Elements of T_n(k) are
/// finite integer combinations of symbols of arity k; the true spaces are
/// products over all levels, which `complex` truncates.
class ChainOperad {
 public:
  explicit ChainOperad(ComplexityBound n = {}) : n_(n) {}
  ComplexityBound complexity_bound() const { return n_; }

  /// Total differential D = ∂ - (-1)^p δ on the cokernel basis.
  Chain differential(const Symbol& s) const;
  Chain differential(const Chain& c) const;

  /// The level-r component id_r of the unit; the unit is the sum over r.
  static Symbol unit_component(int r);

  /// γ(h; g_1..g_k) by substitution of the lifted arguments into h.
  Chain gamma(const Symbol& h, const std::vector<Symbol>& g) const;
  /// Multilinear extension.
  Chain gamma(const Chain& h, const std::vector<Chain>& g) const;
  /// The same composite computed as C(Γ ∘ Ξ(g_1..g_k)) ∘ h through
  /// box_functorial_apply on the kernel lift of h.
  Chain gamma_matrix(const Symbol& h, const std::vector<Symbol>& g) const;

  /// Right Σ_k action relabeling the blocks (perm is 1-based).
  static Chain act(const Chain& c, const std::vector<int>& perm);

  /// Degree-p basis of T_n(k) restricted to levels r <= max_level.
  std::vector<Symbol> basis(int k, int p, int max_level) const;
  /// T_n(k) as the quotient complex of levels r <= max_level, on degrees
  /// lo-1..hi+1. Labels follow conormalize_bicomplex: "r<r>m<m>:<symbol>".
  GradedIntComplex complex(int k, int max_level, int lo, int hi) const;

 private:
  ComplexityBound n_;
};

/// Label of a symbol inside an assembled total complex.
std::string total_label(const Symbol& s);

/// Box levels of the standard tuple assembled into a cosimplicial chain
/// complex with internal degrees up to qmax + 1 - k.
CosimplicialChainComplex box_cosimplicial_chain_complex(int k, ComplexityBound n, int qmax, int max_level);

/// Level at which a request for degrees lo..hi of arity k stays within
/// symbols with q <= qmax; negative when the window does not fit.
int truncation_level(int k, int hi, int qmax);

}  // namespace cosop
