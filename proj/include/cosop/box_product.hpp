#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/conormalization.hpp"
#include "cosop/delta.hpp"
#include "cosop/graded_complex.hpp"

namespace cosop {

constexpr int kMaxPositions = 16;
constexpr int kUnboundedComplexity = 1 << 20;

/// Complexity bound n of the filtration; kUnboundedComplexity means none.
struct ComplexityBound {
  int n = kUnboundedComplexity;
  ComplexityBound() = default;
  explicit ComplexityBound(int v);  // throws ValueOutOfRange for v < 1
  bool unbounded() const { return n >= kUnboundedComplexity; }
  bool admits(int c) const { return c <= n; }
  std::string to_string() const { return unbounded() ? "inf" : std::to_string(n); }
};

/// Number of value changes for two-valued sequences, maximum over all
/// two-valued subsequences in general. Values must be >= 1.
int complexity(const std::vector<int>& f);

/// A pair (f : [q] -> {1..k}, φ : [q] -> [r]) with φ order-preserving.
/// Labels are stored 1-based as in the combinatorial description.
struct Symbol {
  std::uint8_t k = 0;
  std::uint8_t r = 0;
  std::uint8_t n = 0;  // number of positions, q + 1
  std::array<std::uint8_t, kMaxPositions> f{};
  std::array<std::uint8_t, kMaxPositions> phi{};

  int q() const { return n - 1; }
  int internal_degree() const { return n - k; }
  int degree() const { return n - k - r; }
  std::vector<int> f_values() const { return {f.begin(), f.begin() + n}; }
  std::vector<int> phi_values() const { return {phi.begin(), phi.begin() + n}; }
  int fiber_size(int label) const;
  int complexity() const { return cosop::complexity(f_values()); }

  /// φ(i) = φ(i+1) implies f(i) != f(i+1).
  bool condition_d() const;
  /// The image of φ contains 1..r.
  bool condition_b() const;
  bool onto() const;

  std::string label() const;
  nlohmann::json to_json() const;
  static Symbol make(int k, int r, const std::vector<int>& f, const std::vector<int>& phi);

  bool operator==(const Symbol& o) const;
  bool operator<(const Symbol& o) const;
};

struct SymbolHash {
  std::size_t operator()(const Symbol& s) const;
};

/// Sparse integer combination of symbols, kept sorted without zero terms.
/// Coefficients are 64-bit with checked arithmetic (overflow throws).
using Chain = std::vector<std::pair<Symbol, long long>>;
void normalize(Chain& c);
Chain add(const Chain& a, const Chain& b, long long scale = 1);
Chain scaled(const Chain& a, long long s);
long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

/// Symbols satisfying (a)-(d) with complexity <= n, in lexicographic order
/// of (f, φ).
std::vector<Symbol> enumerate_symbols(int k, int q, int r, ComplexityBound n = {});
/// Box-level basis at level [r]: onto f and condition (d), without (b).
/// With `surjective_only` false the augmented version is requested; for
/// tuples of Δ^•_* the two coincide because Δ^∅_* = 0.
std::vector<Symbol> enumerate_level_basis(int k, int q, int r, ComplexityBound n = {}, bool surjective_only = true);

/// Internal boundary of a level basis element, dropping terms that break (d).
Chain internal_boundary(const Symbol& s);
/// Cosimplicial operator α : [r] -> [r'] acting by φ ↦ α∘φ; zero if (d) fails.
std::optional<Symbol> act(const OrderedMap& alpha, const Symbol& s);
Chain act(const OrderedMap& alpha, const Chain& c);

/// Ξ^n_k(Δ^•_*, ..., Δ^•_*) at level [r], internal degrees of symbols with
/// q <= qmax. Throws BoundsExceeded when qmax + 1 > kMaxPositions.
GradedIntComplex box_level(int k, ComplexityBound n, int r, int qmax);

/// The cosimplicial abelian group of Ξ^n_k in internal degree m, levels
/// 0..max_level. Restricting to one f gives a direct summand.
CosimplicialAbGroup box_cosimplicial_group(int k, ComplexityBound n, int m, int max_level);
CosimplicialAbGroup box_cosimplicial_group_for(const std::vector<int>& f, int max_level);

/// Kernel-form representative of a cokernel-form symbol: the projection
/// Q_{r-1} ∘ ... ∘ Q_0 with Q_i = 1 - d^{i+1} s^i. Memoized per thread; the
/// reference stays valid for the lifetime of the calling thread.
const Chain& kernel_lift(const Symbol& s);
/// Cokernel projection: drops terms violating (b).
Chain project(const Chain& c);

/// Relabeling by a permutation of {1..k}: block i gets label perm[i-1]
/// (1-based values). Carries the Koszul sign of reordering the tensor
/// factors, whose degrees are the fiber sizes minus one.
std::pair<Symbol, int> relabel(const Symbol& s, const std::vector<int>& perm);
Chain relabel(const Chain& c, const std::vector<int>& perm);
/// Sign of reordering graded items into the order `order` (entries are
/// indices into `degrees`).
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order);

/// The coherence map Ξ_k(Ξ_{j_1}, ..., Ξ_{j_k}) -> Ξ_{j_1+...+j_k} on one
/// basis tensor: `outer` at level S, and inner[i] at level |f^{-1}(i)| - 1.
/// Returns nothing when the flattened pair violates (d).
std::optional<Symbol> coherence_flatten(const Symbol& outer, const std::vector<Symbol>& inner);

/// Ξ_k(g_1, ..., g_k) followed by the coherence map, at level [r] of the
/// standard tuple. Each g_i is a cokernel-form chain of T(j_i); the result is
/// the matrix from box_level(k, ., r, qmax) to box_level(J, ., r, qmax_out).
ChainMap box_functorial_map(int k, int r, int qmax, const std::vector<Chain>& g, const std::vector<int>& arities,
                            ComplexityBound n_source, ComplexityBound n_target, int qmax_out);
/// Images of one level basis element under the same map.
Chain box_functorial_apply(const Symbol& s, const std::vector<Chain>& g, const std::vector<int>& arities);

}  // namespace cosop
