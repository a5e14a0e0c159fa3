#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/int_matrix.hpp"

namespace cosop {

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  bool operator==(const HomologyGroup& o) const { return betti == o.betti && torsion == o.torsion; }
  std::string to_string() const;
};

/// Finitely generated free graded abelian group with a degree -1 differential.
///
/// Cochain complexes are stored with cohomological degree m placed at
/// homological degree -m; `cohomological()` records that regrading.
class GradedIntComplex {
 public:
  static constexpr int kUnbounded = INT_MAX / 4;

  GradedIntComplex() = default;

  void set_basis(int degree, std::vector<std::string> labels);
  /// Matrix from degree `degree` to degree `degree - 1`.
  void set_differential(int degree, IntMatrix d);
  void set_window(int lo, int hi) {
    window_lo_ = lo;
    window_hi_ = hi;
  }
  void set_cohomological(bool c) { cohomological_ = c; }

  std::size_t rank(int degree) const;
  const std::vector<std::string>& basis(int degree) const;
  /// Zero matrix of the right shape when nothing was stored.
  IntMatrix differential(int degree) const;
  std::vector<int> degrees() const;  // degrees with nonzero rank
  int window_lo() const { return window_lo_; }
  int window_hi() const { return window_hi_; }
  bool complete_at(int degree) const { return degree >= window_lo_ && degree <= window_hi_; }
  bool cohomological() const { return cohomological_; }

  /// Index of a label within its degree, or npos.
  std::size_t index_of(int degree, const std::string& label) const;

  /// Checks d_{k-1} d_k = 0 wherever both sides lie in the window.
  bool d_squared_zero() const;
  /// Throws IncompatibleInputs with the first failing degree.
  void assert_d_squared_zero() const;

  /// Throws DegreeOutsideWindow unless degree-1..degree+1 are complete.
  HomologyGroup homology(int degree) const;

  nlohmann::json to_json() const;

 private:
  std::map<int, std::vector<std::string>> basis_;
  std::map<int, IntMatrix> diff_;
  std::map<int, std::map<std::string, std::size_t>> index_;
  int window_lo_ = -kUnbounded;
  int window_hi_ = kUnbounded;
  bool cohomological_ = false;
};

GradedIntComplex tensor(const GradedIntComplex& a, const GradedIntComplex& b);

struct ChainMap {
  int degree_shift = 0;
  std::map<int, IntMatrix> matrices;  // source degree -> matrix
};

/// d_target f = (-1)^shift f d_source on every source degree where the source
/// and target data needed are complete.
bool is_chain_map(const GradedIntComplex& source, const GradedIntComplex& target, const ChainMap& f);

}  // namespace cosop
