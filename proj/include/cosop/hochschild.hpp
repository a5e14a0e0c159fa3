#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/graded_complex.hpp"
#include "cosop/int_matrix.hpp"
#include "cosop/operad_axioms.hpp"

namespace cosop {

enum class CoefficientRing { Integers, ModP };

/// Associative unital algebra, free of finite rank over Z or Z/p, given by
/// structure constants e_i e_j = sum_k c[i][j][k] e_k.
class FiniteRankAlgebra {
 public:
  using Tensor = std::vector<std::vector<std::vector<Integer>>>;

  /// Checks associativity and the two-sided unit on all basis triples;
  /// throws InvalidInput.
  FiniteRankAlgebra(std::string name, CoefficientRing ring, long p, Tensor structure, std::vector<Integer> unit);

  const std::string& name() const { return name_; }
  CoefficientRing ring() const { return ring_; }
  long modulus() const { return p_; }  // 0 over Z
  int rank() const { return n_; }
  const Integer& c(int i, int j, int k) const { return c_[i][j][k]; }
  const std::vector<Integer>& unit() const { return unit_; }

  Integer reduce(const Integer& v) const;
  std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

  nlohmann::json to_json() const;
  static FiniteRankAlgebra from_json(const nlohmann::json& j);

  static FiniteRankAlgebra integers();
  /// Z/p[x]/(x^2), basis 1, x.
  static FiniteRankAlgebra dual_numbers(long p);
  /// Upper-triangular 2x2 matrices over Z/p, basis E11, E12, E22.
  static FiniteRankAlgebra upper_triangular(long p);
  /// All 2x2 matrices over Z/p, basis E11, E12, E21, E22.
  static FiniteRankAlgebra matrices(long p);

 private:
  std::string name_;
  CoefficientRing ring_;
  long p_;
  int n_;
  Tensor c_;
  std::vector<Integer> unit_;
};

/// A multilinear map R^{⊗p} -> R. coeffs[(i_1 ... i_p) * n + k] is the e_k
/// coefficient of ρ(e_{i_1} ⊗ ... ⊗ e_{i_p}), inputs read in base n.
struct HochschildCochain {
  int degree = 0;
  std::vector<Integer> coeffs;
  bool operator==(const HochschildCochain& o) const = default;
  bool is_zero() const;
};

std::size_t cochain_size(const FiniteRankAlgebra& r, int degree);
HochschildCochain zero_cochain(const FiniteRankAlgebra& r, int degree);
HochschildCochain basis_cochain(const FiniteRankAlgebra& r, int degree, std::size_t index);
/// The degree 0 cochain given by the unit.
HochschildCochain unit_cochain(const FiniteRankAlgebra& r);

HochschildCochain hochschild_differential(const FiniteRankAlgebra& r, const HochschildCochain& rho);
HochschildCochain hochschild_cup(const FiniteRankAlgebra& r, const HochschildCochain& a, const HochschildCochain& b);
/// Signed sum of single insertions of b into a.
HochschildCochain hochschild_circle(const FiniteRankAlgebra& r, const HochschildCochain& a, const HochschildCochain& b);
HochschildCochain gerstenhaber_bracket(const FiniteRankAlgebra& r, const HochschildCochain& a,
                                       const HochschildCochain& b);
HochschildCochain add(const FiniteRankAlgebra& r, const HochschildCochain& a, const HochschildCochain& b,
                      long scale = 1);

/// Matrix of d : C^p -> C^{p+1} (entries reduced mod p when applicable).
IntMatrix differential_matrix(const FiniteRankAlgebra& r, int degree);

struct HochschildGroup {
  int degree = 0;
  std::size_t rank = 0;           // Betti number over Z, dimension over Z/p
  std::vector<Integer> torsion;   // only over Z
  bool operator==(const HochschildGroup& o) const = default;
  nlohmann::json to_json() const;
};

/// H^0 .. H^pmax. Throws InfeasibleSize beyond the size guard.
std::vector<HochschildGroup> hochschild_cohomology(const FiniteRankAlgebra& r, int pmax);

/// Independent computation: the differential is rebuilt by expanding the
/// defining formula on algebra elements, and ranks come from exhaustive
/// enumeration over Z/p when small enough, else from a separate elimination.
struct HochschildOracle {
  std::vector<HochschildGroup> groups;
  std::vector<std::string> methods;  // per degree: "enumeration" or "elimination"
  bool differentials_agree = true;   // rebuilt matrices equal differential_matrix
};
HochschildOracle hochschild_oracle(const FiniteRankAlgebra& r, int pmax);

using CupFn = std::function<HochschildCochain(const FiniteRankAlgebra&, const HochschildCochain&,
                                              const HochschildCochain&)>;
/// A cup product that drops every term with deg a > deg b.
CupFn skewed_cup();

struct HochschildReport {
  std::string algebra;
  int pmax = 0;
  int cochain_pmax = 0;
  std::vector<HochschildGroup> cohomology;
  HochschildOracle oracle;
  std::vector<AxiomCheck> checks;
  std::vector<nlohmann::json> certificates;  // a sample of the cobounding cochains
  bool passed() const;
  const AxiomCheck& check(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Cochain-level identities on all basis cochains of degree <= cochain_pmax,
/// cohomology against the oracle through pmax, and Gerstenhaber identities
/// on cocycle generators in degrees whose results stay within pmax, each
/// settled by an explicit cobounding cochain.
HochschildReport hochschild_report(const FiniteRankAlgebra& r, int pmax, int cochain_pmax);
HochschildReport hochschild_report(const FiniteRankAlgebra& r, int pmax, int cochain_pmax, const CupFn& cup);

}  // namespace cosop
