#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosop/chain_operad.hpp"

namespace cosop {

using GammaFn = std::function<Chain(const Symbol&, const std::vector<Symbol>&)>;

struct AxiomCheck {
  std::string name;
  std::size_t instances = 0;  // instances evaluated
  std::size_t available = 0;  // instances in the window
  std::size_t failures = 0;
  std::vector<nlohmann::json> witnesses;  // first few failures
  double seconds = 0;
  bool passed() const { return failures == 0; }
};

struct OperadAxiomReport {
  std::string family;
  int k_max = 0;
  int qmax = 0;
  std::size_t cap = 0;
  std::uint64_t seed = 0;
  bool exhaustive = true;  // every check ran on its full window
  std::vector<AxiomCheck> checks;
  bool passed() const;
  const AxiomCheck& check(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Which instances to check. Every input symbol has q <= qmax, arities of
/// all composites are at most k_max and composites have at most qmax + 1
/// positions. Checks with more than `cap` instances are sampled with `seed`.
struct AxiomPolicy {
  int k_max = 3;
  int qmax = 4;
  std::size_t cap = 50'000'000;
  std::uint64_t seed = 1;
  bool compare_routes = true;
};

OperadAxiomReport verify_operad_axioms(const ChainOperad& op, const AxiomPolicy& policy);
/// Same checks with γ replaced, for negative controls.
OperadAxiomReport verify_operad_axioms(const ChainOperad& op, const AxiomPolicy& policy, const GammaFn& gamma);

/// γ with the sign flipped on a single operation of arity 2.
GammaFn corrupted_gamma(const ChainOperad& op);

/// Every permutation of 1..k as a 1-based vector, identity first.
std::vector<std::vector<int>> permutations(int k);

}  // namespace cosop
