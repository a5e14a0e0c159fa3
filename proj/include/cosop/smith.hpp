#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cosop/int_matrix.hpp"

namespace cosop {

struct SmithForm {
  std::vector<Integer> diagonal;  // nonzero invariant factors, d1 | d2 | ...
  IntMatrix u;                    // rows x rows, unimodular
  IntMatrix v;                    // cols x cols, unimodular
};

/// u * m * v is diagonal with the returned divisibility chain.
/// Dense algorithm with smallest-magnitude pivoting; meant for small inputs.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors only. Uses sparse elimination on unit entries
/// first and falls back to a dense Smith reduction on what is left.
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}. The basis is saturated since it
/// comes from a unimodular column transform.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some x with m x = b over Z, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b);

/// Inverse of a square unimodular matrix; throws NonSplitKernel otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Presentation of Z^n / im(relations) as a free group.
///
/// When every pivot can be taken as a unit the chosen generators are standard
/// basis vectors (`chosen` lists their indices); otherwise they come from a
/// Smith transform and `chosen` is empty. `reduce` maps Z^n onto the quotient.
struct CokernelPresentation {
  std::size_t ambient = 0;
  std::vector<std::size_t> chosen;
  IntMatrix reduce;   // quotient_rank x ambient
  IntMatrix section;  // ambient x quotient_rank, reduce * section = 1
  bool by_labels() const { return !chosen.empty() || reduce.rows() == 0; }
};

/// Throws TorsionCokernel if the quotient is not free.
CokernelPresentation cokernel_presentation(const IntMatrix& relations);

// Arithmetic over Z/p for prime p (entries reduced into [0, p)).
namespace modp {
using Mat = std::vector<std::vector<std::int64_t>>;
std::size_t rank(Mat m, std::int64_t p);
std::optional<std::vector<std::int64_t>> solve(Mat m, std::vector<std::int64_t> b, std::int64_t p);
/// Basis of the null space, one vector per entry.
std::vector<std::vector<std::int64_t>> kernel(Mat m, std::int64_t p);
Mat from_int(const IntMatrix& m, std::int64_t p);
}  // namespace modp

}  // namespace cosop
