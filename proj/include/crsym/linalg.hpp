#ifndef CRSYM_LINALG_HPP
#define CRSYM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "crsym/rational.hpp"

namespace crsym {

using RatVec = std::vector<Rat>;
/// Sparse row: (column, value) pairs, strictly ascending columns,
/// nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/// Reduced row echelon form of a list of rational vectors.  The result
/// is the canonical basis of the row space (pivot entries 1, pivots the
/// only nonzero in their column, rows ordered by pivot column).
std::vector<RatVec> rref(std::vector<RatVec> rows);

/// Canonical basis of {x : A x = 0}, returned in reduced row echelon
/// form (unique per subspace, so the output does not depend on row
/// order or on the elimination strategy).  Small dense systems go
/// through fraction-free Bareiss elimination on a denominator-cleared
/// integer matrix; large sparse ones through a sparse exact echelon.
std::vector<RatVec> kernel_basis(std::size_t cols, const std::vector<SparseRow>& rows);

/// Dense exact linear algebra over the Gaussian rationals (used by the
/// chain machinery, where systems are small and complex-linear).
using CVec = std::vector<Gauss>;

/// One solution of A x = b with all free variables set to zero
/// (deterministic), or nullopt when inconsistent.
std::optional<CVec> c_solve_particular(std::size_t cols, std::vector<CVec> a, CVec b);

/// Canonical (RREF) kernel basis of a complex matrix.
std::vector<CVec> c_kernel_basis(std::size_t cols, std::vector<CVec> a);

} // namespace crsym

#endif
