#pragma once

#include <vector>

#include "condensa/matrix.hpp"

namespace condensa {

/// Thin SVD of a t x m matrix: a = u * diag(s) * vt with r = min(t, m),
/// u t x r with orthonormal columns, vt r x m with orthonormal rows, and
/// s non-increasing and non-negative.
struct SvdResult {
    Matrix u;
    std::vector<double> singular_values;
    Matrix vt;
};

/// One-sided Jacobi SVD. `tol` is the relative off-diagonal threshold that
/// stops column rotations; the reconstruction satisfies
/// ||a - u*diag(s)*vt||_F <= tol * ||a||_F. Capped at 100 sweeps; throws
/// NoConvergenceError if the cap is hit.
SvdResult svd(const Matrix& a, double tol = 1e-12);

}  // namespace condensa
