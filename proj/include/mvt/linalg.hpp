// Dense exact linear algebra over the rationals: fraction-free rank and an
// RREF kernel basis.
#pragma once

#include <vector>

#include "mvt/rational.hpp"

namespace mvt {

using QMatrix = std::vector<std::vector<Q>>;  // row-major, rows of equal length

// Rank by fraction-free (Bareiss) elimination after scaling each row to
// integers.
int matrix_rank(const QMatrix& a);
// Basis of the right kernel {x : a x = 0}; `cols` fixes the width when `a`
// has no rows. Basis vectors have a 1 in their free column.
std::vector<std::vector<Q>> kernel_basis(const QMatrix& a, int cols);
int kernel_dim(const QMatrix& a, int cols);
std::vector<Q> mat_vec(const QMatrix& a, const std::vector<Q>& x);
// 3-row matrix whose columns are the given vectors.
QMatrix columns_matrix(const std::vector<Vec3>& cols);

}  // namespace mvt
