#pragma once

// Small dense complex linear algebra: inner products, a cyclic Jacobi
// eigensolver for Hermitian matrices and a one-sided Jacobi SVD. The
// matrices handled here are at most a few hundred rows, so nothing is
// blocked or vectorized.

#include <span>
#include <vector>

#include "zakframe/types.hpp"

namespace zakframe::linalg {

/// <a, b> = sum_i a_i conj(b_i): linear in the first slot.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> a);
double norm_sq(std::span<const cplx> a);

CMatrix adjoint(const CMatrix& a);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Gram matrix G(i, j) = <v_j, v_i>, i.e. G = V^* V with the v_j as columns of V.
CMatrix gram_matrix(const std::vector<CVector>& vectors);

/// Frame operator S = sum_j v_j v_j^*.
CMatrix frame_operator(const std::vector<CVector>& vectors, std::size_t dim);

struct Eigensystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
};

/// Cyclic Jacobi on a Hermitian matrix. Only the upper triangle is trusted.
Eigensystem hermitian_eigensystem(const CMatrix& a);
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

/// Singular values (descending) by one-sided Jacobi rotations. Zero singular
/// values come out at round-off level relative to the largest one.
std::vector<double> singular_values(const CMatrix& a);

/// Numerical rank: singular values above rel_tol * sigma_max.
std::size_t numerical_rank(const CMatrix& a, double rel_tol);

/// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
/// residual norm falls to drop_below or less are discarded.
std::vector<CVector> orthonormalize(const std::vector<CVector>& vectors, double drop_below);

/// Norm of v minus its projection onto span(basis); basis must be orthonormal.
double projection_residual(std::span<const cplx> v, const std::vector<CVector>& basis);

}  // namespace zakframe::linalg
