#pragma once

#include "nosig/complex_matrix.hpp"

#include <vector>

namespace nosig {

/// Max tolerated deviation of m from m^dagger before an input is rejected
/// as non-Hermitian.
inline constexpr double kHermitianTol = 1e-10;

struct HermitianEigenSystem {
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // column k is the eigenvector of values[k]
};

/// All eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
/// rotations; the input is symmetrized as (m + m^dagger)/2 before iterating
/// and sweeps run until the off-diagonal Frobenius mass drops below 1e-12.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-negative_clamp, 0) are clamped to zero; anything below
/// -negative_clamp is an error.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double negative_clamp = 1e-9);

/// Inverse square root of a positive definite Hermitian matrix.
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, double min_eigenvalue = 1e-12);

} // namespace nosig
