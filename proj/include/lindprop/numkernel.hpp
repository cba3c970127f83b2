// Copyright 2026 The lindprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINDPROP_NUMKERNEL_HPP
#define LINDPROP_NUMKERNEL_HPP

#include <complex>

#include <Eigen/Dense>

namespace lindprop {

using real = double;
using complex = std::complex<real>;

/// Dense, column-major complex matrix. Every entry is always stored.
using complex_matrix = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic>;
using complex_vector = Eigen::Matrix<complex, Eigen::Dynamic, 1>;
using real_vector = Eigen::Matrix<real, Eigen::Dynamic, 1>;

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
complex_matrix kron(const complex_matrix& a, const complex_matrix& b);

/**
 * Matrix exponential via scaling and squaring with a Pade approximant.
 *
 * Throws numerical_failure when the input or the result contains
 * non-finite values.
 */
complex_matrix matrix_exponential(const complex_matrix& a);

struct hermitian_eigensystem
{
    /// Ascending.
    real_vector eigenvalues;
    /// Columns are orthonormal eigenvectors.
    complex_matrix eigenvectors;
};

/**
 * Eigendecomposition of a Hermitian matrix.
 *
 * Requires ||a - a^dagger||_F < tolerances::hermitian * max(1, ||a||_F)
 * (contract_violation otherwise). Only the Hermitian part of a is
 * decomposed.
 */
hermitian_eigensystem hermitian_eigen(const complex_matrix& a);

/// Eigenvalues only, ascending. Same precondition as hermitian_eigen().
real_vector hermitian_eigenvalues(const complex_matrix& a);

/**
 * Solves a * x = b with partial-pivot LU.
 *
 * Throws numerical_failure for singular or ill-conditioned a (reciprocal
 * condition estimate below 1 / tolerances::max_condition) and
 * contract_violation for mismatched shapes.
 */
complex_matrix solve(const complex_matrix& a, const complex_matrix& b);

/// Tolerance-based equality: ||a - b||_F <= tol.
bool approx_equal(const complex_matrix& a, const complex_matrix& b,
                  real tol);

/// ||a - a^dagger||_F.
real hermiticity_residual(const complex_matrix& a);

complex_matrix identity(Eigen::Index n);

}

#endif
