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

#ifndef LINDPROP_LIOUVILLE_HPP
#define LINDPROP_LIOUVILLE_HPP

#include <vector>

#include <lindprop/numkernel.hpp>

namespace lindprop {

/// CODATA 2018 reduced Planck constant in J s.
inline constexpr real hbar_si = 1.054571817e-34;

/**
 * N x N density matrix.
 *
 * Intermediate states are allowed to violate Hermiticity, unit trace and
 * positivity; the monitors in cptp.hpp measure those violations.
 */
struct density_matrix
{
    complex_matrix matrix;

    Eigen::Index n_levels() const { return matrix.rows(); }
};

struct collapse_term
{
    complex_matrix op;
    /// Non-negative, per second (or per time unit when hbar = 1).
    real rate;
};

/**
 * Generator of Lindblad form
 *   d rho / dt = -i/hbar [H, rho]
 *                + sum_k rate_k (C_k rho C_k^dagger - 1/2 {C_k^dagger C_k, rho}).
 */
struct lindblad_generator
{
    complex_matrix hamiltonian;
    std::vector<collapse_term> collapse_terms;
    real hbar = hbar_si;

    Eigen::Index n_levels() const { return hamiltonian.rows(); }

    /// Throws contract_violation on a non-Hermitian Hamiltonian, negative
    /// rates, mismatched operator sizes or non-positive hbar.
    void validate() const;
};

/// N^2 x N^2 matrix acting on column-stacked states.
struct superoperator
{
    Eigen::Index n_levels = 0;
    complex_matrix matrix;

    /// Validates that matrix is n_levels^2 square.
    static superoperator from_matrix(complex_matrix m);
};

/// Column-major stacking: rho(i, j) lands at index j * N + i.
complex_vector vectorize(const density_matrix& rho);

/// Inverse of vectorize(). The length must be a perfect square.
density_matrix devectorize(const complex_vector& v);

/// i/hbar (H^* (x) I - I (x) H); reproduces -i/hbar [H, rho].
superoperator commutator_superoperator(const lindblad_generator& gen);

/// sum_k rate_k [C_k^* (x) C_k - 1/2 I (x) C_k^dagger C_k
///               - 1/2 (C_k^dagger C_k)^* (x) I].
superoperator dissipator_superoperator(const lindblad_generator& gen);

superoperator full_generator(const lindblad_generator& gen);

/// Evaluates the generator on rho in the regular N x N representation.
complex_matrix apply_generator(const lindblad_generator& gen,
                               const complex_matrix& rho);

/// devectorize(op * vectorize(rho)).
density_matrix apply(const superoperator& op, const density_matrix& rho);

}

#endif
