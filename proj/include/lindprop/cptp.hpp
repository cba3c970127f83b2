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

#ifndef LINDPROP_CPTP_HPP
#define LINDPROP_CPTP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <lindprop/liouville.hpp>
#include <lindprop/tolerances.hpp>

namespace lindprop {

/**
 * Outcome of a CPTP certification of an update matrix.
 *
 * is_cptp == is_completely_positive && is_trace_preserving. Kraus
 * operators are only extracted for completely positive maps.
 */
struct choi_verdict
{
    real_vector choi_eigenvalues;
    real min_choi_eigenvalue = 0.0;
    /// ||vec(I)^dagger U - vec(I)^dagger||.
    real trace_preservation_residual = 0.0;
    /// ||C - C^dagger||_F; zero for Hermiticity-preserving maps.
    real hermiticity_preservation_residual = 0.0;
    bool is_completely_positive = false;
    bool is_trace_preserving = false;
    bool is_cptp = false;
    std::optional<std::vector<complex_matrix>> kraus_operators;
};

/**
 * Choi matrix by index reshuffle C[(i,k),(j,l)] = U[(i,j),(k,l)].
 *
 * With column-major pairs, U = sum_i V_i^* (x) V_i exactly when
 * C = sum_i vec(V_i) vec(V_i)^dagger.
 */
complex_matrix choi_matrix(const superoperator& u);

/// Certifies u. CP means min eig(C) >= -tol * ||C||_2, TP means the trace
/// residual is at most tol * N. Never throws on non-CPTP input.
choi_verdict verify_cptp(const superoperator& u,
                         real tol = tolerances::choi);

/// ||U - sum_i V_i^* (x) V_i||_F. Requires a completely positive verdict.
real kraus_reconstruct_check(const choi_verdict& verdict,
                             const superoperator& u);

/// ||sum_i V_i^dagger V_i - I||_F. Requires a completely positive verdict.
real kraus_completeness_residual(const choi_verdict& verdict);

struct state_monitor
{
    real trace_deviation = 0.0;
    real hermiticity_residual = 0.0;
    real min_eigenvalue = 0.0;
    real max_population = 0.0;
    /// Real diagonal of (rho + rho^dagger) / 2.
    real_vector populations;

    real min_population() const { return populations.minCoeff(); }
};

/// Eigenvalues come from the Hermitian part of rho.
state_monitor monitor(const density_matrix& rho);

enum class negativity_measure
{
    /// Smallest eigenvalue of the Hermitian part.
    min_eigenvalue,
    /// Smallest diagonal entry (population).
    min_population
};

struct negativity_event
{
    std::int64_t step;
    real time;
};

/**
 * Earliest entry whose chosen measure drops below -threshold.
 *
 * series[i] is the monitor after step steps[i]; when steps is empty the
 * index into series is the step.
 */
std::optional<negativity_event>
first_negativity(std::span<const state_monitor> series, real dt,
                 real threshold = tolerances::negativity,
                 negativity_measure measure = negativity_measure::min_eigenvalue,
                 std::span<const std::int64_t> steps = {});

}

#endif
