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

#ifndef LINDPROP_TOLERANCES_HPP
#define LINDPROP_TOLERANCES_HPP

namespace lindprop {

/**
 * Central tolerance record shared by the library, the CLI and the tests.
 * All values are Frobenius-norm based unless noted otherwise.
 */
struct tolerances
{
    /// ||a - a^dagger|| bound for "Hermitian" inputs.
    static constexpr double hermitian = 1e-10;
    /// |tr rho - 1| bound for a valid density matrix.
    static constexpr double trace = 1e-10;
    /// Smallest admissible eigenvalue of a valid density matrix is -psd.
    static constexpr double psd = 1e-10;
    /// Relative bound on negative Choi eigenvalues (scaled by ||C||).
    static constexpr double choi = 1e-10;
    /// ||sum V^dagger V - I|| bound for an extracted Kraus set.
    static constexpr double kraus = 1e-9;
    /// Absolute threshold below which a monitor counts as negative.
    static constexpr double negativity = 1e-9;
    /// Largest acceptable condition estimate in linear solves.
    static constexpr double max_condition = 1e12;
    /// Relative residual bound for solve() and hermitian_eigen().
    static constexpr double residual = 1e-10;
};

}

#endif
