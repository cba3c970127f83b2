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

#include <lindprop/cptp.hpp>

#include <algorithm>
#include <cmath>

#include <lindprop/errors.hpp>

namespace lindprop {

namespace {

void require_cp(const choi_verdict& verdict, const char* what)
{
    if (!verdict.is_completely_positive || !verdict.kraus_operators) {
        throw contract_violation(std::string(what) +
                                 ": verdict is not completely positive");
    }
}

}

complex_matrix choi_matrix(const superoperator& u)
{
    const Eigen::Index n = u.n_levels;
    if (n <= 0 || u.matrix.rows() != n * n || u.matrix.cols() != n * n) {
        throw contract_violation("choi_matrix: expected an N^2 x N^2 matrix");
    }
    complex_matrix c(n * n, n * n);
    // Pair (a, b) -> b * n + a, matching vectorize().
    for (Eigen::Index l = 0; l < n; l++) {
        for (Eigen::Index k = 0; k < n; k++) {
            for (Eigen::Index j = 0; j < n; j++) {
                for (Eigen::Index i = 0; i < n; i++) {
                    c(k * n + i, l * n + j) = u.matrix(j * n + i, l * n + k);
                }
            }
        }
    }
    return c;
}

choi_verdict verify_cptp(const superoperator& u, real tol)
{
    const Eigen::Index n = u.n_levels;
    const complex_matrix c = choi_matrix(u);

    choi_verdict verdict;
    verdict.hermiticity_preservation_residual = hermiticity_residual(c);

    const hermitian_eigensystem eig =
        hermitian_eigen((c + c.adjoint()) / 2.0);
    verdict.choi_eigenvalues = eig.eigenvalues;
    verdict.min_choi_eigenvalue = eig.eigenvalues.minCoeff();

    const real scale = eig.eigenvalues.cwiseAbs().maxCoeff();
    verdict.is_completely_positive =
        verdict.min_choi_eigenvalue >= -tol * scale &&
        verdict.hermiticity_preservation_residual <= tol * std::max(1.0, scale);

    // vec(I)^dagger U picks the rows (i, i) and sums them.
    complex_vector row = complex_vector::Zero(n * n);
    for (Eigen::Index i = 0; i < n; i++) {
        row += u.matrix.row(i * n + i).transpose();
    }
    for (Eigen::Index i = 0; i < n; i++) {
        row(i * n + i) -= 1.0;
    }
    verdict.trace_preservation_residual = row.norm();
    verdict.is_trace_preserving =
        verdict.trace_preservation_residual <= tol * double(n);

    verdict.is_cptp =
        verdict.is_completely_positive && verdict.is_trace_preserving;

    if (verdict.is_completely_positive) {
        std::vector<complex_matrix> kraus;
        for (Eigen::Index m = eig.eigenvalues.size() - 1; m >= 0; m--) {
            const real lambda = eig.eigenvalues(m);
            if (lambda <= tol) {
                break;
            }
            const complex_vector w = eig.eigenvectors.col(m) * std::sqrt(lambda);
            kraus.push_back(devectorize(w).matrix);
        }
        verdict.kraus_operators = std::move(kraus);
    }
    return verdict;
}

real kraus_reconstruct_check(const choi_verdict& verdict,
                             const superoperator& u)
{
    require_cp(verdict, "kraus_reconstruct_check");
    complex_matrix sum = complex_matrix::Zero(u.matrix.rows(), u.matrix.cols());
    for (const auto& v : *verdict.kraus_operators) {
        sum += kron(v.conjugate(), v);
    }
    return (u.matrix - sum).norm();
}

real kraus_completeness_residual(const choi_verdict& verdict)
{
    require_cp(verdict, "kraus_completeness_residual");
    const auto& ops = *verdict.kraus_operators;
    if (ops.empty()) {
        throw contract_violation(
            "kraus_completeness_residual: empty Kraus set");
    }
    const Eigen::Index n = ops.front().rows();
    complex_matrix sum = complex_matrix::Zero(n, n);
    for (const auto& v : ops) {
        sum += v.adjoint() * v;
    }
    return (sum - identity(n)).norm();
}

state_monitor monitor(const density_matrix& rho)
{
    const complex_matrix& r = rho.matrix;
    const complex_matrix h = (r + r.adjoint()) / 2.0;

    state_monitor m;
    m.trace_deviation = std::abs(r.trace() - 1.0);
    m.hermiticity_residual = hermiticity_residual(r);
    m.min_eigenvalue = hermitian_eigenvalues(h).minCoeff();
    m.populations = h.diagonal().real();
    m.max_population = m.populations.maxCoeff();
    return m;
}

std::optional<negativity_event>
first_negativity(std::span<const state_monitor> series, real dt, real threshold,
                 negativity_measure measure,
                 std::span<const std::int64_t> steps)
{
    if (!steps.empty() && steps.size() != series.size()) {
        throw contract_violation(
            "first_negativity: steps and series lengths differ");
    }
    for (std::size_t i = 0; i < series.size(); i++) {
        const real value = measure == negativity_measure::min_eigenvalue
                               ? series[i].min_eigenvalue
                               : series[i].min_population();
        if (value < -threshold) {
            const std::int64_t s =
                steps.empty() ? static_cast<std::int64_t>(i) : steps[i];
            return negativity_event{ s, double(s) * dt };
        }
    }
    return std::nullopt;
}

}
