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

#include <lindprop/liouville.hpp>

#include <cmath>
#include <string>

#include <lindprop/errors.hpp>
#include <lindprop/tolerances.hpp>

namespace lindprop {

namespace {

const complex imag_unit(0.0, 1.0);

// Relative check; physical Hamiltonians in SI units have norms ~1e-19 J.
bool hermitian_within_tolerance(const complex_matrix& a)
{
    return hermiticity_residual(a) <= tolerances::hermitian * a.norm();
}

Eigen::Index exact_sqrt(Eigen::Index len)
{
    auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(len))));
    if (n * n != len || n == 0) {
        throw contract_violation("length " + std::to_string(len) +
                                 " is not a positive perfect square");
    }
    return n;
}

}

void lindblad_generator::validate() const
{
    if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
        throw contract_violation("lindblad_generator: Hamiltonian must be a "
                                 "non-empty square matrix");
    }
    if (!hermitian_within_tolerance(hamiltonian)) {
        throw contract_violation(
            "lindblad_generator: Hamiltonian is not Hermitian");
    }
    if (!(hbar > 0.0)) {
        throw contract_violation("lindblad_generator: hbar must be positive");
    }
    const Eigen::Index n = n_levels();
    for (const auto& term : collapse_terms) {
        if (term.op.rows() != n || term.op.cols() != n) {
            throw contract_violation(
                "lindblad_generator: collapse operator has wrong size");
        }
        if (!(term.rate >= 0.0)) {
            throw contract_violation(
                "lindblad_generator: collapse rates must be non-negative");
        }
    }
}

superoperator superoperator::from_matrix(complex_matrix m)
{
    if (m.rows() != m.cols()) {
        throw contract_violation("superoperator: matrix must be square");
    }
    const Eigen::Index n = exact_sqrt(m.rows());
    return { n, std::move(m) };
}

complex_vector vectorize(const density_matrix& rho)
{
    // Eigen storage is column-major, so this is a plain copy.
    return complex_vector::Map(rho.matrix.data(), rho.matrix.size());
}

density_matrix devectorize(const complex_vector& v)
{
    const Eigen::Index n = exact_sqrt(v.size());
    return { complex_matrix::Map(v.data(), n, n) };
}

superoperator commutator_superoperator(const lindblad_generator& gen)
{
    gen.validate();
    const Eigen::Index n = gen.n_levels();
    const complex_matrix id = identity(n);
    const complex_matrix& h = gen.hamiltonian;
    complex_matrix l = (imag_unit / gen.hbar) *
                       (kron(h.conjugate(), id) - kron(id, h));
    return { n, std::move(l) };
}

superoperator dissipator_superoperator(const lindblad_generator& gen)
{
    gen.validate();
    const Eigen::Index n = gen.n_levels();
    const complex_matrix id = identity(n);
    complex_matrix d = complex_matrix::Zero(n * n, n * n);
    for (const auto& term : gen.collapse_terms) {
        const complex_matrix& c = term.op;
        const complex_matrix cdc = c.adjoint() * c;
        d += term.rate * (kron(c.conjugate(), c) - 0.5 * kron(id, cdc) -
                          0.5 * kron(cdc.conjugate(), id));
    }
    return { n, std::move(d) };
}

superoperator full_generator(const lindblad_generator& gen)
{
    superoperator l = commutator_superoperator(gen);
    if (!gen.collapse_terms.empty()) {
        l.matrix += dissipator_superoperator(gen).matrix;
    }
    return l;
}

complex_matrix apply_generator(const lindblad_generator& gen,
                               const complex_matrix& rho)
{
    const complex_matrix& h = gen.hamiltonian;
    complex_matrix out = (-imag_unit / gen.hbar) * (h * rho - rho * h);
    for (const auto& term : gen.collapse_terms) {
        const complex_matrix& c = term.op;
        const complex_matrix cdc = c.adjoint() * c;
        out += term.rate *
               (c * rho * c.adjoint() - 0.5 * (cdc * rho + rho * cdc));
    }
    return out;
}

density_matrix apply(const superoperator& op, const density_matrix& rho)
{
    if (op.matrix.cols() != rho.matrix.size()) {
        throw contract_violation("apply: superoperator and state sizes differ");
    }
    return devectorize(op.matrix * vectorize(rho));
}

}
