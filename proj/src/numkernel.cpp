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

#include <lindprop/numkernel.hpp>

#include <cmath>
#include <string>

#include <lindprop/errors.hpp>
#include <lindprop/tolerances.hpp>

namespace lindprop {

namespace {

void require_square(const complex_matrix& a, const char* what)
{
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw contract_violation(std::string(what) +
                                 ": expected a non-empty square matrix, got " +
                                 std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()));
    }
}

void require_hermitian(const complex_matrix& a, const char* what)
{
    require_square(a, what);
    const real res = hermiticity_residual(a);
    if (!(res < tolerances::hermitian * std::max<real>(1.0, a.norm()))) {
        throw contract_violation(std::string(what) +
                                 ": matrix is not Hermitian (residual " +
                                 std::to_string(res) + ")");
    }
}

// Scaling and squaring with the (13,13) Pade approximant, evaluated in
// extended precision. In plain double the rounding bias of exp(L dt) in the
// trace rows accumulates coherently over long runs (~2e-12 after 2e4 ladder
// steps); extended evaluation keeps the rounded result near-correctly
// rounded.
using extended = long double;
using extended_matrix =
    Eigen::Matrix<std::complex<extended>, Eigen::Dynamic, Eigen::Dynamic>;

// Pade-13 admissible 1-norm for a 64-bit mantissa.
constexpr extended pade13_max_norm = 4.0246098906697353063L;

extended_matrix pade13_exp(const extended_matrix& arg)
{
    static constexpr extended b[] = {
        64764752532480000.L, 32382376266240000.L, 7771770303897600.L,
        1187353796428800.L,  129060195264000.L,   10559470521600.L,
        670442572800.L,      33522128640.L,       1323241920.L,
        40840800.L,          960960.L,            16380.L,
        182.L,               1.L
    };
    const extended l1norm = arg.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (l1norm > pade13_max_norm) {
        squarings = static_cast<int>(std::ceil(std::log2(l1norm / pade13_max_norm)));
    }
    const extended_matrix a = arg * std::ldexp(extended(1), -squarings);
    const extended_matrix id = extended_matrix::Identity(a.rows(), a.cols());
    const extended_matrix a2 = a * a;
    const extended_matrix a4 = a2 * a2;
    const extended_matrix a6 = a4 * a2;

    const extended_matrix u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
             b[5] * a4 + b[3] * a2 + b[1] * id);
    const extended_matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                              b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    extended_matrix r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; i++) {
        r = r * r;
    }
    return r;
}

}

complex_matrix kron(const complex_matrix& a, const complex_matrix& b)
{
    const Eigen::Index p = a.rows(), q = a.cols();
    const Eigen::Index m = b.rows(), n = b.cols();
    complex_matrix out(p * m, q * n);
    for (Eigen::Index j = 0; j < q; j++) {
        for (Eigen::Index i = 0; i < p; i++) {
            out.block(i * m, j * n, m, n) = a(i, j) * b;
        }
    }
    return out;
}

complex_matrix matrix_exponential(const complex_matrix& a)
{
    require_square(a, "matrix_exponential");
    if (!a.allFinite()) {
        throw numerical_failure("matrix_exponential: non-finite input");
    }
    complex_matrix result =
        pade13_exp(a.cast<std::complex<extended>>()).cast<complex>();
    if (!result.allFinite()) {
        throw numerical_failure(
            "matrix_exponential: result overflowed (input norm " +
            std::to_string(a.norm()) + ")");
    }
    return result;
}

hermitian_eigensystem hermitian_eigen(const complex_matrix& a)
{
    require_hermitian(a, "hermitian_eigen");
    const complex_matrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<complex_matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw numerical_failure("hermitian_eigen: solver did not converge");
    }
    return { solver.eigenvalues(), solver.eigenvectors() };
}

real_vector hermitian_eigenvalues(const complex_matrix& a)
{
    require_hermitian(a, "hermitian_eigenvalues");
    const complex_matrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<complex_matrix> solver(
        h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numerical_failure(
            "hermitian_eigenvalues: solver did not converge");
    }
    return solver.eigenvalues();
}

complex_matrix solve(const complex_matrix& a, const complex_matrix& b)
{
    require_square(a, "solve");
    if (b.rows() != a.rows()) {
        throw contract_violation("solve: right-hand side has " +
                                 std::to_string(b.rows()) + " rows, expected " +
                                 std::to_string(a.rows()));
    }
    Eigen::PartialPivLU<complex_matrix> lu(a);
    const real rcond = lu.rcond();
    if (!(rcond > 1.0 / tolerances::max_condition)) {
        throw numerical_failure("solve: matrix is singular or ill-conditioned "
                                "(rcond " + std::to_string(rcond) + ")");
    }
    complex_matrix x = lu.solve(b);
    if (!x.allFinite()) {
        throw numerical_failure("solve: non-finite solution");
    }
    return x;
}

bool approx_equal(const complex_matrix& a, const complex_matrix& b, real tol)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return (a - b).norm() <= tol;
}

real hermiticity_residual(const complex_matrix& a)
{
    return (a - a.adjoint()).norm();
}

complex_matrix identity(Eigen::Index n)
{
    return complex_matrix::Identity(n, n);
}

}
