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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <lindprop/errors.hpp>
#include <lindprop/numkernel.hpp>

#include "test_support.hpp"

using namespace lindprop;
using namespace lindprop::testing;

TEST_CASE("kron of identities is the identity")
{
    CHECK(approx_equal(kron(identity(2), identity(2)), identity(4), 0.0));
}

TEST_CASE("kron places b in the blocks selected by a")
{
    complex_matrix a = complex_matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    const complex_matrix k = kron(a, identity(2));

    complex_matrix expected = complex_matrix::Zero(4, 4);
    expected.block(0, 2, 2, 2) = identity(2);
    CHECK(approx_equal(k, expected, 0.0));
}

TEST_CASE("kron entry index arithmetic matches the explicit loop")
{
    rng_t rng(11);
    const complex_matrix a = random_matrix(2, 2, rng);
    const complex_matrix b = random_matrix(2, 2, rng);
    const complex_matrix k = kron(a, b);
    CHECK(std::abs(k(2, 3) - a(1, 1) * b(0, 1)) == 0.0);

    const complex_matrix c = random_matrix(3, 2, rng);
    const complex_matrix d = random_matrix(2, 4, rng);
    CHECK(approx_equal(kron(c, d), kron_loop(c, d), 1e-15));
}

TEST_CASE("kron is bilinear")
{
    rng_t rng(12);
    for (int trial = 0; trial < 20; trial++) {
        const complex_matrix a = random_matrix(3, 2, rng);
        const complex_matrix b = random_matrix(2, 3, rng);
        const complex_matrix c = random_matrix(2, 3, rng);
        const complex_matrix lhs = kron(a, b + c);
        const complex_matrix rhs = kron(a, b) + kron(a, c);
        CHECK((lhs - rhs).norm() <= 1e-13 * lhs.norm());
    }
}

TEST_CASE("matrix_exponential of zero and diagonal matrices")
{
    CHECK(approx_equal(matrix_exponential(complex_matrix::Zero(3, 3)),
                       identity(3), 0.0));

    complex_matrix d = complex_matrix::Zero(2, 2);
    d(0, 0) = std::log(2.0);
    complex_matrix expected = complex_matrix::Zero(2, 2);
    expected(0, 0) = 2.0;
    expected(1, 1) = 1.0;
    CHECK(approx_equal(matrix_exponential(d), expected, 1e-15));
}

TEST_CASE("matrix_exponential matches the eigendecomposition oracle")
{
    rng_t rng(13);
    for (int trial = 0; trial < 10; trial++) {
        const complex_matrix h = random_hermitian(4, rng);
        const complex_matrix e = matrix_exponential(complex(0.0, 1.0) * h);
        CHECK((e - exp_i_hermitian(h, 1.0)).norm() < 1e-12);
        CHECK((e * e.adjoint() - identity(4)).norm() < 1e-12);
    }
}

TEST_CASE("exp of skew-Hermitian matrices is unitary and exp(a) exp(-a) = I")
{
    rng_t rng(14);
    std::uniform_real_distribution<real> scale(0.1, 10.0);
    for (int trial = 0; trial < 30; trial++) {
        const Eigen::Index n = 2 + trial % 5;
        complex_matrix a = complex(0.0, 1.0) * random_hermitian(n, rng);
        a *= scale(rng) / a.norm();
        const complex_matrix e = matrix_exponential(a);
        CHECK((e * e.adjoint() - identity(n)).norm() < 1e-12);
        CHECK((e * matrix_exponential(-a) - identity(n)).norm() < 1e-12);
    }
}

TEST_CASE("exp(a) exp(-a) = I for general matrices with norm <= 10")
{
    rng_t rng(15);
    std::uniform_real_distribution<real> scale(0.1, 10.0);
    for (int trial = 0; trial < 30; trial++) {
        const Eigen::Index n = 2 + trial % 4;
        complex_matrix a = random_matrix(n, n, rng);
        a *= scale(rng) / a.norm();
        const complex_matrix prod =
            matrix_exponential(a) * matrix_exponential(-a);
        CHECK((prod - identity(n)).norm() < 1e-12);
    }
}

TEST_CASE("matrix_exponential reports overflow and bad shapes")
{
    complex_matrix big = complex_matrix::Zero(2, 2);
    big(0, 0) = 1e6;
    CHECK_THROWS_AS(matrix_exponential(big), numerical_failure);

    complex_matrix nan = complex_matrix::Zero(2, 2);
    nan(1, 0) = std::nan("");
    CHECK_THROWS_AS(matrix_exponential(nan), numerical_failure);

    CHECK_THROWS_AS(matrix_exponential(complex_matrix::Zero(2, 3)),
                    contract_violation);
}

TEST_CASE("hermitian_eigen on closed-form cases")
{
    const auto id = hermitian_eigen(identity(3));
    CHECK(id.eigenvalues.isApprox(real_vector::Ones(3)));

    complex_matrix d = complex_matrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto de = hermitian_eigen(d);
    CHECK(de.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(de.eigenvalues(1) == doctest::Approx(2.0));
    CHECK(de.eigenvalues(2) == doctest::Approx(3.0));

    complex_matrix sx = complex_matrix::Zero(2, 2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    const auto se = hermitian_eigen(sx);
    CHECK(se.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(se.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen reconstructs its input")
{
    rng_t rng(16);
    for (int trial = 0; trial < 20; trial++) {
        const complex_matrix a = random_hermitian(2 + trial % 6, rng);
        const auto e = hermitian_eigen(a);
        const complex_matrix& v = e.eigenvectors;
        const complex_matrix rec = v * e.eigenvalues.cast<complex>().asDiagonal() *
                                   v.adjoint();
        CHECK((rec - a).norm() < 1e-10 * a.norm());
        CHECK((v.adjoint() * v - identity(a.rows())).norm() < 1e-12);
        for (Eigen::Index i = 1; i < e.eigenvalues.size(); i++) {
            CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
        }
    }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input")
{
    complex_matrix a = identity(2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(a), contract_violation);
}

TEST_CASE("solve on closed-form cases")
{
    rng_t rng(17);
    const complex_matrix b = random_matrix(3, 2, rng);
    CHECK(approx_equal(solve(identity(3), b), b, 0.0));

    complex_matrix d = complex_matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    complex_matrix expected = complex_matrix::Zero(2, 2);
    expected(0, 0) = 0.5;
    expected(1, 1) = 0.25;
    CHECK(approx_equal(solve(d, identity(2)), expected, 1e-16));
}

TEST_CASE("solve recovers a constructed solution")
{
    rng_t rng(18);
    for (int trial = 0; trial < 20; trial++) {
        const Eigen::Index n = 2 + trial % 6;
        const complex_matrix a = random_matrix(n, n, rng) + 3.0 * identity(n);
        const complex_matrix x0 = random_matrix(n, 2, rng);
        const complex_matrix b = a * x0;
        const complex_matrix x = solve(a, b);
        CHECK((a * x - b).norm() < 1e-10 * b.norm());
        CHECK((x - x0).norm() < 1e-10 * x0.norm());
    }
}

TEST_CASE("solve rejects singular systems and mismatched shapes")
{
    complex_matrix s = complex_matrix::Ones(2, 2);
    CHECK_THROWS_AS(solve(s, identity(2)), numerical_failure);

    complex_matrix ill = identity(2);
    ill(1, 1) = 1e-14;
    CHECK_THROWS_AS(solve(ill, identity(2)), numerical_failure);

    CHECK_THROWS_AS(solve(identity(2), identity(3)), contract_violation);
}
