#include <doctest.h>

#include "test_helpers.hpp"

using namespace pdlab;
using namespace pdlab::testing;

TEST_CASE("matmul, trace_of_product, adjoint") {
    const ComplexMatrix a = random_matrix(17, 1);
    const ComplexMatrix b = random_matrix(17, 2);
    const ComplexMatrix c = matmul(a, b);
    const ComplexMatrix ref = naive_matmul(a, b);
    for (std::size_t i = 0; i < 17 * 17; ++i)
        CHECK(std::abs(c.data()[i] - ref.data()[i]) < 1e-11);
    CHECK(std::abs(trace_of_product(a, b) - trace(ref)) < 1e-11);
    const ComplexMatrix aa = a.adjoint();
    for (std::size_t i = 0; i < 17; ++i)
        for (std::size_t j = 0; j < 17; ++j)
            CHECK(aa.at(i, j) == std::conj(a.at(j, i)));
}

TEST_CASE("hermitian eigendecomposition solves A v = lambda v") {
    const ComplexMatrix h = random_hermitian(24, 5);
    const HermitianEigen eig = hermitian_eigen(h);
    REQUIRE(eig.values.size() == 24);
    for (std::size_t k = 1; k < 24; ++k) CHECK(eig.values[k - 1] <= eig.values[k]);
    for (std::size_t k = 0; k < 24; ++k) {
        double resid = 0.0;
        for (std::size_t i = 0; i < 24; ++i) {
            cplx av{};
            for (std::size_t j = 0; j < 24; ++j) av += h.at(i, j) * eig.vectors.at(j, k);
            resid = std::max(resid, std::abs(av - eig.values[k] * eig.vectors.at(i, k)));
        }
        CHECK(resid < 1e-11);
    }
}

TEST_CASE("hermitian_function reconstructs and inverts") {
    const ComplexMatrix h = random_hermitian(16, 9);
    const HermitianEigen eig = hermitian_eigen(h);
    const ComplexMatrix same = hermitian_function(eig, [](double x) { return x; });
    for (std::size_t i = 0; i < 16 * 16; ++i)
        CHECK(std::abs(same.data()[i] - h.data()[i]) < 1e-11);

    // shift to positive definite, then S = H^{-1/2} must square to H^{-1}
    ComplexMatrix pos = h;
    const double shift = std::abs(eig.values.front()) + 1.0;
    for (std::size_t i = 0; i < 16; ++i) pos.at(i, i) += shift;
    const HermitianEigen peig = hermitian_eigen(pos);
    const ComplexMatrix inv_sqrt =
        hermitian_function(peig, [](double x) { return 1.0 / std::sqrt(x); });
    const ComplexMatrix should_be_identity = matmul(matmul(inv_sqrt, pos), inv_sqrt);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            const cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{};
            CHECK(std::abs(should_be_identity.at(i, j) - expect) < 1e-10);
        }
}

TEST_CASE("hermitian defect measure") {
    ComplexMatrix m(3);
    m.at(0, 1) = cplx{1.0, 2.0};
    m.at(1, 0) = cplx{1.0, -2.0};
    CHECK(max_hermitian_defect(m) == 0.0);
    m.at(1, 0) = cplx{1.0, -2.5};
    CHECK(max_hermitian_defect(m) == doctest::Approx(0.5));
}
