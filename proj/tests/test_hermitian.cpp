#include <doctest.h>

#include <complex>
#include <random>

#include "gapbrack/errors.hpp"
#include "gapbrack/hermitian.hpp"
#include "oracles.hpp"

using namespace gapbrack;

namespace {

HermitianMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.at(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            std::complex<double> z(dist(rng), dist(rng));
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    return h;
}

} // namespace

TEST_CASE("scaled identity") {
    HermitianMatrix h(4);
    for (int i = 0; i < 4; ++i) h.at(i, i) = 2.5;
    Spectrum s = hermitian_eigenvalues(h);
    for (int k = 0; k < 4; ++k) CHECK(s[k] == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("2x2 real symmetric [[1,-1],[-1,1]]") {
    HermitianMatrix h(2);
    h.at(0, 0) = 1.0;
    h.at(1, 1) = 1.0;
    h.at(0, 1) = -1.0;
    h.at(1, 0) = -1.0;
    Spectrum s = hermitian_eigenvalues(h);
    CHECK(s[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("agrees with the characteristic polynomial at n = 2 and 3") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        HermitianMatrix h2 = random_hermitian(rng, 2);
        auto expected2 = oracle::eig2(h2.at(0, 0).real(), h2.at(0, 1), h2.at(1, 1).real());
        Spectrum got2 = hermitian_eigenvalues(h2);
        for (int k = 0; k < 2; ++k)
            CHECK(got2[k] == doctest::Approx(expected2[k]).epsilon(1e-10));

        HermitianMatrix h3 = random_hermitian(rng, 3);
        auto expected3 =
            oracle::eig3(h3.at(0, 0).real(), h3.at(1, 1).real(), h3.at(2, 2).real(),
                         h3.at(0, 1), h3.at(0, 2), h3.at(1, 2));
        Spectrum got3 = hermitian_eigenvalues(h3);
        for (int k = 0; k < 3; ++k)
            CHECK(got3[k] == doctest::Approx(expected3[k]).epsilon(1e-9));
    }
}

TEST_CASE("real-symmetric embedding of a 6x6 Hermitian doubles each eigenvalue") {
    std::mt19937 rng(9);
    HermitianMatrix h = random_hermitian(rng, 6);
    Spectrum base = hermitian_eigenvalues(h);

    // build the 12x12 embedding [[Re, -Im], [Im, Re]] as a real Hermitian
    HermitianMatrix embed(12);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            double re = h.at(i, j).real();
            double im = h.at(i, j).imag();
            embed.at(i, j) = re;
            embed.at(i + 6, j + 6) = re;
            embed.at(i, j + 6) = -im;
            embed.at(i + 6, j) = im;
        }
    }
    CHECK(embed.hermiticity_defect() == 0.0);
    Spectrum doubled = hermitian_eigenvalues(embed);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(doubled[2 * k] == doctest::Approx(base[k]).epsilon(1e-9));
        CHECK(doubled[2 * k + 1] == doctest::Approx(base[k]).epsilon(1e-9));
    }
}

TEST_CASE("non-Hermitian input beyond tolerance is rejected") {
    HermitianMatrix h(2);
    h.at(0, 1) = {0.0, 1.0};
    h.at(1, 0) = {0.0, 1.0};  // should be -i
    CHECK(h.hermiticity_defect() > 1e-12);
    CHECK_THROWS_AS(hermitian_eigenvalues(h), validation_error);
}

TEST_CASE("deterministic across runs") {
    std::mt19937 rng(13);
    HermitianMatrix h = random_hermitian(rng, 8);
    Spectrum a = hermitian_eigenvalues(h);
    Spectrum b = hermitian_eigenvalues(h);
    CHECK(a.eigenvalues == b.eigenvalues);
}

TEST_CASE("trace and Frobenius helpers") {
    HermitianMatrix h(2);
    h.at(0, 0) = 3.0;
    h.at(1, 1) = -1.0;
    h.at(0, 1) = {0.0, 2.0};
    h.at(1, 0) = {0.0, -2.0};
    CHECK(h.trace_real() == doctest::Approx(2.0));
    CHECK(h.frobenius_norm() == doctest::Approx(std::sqrt(9.0 + 1.0 + 4.0 + 4.0)));
}
