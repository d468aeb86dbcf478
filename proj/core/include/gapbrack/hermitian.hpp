#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gapbrack {

/// Dense n x n complex matrix expected to be conjugate-symmetric to 1e-12.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t dimension() const { return n_; }

    std::complex<double>& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    /// max_{i,j} |a_ij - conj(a_ji)|
    double hermiticity_defect() const;

    double trace_real() const;
    double frobenius_norm() const;

    /// Principal submatrix on the given (ascending) index list.
    HermitianMatrix principal_submatrix(const std::vector<std::size_t>& keep) const;

private:
    std::size_t n_ = 0;
    std::vector<std::complex<double>> a_;
};

/// Eigenvalues in ascending order, repeated according to multiplicity.
struct Spectrum {
    std::vector<double> eigenvalues;

    std::size_t dimension() const { return eigenvalues.size(); }
    double operator[](std::size_t k) const { return eigenvalues[k]; }
};

/// All eigenvalues of a Hermitian matrix via cyclic Jacobi sweeps on the
/// 2n x 2n real-symmetric embedding [[Re, -Im], [Im, Re]]. Every eigenvalue
/// of the embedding appears twice; the duplicates are dropped by taking every
/// second entry of the sorted 2n-list. Deterministic; converges when the
/// off-diagonal Frobenius norm falls below tol * ||H||_F.
Spectrum hermitian_eigenvalues(const HermitianMatrix& h, double tol = 1e-10);

} // namespace gapbrack
