#include "gapbrack/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapbrack/errors.hpp"

namespace gapbrack {

double HermitianMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i).real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

HermitianMatrix HermitianMatrix::principal_submatrix(
    const std::vector<std::size_t>& keep) const {
    HermitianMatrix sub(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            sub.at(i, j) = at(keep[i], keep[j]);
    return sub;
}

namespace {

// Cyclic Jacobi for a dense real symmetric matrix, diagonal returned in
// place. Row-major storage, fixed (p, q) sweep order for determinism.
void jacobi_diagonalise(std::vector<double>& m, std::size_t n, double tol) {
    if (n < 2) return;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };

    double norm = 0.0;
    for (double v : m) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;

    const double target = tol * norm;
    const std::size_t max_sweeps = 100;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * m[idx(p, q)] * m[idx(p, q)];
        if (std::sqrt(off) < target) return;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = m[idx(p, q)];
                if (apq == 0.0) continue;
                double app = m[idx(p, p)];
                double aqq = m[idx(q, q)];
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = m[idx(k, p)];
                    double akq = m[idx(k, q)];
                    m[idx(k, p)] = m[idx(p, k)] = c * akp - s * akq;
                    m[idx(k, q)] = m[idx(q, k)] = s * akp + c * akq;
                }
                m[idx(p, p)] = app - t * apq;
                m[idx(q, q)] = aqq + t * apq;
                m[idx(p, q)] = m[idx(q, p)] = 0.0;
            }
        }
    }
    throw solver_error("Jacobi eigensolver failed to converge in 100 sweeps");
}

} // namespace

Spectrum hermitian_eigenvalues(const HermitianMatrix& h, double tol) {
    const std::size_t n = h.dimension();
    if (h.hermiticity_defect() > 1e-12)
        throw validation_error("matrix is not Hermitian within 1e-12 (defect " +
                               std::to_string(h.hermiticity_defect()) + ")");
    if (!(tol > 0.0)) throw validation_error("eigensolver tolerance must be positive");
    if (n == 0) return {};

    // Embed H = A + iB as the real symmetric [[A, -B], [B, A]].
    const std::size_t m = 2 * n;
    std::vector<double> embed(m * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double re = h.at(i, j).real();
            double im = h.at(i, j).imag();
            embed[i * m + j] = re;
            embed[(i + n) * m + (j + n)] = re;
            embed[i * m + (j + n)] = -im;
            embed[(i + n) * m + j] = im;
        }
    }
    jacobi_diagonalise(embed, m, tol);

    std::vector<double> doubled(m);
    for (std::size_t i = 0; i < m; ++i) doubled[i] = embed[i * m + i];
    std::sort(doubled.begin(), doubled.end());

    Spectrum out;
    out.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < m; i += 2) out.eigenvalues.push_back(doubled[i]);
    return out;
}

} // namespace gapbrack
