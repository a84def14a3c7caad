#include "qchoquet/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace qchoquet {

namespace {

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenDecomposition eigendecompose(const HermitianMatrix& h, double tol) {
    if (tol <= 0.0) throw Error("eigendecompose: tol must be > 0");
    const int d = h.dim();
    CMatrix a = h.raw();
    CMatrix v = CMatrix::identity(d);

    int sweep = 0;
    while (off_diagonal_norm(a) > tol) {
        if (sweep++ >= kMaxSweeps)
            throw NonConvergence("eigendecompose: off-diagonal norm did not reach tol within " +
                                 std::to_string(kMaxSweeps) + " sweeps");
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                const double m = std::abs(apq);
                if (m == 0.0) continue;
                const cplx phase = apq / m;  // a(p,q) = m * phase
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                const cplx upp = c, upq = s;
                const cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

                for (int k = 0; k < d; ++k) {  // A <- A U
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (int k = 0; k < d; ++k) {  // A <- U^dag A
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (int k = 0; k < d; ++k) {  // V <- V U
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.reserve(static_cast<size_t>(d));
    out.projectors.reserve(static_cast<size_t>(d));
    out.vectors.reserve(static_cast<size_t>(d));
    for (int r : order) {
        out.eigenvalues.push_back(a(r, r).real());
        std::vector<cplx> col(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) col[static_cast<size_t>(k)] = v(k, r);
        out.projectors.push_back(HermitianMatrix::projector(col));
        out.vectors.push_back(std::move(col));
    }
    return out;
}

EigenDecomposition eigendecompose(const HermitianMatrix& h) {
    return eigendecompose(h, default_eigen_tol(h));
}

SpectralInterval spectral_interval(const HermitianMatrix& h) {
    const EigenDecomposition e = eigendecompose(h);
    return {e.eigenvalues.front(), e.eigenvalues.back()};
}

bool is_positive_semidefinite(const HermitianMatrix& h, double tol) {
    return spectral_interval(h).lo >= -tol;
}

bool is_positive_semidefinite(const HermitianMatrix& h) {
    return is_positive_semidefinite(h, 1e-10 * scale_of(h));
}

bool is_density_matrix(const HermitianMatrix& h, double tol) {
    return std::abs(h.trace() - 1.0) <= tol && is_positive_semidefinite(h, tol);
}

OrderClassification loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("loewner_compare: dimension mismatch");
    const HermitianMatrix diff = a - b;
    const double eq_scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
    if (diff.frobenius_norm() < 1e-10 * eq_scale) return {Ordering::Equal, Definiteness::Zero};

    const SpectralInterval iv = spectral_interval(diff);
    const double tol = 1e-10 * scale_of(diff);
    const bool psd = iv.lo >= -tol;
    const bool nsd = iv.hi <= tol;
    if (psd && nsd) return {Ordering::Equal, Definiteness::Zero};
    if (psd) return {Ordering::Greater, Definiteness::PositiveSemiDefinite};
    if (nsd) return {Ordering::Less, Definiteness::NegativeSemiDefinite};
    return {Ordering::Incomparable, Definiteness::Indefinite};
}

double expectation(const HermitianMatrix& rho, const HermitianMatrix& theta) {
    if (rho.dim() != theta.dim()) throw DimensionMismatch("expectation: dimension mismatch");
    if (!is_density_matrix(rho)) throw NotADensityMatrix("expectation: R is not a density matrix");
    const cplx t = (rho.raw() * theta.raw()).trace();
    // Tr(R theta) is real for Hermitian R, theta; roundoff only.
    if (std::abs(t.imag()) > 1e-10 * (1.0 + std::abs(t.real())))
        throw Error("expectation: trace has non-negligible imaginary part");
    return t.real();
}

CMatrix random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw Error("random_unitary: dim must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));

    // Modified Gram-Schmidt on columns. Normalizing by the (real, positive)
    // residual norm keeps the R diagonal positive, which is exactly the phase
    // convention that makes Q Haar-distributed.
    CMatrix q(dim);
    for (int j = 0; j < dim; ++j) {
        std::vector<cplx> col(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) col[static_cast<size_t>(i)] = g(i, j);
        for (int k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * col[static_cast<size_t>(i)];
            for (int i = 0; i < dim; ++i) col[static_cast<size_t>(i)] -= proj * q(i, k);
        }
        double n2 = 0.0;
        for (const cplx& z : col) n2 += std::norm(z);
        const double n = std::sqrt(n2);
        for (int i = 0; i < dim; ++i) q(i, j) = col[static_cast<size_t>(i)] / n;
    }
    return q;
}

HermitianMatrix random_density_matrix(int dim, std::uint64_t seed) {
    if (dim < 1) throw Error("random_density_matrix: dim must be >= 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
    CMatrix gg = g * g.adjoint();
    const double tr = gg.trace().real();
    return HermitianMatrix(cplx(1.0 / tr) * gg);
}

}  // namespace qchoquet
