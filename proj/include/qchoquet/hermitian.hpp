#pragma once

#include <cstdint>
#include <vector>

#include "qchoquet/matrix.hpp"

namespace qchoquet {

struct NonConvergence : Error {
    using Error::Error;
};

struct NotADensityMatrix : Error {
    using Error::Error;
};

/// Spectral data of a Hermitian matrix: ascending eigenvalues with rank-1
/// eigenprojectors built from the computed orthonormal eigenvectors.
struct EigenDecomposition {
    std::vector<double> eigenvalues;           // non-decreasing
    std::vector<HermitianMatrix> projectors;   // rank-1, sum to identity
    std::vector<std::vector<cplx>> vectors;    // orthonormal columns, vectors[r] pairs with eigenvalues[r]
};

enum class Definiteness { PositiveSemiDefinite, NegativeSemiDefinite, Zero, Indefinite };
enum class Ordering { Less, Equal, Greater, Incomparable };

/// Outcome of a Loewner comparison of a against b, together with the
/// definiteness class of a - b.
struct OrderClassification {
    Ordering ordering;
    Definiteness difference_class;
};

struct SpectralInterval {
    double lo;  // smallest eigenvalue
    double hi;  // largest eigenvalue
};

/// Relative scale used by the default comparison tolerances.
inline double scale_of(const HermitianMatrix& h) {
    return h.frobenius_norm() > 1.0 ? h.frobenius_norm() : 1.0;
}

/// Default Jacobi convergence target for the off-diagonal Frobenius norm.
inline double default_eigen_tol(const HermitianMatrix& h) {
    return 1e-12 * (h.frobenius_norm() > 0.0 ? h.frobenius_norm() : 1.0);
}

/// Cyclic Jacobi eigensolver (row-major sweep order). Converged when the
/// off-diagonal Frobenius norm drops below tol. Deterministic for fixed input.
EigenDecomposition eigendecompose(const HermitianMatrix& h, double tol);
EigenDecomposition eigendecompose(const HermitianMatrix& h);

SpectralInterval spectral_interval(const HermitianMatrix& h);

/// e_1(H) >= -tol with tol = 1e-10 * max(1, ||H||_F) by default.
bool is_positive_semidefinite(const HermitianMatrix& h, double tol);
bool is_positive_semidefinite(const HermitianMatrix& h);

bool is_density_matrix(const HermitianMatrix& h, double tol = 1e-8);

/// Loewner classification of a - b.
OrderClassification loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b);

/// Re Tr(R theta) for a density matrix R.
double expectation(const HermitianMatrix& rho, const HermitianMatrix& theta);

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with
/// diagonal phase correction. Deterministic per seed.
CMatrix random_unitary(int dim, std::uint64_t seed);

/// G G^dag / Tr(G G^dag) from a seeded complex Gaussian G.
HermitianMatrix random_density_matrix(int dim, std::uint64_t seed);

}  // namespace qchoquet
