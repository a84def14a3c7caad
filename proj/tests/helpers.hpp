#pragma once

// Shared generators for the property tests: seeded random Hermitian data and
// random lattices whose monotonicity holds by construction.

#include <cstdint>
#include <random>
#include <vector>

#include "qchoquet/capacity.hpp"
#include "qchoquet/choquet.hpp"
#include "qchoquet/hermitian.hpp"

namespace qchoquet::testing {

inline HermitianMatrix random_hermitian(int dim, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, scale);
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = normal(gen);
        for (int j = i + 1; j < dim; ++j) {
            const cplx z(normal(gen), normal(gen));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return HermitianMatrix(m);
}

inline HermitianMatrix random_psd(int dim, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, scale);
    CMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(normal(gen), normal(gen));
    return HermitianMatrix(g * g.adjoint());
}

/// Singletons are strictly positive definite and scaled so that any interior
/// subset sum with per-element weights <= 1.5 stays strictly below identity;
/// the per-element weights are constant across subsets, which makes the
/// builder output monotone for free.
struct RandomLattice {
    MatrixCapacity capacity;
    std::vector<HermitianMatrix> singletons;
    LatticeWeights weights;
};

inline RandomLattice random_lattice(int dim, int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0xabcdef1234567891ULL);
    std::uniform_real_distribution<double> weight_dist(1.0, 1.5);

    RandomLattice out;
    // lambda_max(rho + 0.1 I) <= 1.1 for a density matrix rho, so the scale s
    // bounds every weighted interior sum by 0.9.
    const double s = 0.9 / (1.5 * n * 1.1);
    for (int r = 0; r < n; ++r) {
        HermitianMatrix rho = random_density_matrix(dim, seed * 1000 + static_cast<std::uint64_t>(r));
        out.singletons.push_back(s * (rho + 0.1 * HermitianMatrix::identity(dim)));
    }

    std::vector<double> per_element(static_cast<size_t>(n));
    for (double& w : per_element) w = weight_dist(gen);
    for (const SubsetKey& a : all_subsets(n)) {
        if (a.cardinality() <= 1 || a.cardinality() >= n) continue;
        for (int r : a.elements()) out.weights[a][r] = per_element[static_cast<size_t>(r - 1)];
    }

    out.capacity = build_lattice(out.singletons, out.weights);
    return out;
}

inline ExpectationVector random_expectations(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0x5851f42d4c957f2dULL);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    ExpectationVector ev;
    for (int r = 0; r < n; ++r) ev.values.push_back(dist(gen));
    return ev;
}

}  // namespace qchoquet::testing
