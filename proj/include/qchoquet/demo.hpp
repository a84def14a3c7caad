#pragma once

#include <vector>

#include "qchoquet/reconstruct.hpp"

namespace qchoquet::demo {

// Built-in data for the non-commuting-observables demo: four positive
// definite 3x3 observables, two lattice completions over them, and the
// reference state whose expectation values drive the reconstruction.
// Expected outputs are frozen here so `demo` runs can self-check.

std::vector<HermitianMatrix> noncommuting_singletons();

/// choice is 1 or 2; the two lattices differ only in the weight of element 4
/// inside {2,4}, {1,2,4} and {2,3,4}.
MatrixCapacity noncommuting_lattice(int choice);

LatticeWeights noncommuting_weights(int choice);

HermitianMatrix noncommuting_reference_state();

ExpectationVector noncommuting_expectations();

struct NoncommutingGolden {
    std::vector<int> sigma;
    std::vector<double> increments;            // along the chain, largest rank first
    std::vector<double> chain_coefficients;    // of theta({2}), theta({3}), theta({4}) in C(R)
    std::vector<std::vector<double>> r1_real;  // Re R1
    std::vector<std::vector<double>> r1_imag;  // Im R1
    std::vector<double> eigenvalues;
    std::vector<double> reproduced;
    std::vector<double> errors;
    double tol_values;  // matrices, eigenvalues, reproduced
    double tol_errors;

    // Three-decimal published snapshot of the same run, for coarse checks.
    std::vector<std::vector<double>> snapshot_r1_real;
    std::vector<std::vector<double>> snapshot_r1_imag;
    std::vector<double> snapshot_eigenvalues;
    std::vector<double> snapshot_reproduced;
    double tol_snapshot;  // 0.001: half-ULP of the snapshot plus slack
};

NoncommutingGolden noncommuting_golden(int choice);

struct ProjectorGolden {
    double e1 = 0.1, e2 = 0.3, e3 = 0.6;
    std::vector<double> lambdas{0.0, 0.25, 0.5, 0.75};
};

/// Closed-form error family for the commuting demo: E1, E2, E3 as functions
/// of (e, lambda) with the shared denominator 1 + lambda (e2 - e1).
std::vector<double> projector_errors_closed_form(double e1, double e2, double e3, double lambda);

}  // namespace qchoquet::demo
