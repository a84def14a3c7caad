#pragma once

#include <vector>

#include "qchoquet/choquet.hpp"

namespace qchoquet {

struct ZeroTrace : Error {
    using Error::Error;
};

struct InvalidSpectrum : Error {
    using Error::Error;
};

/// R1 = C(R)/Tr C(R) with per-observable errors E_r against the measured
/// expectation values.
struct ReconstructionReport {
    HermitianMatrix r1;
    std::vector<double> eigenvalues;       // of r1, ascending
    std::vector<double> reproduced;        // Tr[R1 theta({r})]
    std::vector<double> errors;            // |reproduced - ev| / ev
    std::vector<double> absolute_errors;   // |reproduced - ev|
    std::vector<SubsetKey> chain;
    std::vector<std::string> flags;
};

ReconstructionReport reconstruct(const MatrixCapacity& c, const ExpectationVector& ev,
                                 const ChoquetPolicy& policy = {});

/// Rank of the singletons flattened to real vectors of length 2d^2;
/// computed by Gram-Schmidt with the given pivot threshold.
struct IndependenceReport {
    bool independent;
    int rank;
};

IndependenceReport check_linear_independence(const std::vector<HermitianMatrix>& singletons,
                                             double tol = 1e-10);

/// For comparable singleton pairs theta({r}) > theta({s}), warn when
/// ev[r] - ev[s] exceeds Tr theta({r}) - Tr theta({s}). Informational only.
std::vector<std::string> check_trace_inequality(const MatrixCapacity& c,
                                                const ExpectationVector& ev);

/// The d = 3 commuting demo family: diagonal projector singletons with
/// theta({2,3}) = diag(lambda, 1, 1). Reconstruction has the closed form
/// C(R) = diag((1-lambda) e1 + lambda e2, e2, e3).
ReconstructionReport projector_example(double e1, double e2, double e3, double lambda);

/// The lattice used by projector_example, exposed for cross-checks.
MatrixCapacity projector_example_lattice(double lambda);

}  // namespace qchoquet
