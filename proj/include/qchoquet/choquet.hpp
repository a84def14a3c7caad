#pragma once

#include <map>
#include <vector>

#include "qchoquet/capacity.hpp"

namespace qchoquet {

struct NonPositiveValue : Error {
    using Error::Error;
};

struct NotACapacity : Error {
    using Error::Error;
};

struct DimensionPolicyViolation : Error {
    using Error::Error;
};

struct NonPSDIncrement : Error {
    using Error::Error;
};

struct UnsupportedArity : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

/// Measured expectation values <theta({r})>, r = 1..n; strictly positive.
struct ExpectationVector {
    std::vector<double> values;

    int n() const { return static_cast<int>(values.size()); }
    double at(int r) const { return values[static_cast<size_t>(r - 1)]; }  // 1-based
};

/// sigma sorts the values ascending; ties broken by ascending original index.
struct RankingPermutation {
    std::vector<int> sigma;      // sigma[k-1] is the index (1-based) of rank k
    std::vector<double> values;  // sorted ascending
};

RankingPermutation rank(const ExpectationVector& ev);

bool comonotonic(const ExpectationVector& a, const ExpectationVector& b);

/// Classical Choquet integral of f >= 0 against the scalar capacity mu
/// (function-increment form over the full n-chain).
double classical_choquet(const std::vector<double>& f, const std::map<SubsetKey, double>& mu);

struct ChoquetPolicy {
    bool allow_outside_regime = false;   // lift the d <= n < d^2-1 gate
    bool allow_mobius_n_gt_d = false;    // compute the Mobius form for n != d anyway
};

struct ChoquetResult {
    HermitianMatrix matrix;            // C(R), positive semi-definite
    std::vector<double> increments;    // expectation-value increments, largest rank first
    std::vector<SubsetKey> chain;      // nested subsets, chain[0] = {sigma(n)}
    std::vector<std::string> flags;
};

/// Form (1): expectation-value increments against the nested top chain.
/// Only the d largest expectation values enter; the last increment is taken
/// relative to the largest non-entering value when n > d.
ChoquetResult quantum_choquet_ev_increments(const MatrixCapacity& c, const ExpectationVector& ev,
                                            const ChoquetPolicy& policy = {});

/// Form (2): expectation values against PSD observable increments along the
/// same chain; algebraically equal to form (1).
ChoquetResult quantum_choquet_obs_increments(const MatrixCapacity& c, const ExpectationVector& ev,
                                             const ChoquetPolicy& policy = {});

/// Form (3): Mobius expansion sum_A M(A) min_{r in A} <theta({r})>.
/// Equivalence with form (1) is established only for n = d.
ChoquetResult quantum_choquet_mobius(const MatrixCapacity& c, const ExpectationVector& ev,
                                     const ChoquetPolicy& policy = {});

}  // namespace qchoquet
