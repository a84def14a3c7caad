#pragma once

#include <vector>

#include "qchoquet/hermitian.hpp"

namespace qchoquet {

struct InvalidCoefficient : Error {
    using Error::Error;
};

struct NotComparable : Error {
    using Error::Error;
};

struct IndistinguishablePoints : Error {
    using Error::Error;
};

// Upper and lower sets are never materialized: a set is its finite generator
// list and membership is decided generator-wise through loewner_compare.

/// Union of O(g_i) = {g_i + rho | rho PSD}; phi is a member iff phi >= some g_i.
struct UpperSetGenerators {
    std::vector<HermitianMatrix> generators;  // non-empty, one shared dimension
};

/// Union of C(g_i) = {g_i - rho | rho PSD}; phi is a member iff phi <= some g_i.
struct LowerSetGenerators {
    std::vector<HermitianMatrix> generators;
};

bool upper_contains(const UpperSetGenerators& u, const HermitianMatrix& phi);
bool lower_contains(const LowerSetGenerators& l, const HermitianMatrix& phi);

/// Directedness witness: lambda*|theta| + mu*|phi| with |x| built by taking
/// absolute eigenvalues; dominates both inputs for lambda, mu >= 1.
HermitianMatrix upward_witness(const HermitianMatrix& theta, const HermitianMatrix& phi,
                               double lambda = 1.0, double mu = 1.0);

/// Points (1-t)theta + t*phi at t = j/(k-1); requires theta <= phi.
std::vector<HermitianMatrix> cumulative_chain(const HermitianMatrix& theta,
                                              const HermitianMatrix& phi, int k);

enum class WhichPoint { First, Second };

struct SeparatingGenerator {
    HermitianMatrix generator;
    WhichPoint contains;  // which of (theta, phi) lies in O(generator)
};

/// T0 separation: an upper-set generator whose set contains exactly one of
/// the two distinct points.
SeparatingGenerator t0_separating_generator(const HermitianMatrix& theta,
                                            const HermitianMatrix& phi);

}  // namespace qchoquet
