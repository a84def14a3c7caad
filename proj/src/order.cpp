#include "qchoquet/order.hpp"

#include <cmath>

namespace qchoquet {

namespace {

void check_generators(const std::vector<HermitianMatrix>& gens, const HermitianMatrix& phi) {
    if (gens.empty()) throw Error("generator list must be non-empty");
    for (const HermitianMatrix& g : gens)
        if (g.dim() != phi.dim()) throw DimensionMismatch("generator dimension mismatch");
}

HermitianMatrix absolute_value(const HermitianMatrix& h) {
    const EigenDecomposition e = eigendecompose(h);
    HermitianMatrix out = HermitianMatrix::zero(h.dim());
    for (size_t r = 0; r < e.eigenvalues.size(); ++r)
        out = out + std::abs(e.eigenvalues[r]) * e.projectors[r];
    return out;
}

}  // namespace

bool upper_contains(const UpperSetGenerators& u, const HermitianMatrix& phi) {
    check_generators(u.generators, phi);
    for (const HermitianMatrix& g : u.generators) {
        const Ordering o = loewner_compare(phi, g).ordering;
        if (o == Ordering::Greater || o == Ordering::Equal) return true;
    }
    return false;
}

bool lower_contains(const LowerSetGenerators& l, const HermitianMatrix& phi) {
    check_generators(l.generators, phi);
    for (const HermitianMatrix& g : l.generators) {
        const Ordering o = loewner_compare(phi, g).ordering;
        if (o == Ordering::Less || o == Ordering::Equal) return true;
    }
    return false;
}

HermitianMatrix upward_witness(const HermitianMatrix& theta, const HermitianMatrix& phi,
                               double lambda, double mu) {
    if (theta.dim() != phi.dim()) throw DimensionMismatch("upward_witness: dimension mismatch");
    if (lambda < 1.0 || mu < 1.0)
        throw InvalidCoefficient("upward_witness: coefficients must be >= 1");
    const HermitianMatrix psi = lambda * absolute_value(theta) + mu * absolute_value(phi);
    for (const HermitianMatrix* x : {&theta, &phi}) {
        const Ordering o = loewner_compare(psi, *x).ordering;
        if (o != Ordering::Greater && o != Ordering::Equal)
            throw Error("upward_witness: constructed matrix fails to dominate an input");
    }
    return psi;
}

std::vector<HermitianMatrix> cumulative_chain(const HermitianMatrix& theta,
                                              const HermitianMatrix& phi, int k) {
    if (k < 2) throw Error("cumulative_chain: k must be >= 2");
    const Ordering o = loewner_compare(theta, phi).ordering;
    if (o != Ordering::Less && o != Ordering::Equal)
        throw NotComparable("cumulative_chain: theta is not below phi");
    std::vector<HermitianMatrix> chain;
    chain.reserve(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double t = static_cast<double>(j) / (k - 1);
        chain.push_back((1.0 - t) * theta + t * phi);
    }
    return chain;
}

SeparatingGenerator t0_separating_generator(const HermitianMatrix& theta,
                                            const HermitianMatrix& phi) {
    const OrderClassification cls = loewner_compare(theta, phi);
    switch (cls.ordering) {
        case Ordering::Equal:
            throw IndistinguishablePoints("t0_separating_generator: points coincide");
        case Ordering::Less:
            return {phi, WhichPoint::Second};  // O(phi) contains phi, not theta
        case Ordering::Greater:
            return {theta, WhichPoint::First};
        case Ordering::Incomparable:
            return {phi, WhichPoint::Second};
    }
    throw Error("t0_separating_generator: unreachable");
}

}  // namespace qchoquet
