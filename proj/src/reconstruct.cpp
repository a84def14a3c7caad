#include "qchoquet/reconstruct.hpp"

#include <cmath>

namespace qchoquet {

ReconstructionReport reconstruct(const MatrixCapacity& c, const ExpectationVector& ev,
                                 const ChoquetPolicy& policy) {
    ChoquetResult choquet = quantum_choquet_ev_increments(c, ev, policy);
    const double tr = choquet.matrix.trace();
    if (tr <= 1e-14) {
        std::string degenerate;
        for (size_t k = 0; k < choquet.increments.size(); ++k)
            if (choquet.increments[k] <= 1e-14)
                degenerate += (degenerate.empty() ? "" : ", ") + choquet.chain[k].to_string();
        throw ZeroTrace("reconstruct: Tr C(R) = 0; degenerate increments at " + degenerate);
    }

    ReconstructionReport rep{(1.0 / tr) * choquet.matrix, {}, {}, {}, {},
                             std::move(choquet.chain), std::move(choquet.flags)};
    rep.eigenvalues = eigendecompose(rep.r1).eigenvalues;

    std::vector<HermitianMatrix> singletons;
    for (int r = 1; r <= c.n; ++r) singletons.push_back(c.at(SubsetKey({r})));

    for (int r = 1; r <= c.n; ++r) {
        const double reproduced = expectation(rep.r1, singletons[static_cast<size_t>(r - 1)]);
        const double abs_err = std::abs(reproduced - ev.at(r));
        rep.reproduced.push_back(reproduced);
        rep.absolute_errors.push_back(abs_err);
        rep.errors.push_back(abs_err / ev.at(r));
    }

    if (!check_linear_independence(singletons).independent)
        rep.flags.push_back("singleton observables are linearly dependent");
    for (std::string& w : check_trace_inequality(c, ev)) rep.flags.push_back(std::move(w));
    return rep;
}

IndependenceReport check_linear_independence(const std::vector<HermitianMatrix>& singletons,
                                             double tol) {
    if (singletons.empty()) throw Error("check_linear_independence: need at least one matrix");
    const int d = singletons.front().dim();
    const size_t len = 2 * static_cast<size_t>(d) * d;

    // Flatten to real vectors, Gram-Schmidt with pivot threshold.
    std::vector<std::vector<double>> basis;
    int rank = 0;
    for (const HermitianMatrix& h : singletons) {
        std::vector<double> v(len);
        size_t k = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                v[k++] = h.at(i, j).real();
                v[k++] = h.at(i, j).imag();
            }
        double orig_norm = 0.0;
        for (double x : v) orig_norm += x * x;
        orig_norm = std::sqrt(orig_norm);
        for (const std::vector<double>& b : basis) {
            double proj = 0.0;
            for (size_t i = 0; i < len; ++i) proj += b[i] * v[i];
            for (size_t i = 0; i < len; ++i) v[i] -= proj * b[i];
        }
        double res = 0.0;
        for (double x : v) res += x * x;
        res = std::sqrt(res);
        if (res > tol * std::max(1.0, orig_norm)) {
            for (double& x : v) x /= res;
            basis.push_back(std::move(v));
            ++rank;
        }
    }
    return {rank == static_cast<int>(singletons.size()), rank};
}

std::vector<std::string> check_trace_inequality(const MatrixCapacity& c,
                                                const ExpectationVector& ev) {
    if (ev.n() != c.n) throw ArityMismatch("check_trace_inequality: ev length mismatch");
    std::vector<std::string> warnings;
    for (int r = 1; r <= c.n; ++r) {
        for (int s = 1; s <= c.n; ++s) {
            if (r == s) continue;
            const HermitianMatrix& tr_mat = c.at(SubsetKey({r}));
            const HermitianMatrix& ts_mat = c.at(SubsetKey({s}));
            if (loewner_compare(tr_mat, ts_mat).ordering != Ordering::Greater) continue;
            const double lhs = ev.at(r) - ev.at(s);
            const double rhs = tr_mat.trace() - ts_mat.trace();
            if (lhs > rhs + 1e-10)
                warnings.push_back("trace inequality violated for theta({" + std::to_string(r) +
                                   "}) > theta({" + std::to_string(s) + "}): ev gap " +
                                   std::to_string(lhs) + " exceeds trace gap " + std::to_string(rhs));
        }
    }
    return warnings;
}

MatrixCapacity projector_example_lattice(double lambda) {
    if (lambda < 0.0 || lambda >= 1.0)
        throw InvalidSpectrum("projector_example: lambda must be in [0, 1)");
    MatrixCapacity c;
    c.n = 3;
    c.dim = 3;
    c.table.emplace(SubsetKey::empty_set(), HermitianMatrix::zero(3));
    c.table.emplace(SubsetKey({1}), HermitianMatrix::diagonal({1, 0, 0}));
    c.table.emplace(SubsetKey({2}), HermitianMatrix::diagonal({0, 1, 0}));
    c.table.emplace(SubsetKey({3}), HermitianMatrix::diagonal({0, 0, 1}));
    c.table.emplace(SubsetKey({1, 2}), HermitianMatrix::diagonal({1, 1, 0}));
    c.table.emplace(SubsetKey({1, 3}), HermitianMatrix::diagonal({1, 0, 1}));
    c.table.emplace(SubsetKey({2, 3}), HermitianMatrix::diagonal({lambda, 1, 1}));
    c.table.emplace(SubsetKey({1, 2, 3}), HermitianMatrix::identity(3));
    return c;
}

ReconstructionReport projector_example(double e1, double e2, double e3, double lambda) {
    if (!(0.0 < e1 && e1 < e2 && e2 < e3) || std::abs(e1 + e2 + e3 - 1.0) > 1e-12)
        throw InvalidSpectrum("projector_example: need 0 < e1 < e2 < e3 with unit sum");
    const MatrixCapacity c = projector_example_lattice(lambda);
    return reconstruct(c, ExpectationVector{{e1, e2, e3}});
}

}  // namespace qchoquet
