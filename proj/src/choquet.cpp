#include "qchoquet/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qchoquet {

RankingPermutation rank(const ExpectationVector& ev) {
    if (ev.n() < 1) throw Error("rank: need at least one value");
    for (double v : ev.values)
        if (v <= 0.0) throw NonPositiveValue("rank: expectation values must be > 0");
    RankingPermutation p;
    p.sigma.resize(static_cast<size_t>(ev.n()));
    std::iota(p.sigma.begin(), p.sigma.end(), 1);
    std::stable_sort(p.sigma.begin(), p.sigma.end(),
                     [&](int i, int j) { return ev.at(i) < ev.at(j); });
    p.values.reserve(p.sigma.size());
    for (int i : p.sigma) p.values.push_back(ev.at(i));
    return p;
}

bool comonotonic(const ExpectationVector& a, const ExpectationVector& b) {
    if (a.n() != b.n()) throw ArityMismatch("comonotonic: vectors differ in length");
    return rank(a).sigma == rank(b).sigma;
}

double classical_choquet(const std::vector<double>& f, const std::map<SubsetKey, double>& mu) {
    const int n = static_cast<int>(f.size());
    if (static_cast<long long>(mu.size()) != (1LL << n))
        throw NotACapacity("classical_choquet: capacity table size does not match f");
    const double tol = 1e-10;
    auto value = [&](const SubsetKey& a) {
        auto it = mu.find(a);
        if (it == mu.end()) throw NotACapacity("classical_choquet: missing subset " + a.to_string());
        return it->second;
    };
    if (std::abs(value(SubsetKey::empty_set())) > tol ||
        std::abs(value(SubsetKey::full_set(n)) - 1.0) > tol)
        throw NotACapacity("classical_choquet: mu(empty) != 0 or mu(Omega) != 1");
    for (const auto& [key, v] : mu)
        for (int r = 1; r <= n; ++r) {
            if (key.contains(r)) continue;
            if (value(key.with(r)) < v - tol)
                throw NotACapacity("classical_choquet: mu not monotone at " + key.to_string());
        }
    for (double x : f)
        if (x < 0.0) throw Error("classical_choquet: f must be nonnegative");

    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::stable_sort(sigma.begin(), sigma.end(), [&](int i, int j) {
        return f[static_cast<size_t>(i - 1)] < f[static_cast<size_t>(j - 1)];
    });

    double acc = 0.0;
    double prev = 0.0;
    for (int r = 0; r < n; ++r) {
        // tail set {sigma(r+1),...,sigma(n)}
        std::vector<int> tail(sigma.begin() + r, sigma.end());
        const double fr = f[static_cast<size_t>(sigma[static_cast<size_t>(r)] - 1)];
        acc += (fr - prev) * value(SubsetKey(std::move(tail)));
        prev = fr;
    }
    return acc;
}

namespace {

struct ChainData {
    std::vector<SubsetKey> chain;      // chain[k] = {sigma(n-k),...,sigma(n)}, k = 0..m-1
    std::vector<double> increments;    // a_k - a_{k+1}
    std::vector<double> coefficients;  // a_k - a_m (form-2 weights)
    std::vector<std::string> flags;
};

// Shared ranking/chain setup for the three forms. The chain has
// m = min(d, n) links; with n > d the final increment is taken relative to
// the largest expectation value that does not enter (this is what makes the
// truncated chain consistent between the increment forms).
ChainData make_chain(const MatrixCapacity& c, const ExpectationVector& ev,
                     const ChoquetPolicy& policy) {
    if (ev.n() != c.n) throw ArityMismatch("quantum Choquet: ev length differs from capacity n");
    const int n = c.n;
    const int d = c.dim;
    ChainData out;
    if (n < d || n >= d * d - 1) {
        if (!policy.allow_outside_regime)
            throw DimensionPolicyViolation("quantum Choquet: require d <= n < d^2-1 (n=" +
                                           std::to_string(n) + ", d=" + std::to_string(d) + ")");
        out.flags.push_back("outside supported regime: n=" + std::to_string(n) +
                            ", d=" + std::to_string(d));
    }
    const RankingPermutation p = rank(ev);
    const int m = std::min(d, n);

    std::vector<double> a(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        const int pos = n - k;  // 1-based rank position
        a[static_cast<size_t>(k)] = pos >= 1 ? p.values[static_cast<size_t>(pos - 1)] : 0.0;
    }
    if (n > m && std::abs(a[static_cast<size_t>(m - 1)] - a[static_cast<size_t>(m)]) <=
                     1e-12 * std::max(1.0, a[static_cast<size_t>(m)]))
        out.flags.push_back("boundary tie: ranking at the n-d cutoff is rule-dependent");

    for (int k = 0; k < m; ++k) {
        std::vector<int> tail(p.sigma.end() - 1 - k, p.sigma.end());
        out.chain.emplace_back(std::move(tail));
        out.increments.push_back(a[static_cast<size_t>(k)] - a[static_cast<size_t>(k + 1)]);
        out.coefficients.push_back(a[static_cast<size_t>(k)] - a[static_cast<size_t>(m)]);
    }
    return out;
}

}  // namespace

ChoquetResult quantum_choquet_ev_increments(const MatrixCapacity& c, const ExpectationVector& ev,
                                            const ChoquetPolicy& policy) {
    if (!c.complete()) throw IncompleteTable("quantum_choquet: incomplete capacity table");
    ChainData data = make_chain(c, ev, policy);
    HermitianMatrix acc = HermitianMatrix::zero(c.dim);
    for (size_t k = 0; k < data.chain.size(); ++k)
        acc = acc + data.increments[k] * c.at(data.chain[k]);
    return {acc, std::move(data.increments), std::move(data.chain), std::move(data.flags)};
}

ChoquetResult quantum_choquet_obs_increments(const MatrixCapacity& c, const ExpectationVector& ev,
                                             const ChoquetPolicy& policy) {
    if (!c.complete()) throw IncompleteTable("quantum_choquet: incomplete capacity table");
    ChainData data = make_chain(c, ev, policy);
    HermitianMatrix acc = HermitianMatrix::zero(c.dim);
    for (size_t k = 0; k < data.chain.size(); ++k) {
        const HermitianMatrix delta = k == 0
                                          ? c.at(data.chain[0])
                                          : c.at(data.chain[k]) - c.at(data.chain[k - 1]);
        if (!is_positive_semidefinite(delta))
            throw NonPSDIncrement("quantum_choquet: observable increment at link " +
                                  std::to_string(k) + " is not PSD");
        acc = acc + data.coefficients[k] * delta;
    }
    return {acc, std::move(data.increments), std::move(data.chain), std::move(data.flags)};
}

ChoquetResult quantum_choquet_mobius(const MatrixCapacity& c, const ExpectationVector& ev,
                                     const ChoquetPolicy& policy) {
    if (!c.complete()) throw IncompleteTable("quantum_choquet: incomplete capacity table");
    if (c.n != c.dim && !policy.allow_mobius_n_gt_d)
        throw UnsupportedArity("quantum_choquet_mobius: equivalence established only for n = d");
    ChainData data = make_chain(c, ev, policy);
    if (c.n != c.dim) data.flags.push_back("unverified equivalence: Mobius form with n != d");

    const MobiusTable m = mobius_transform(c);
    HermitianMatrix acc = HermitianMatrix::zero(c.dim);
    for (const auto& [key, mat] : m.table) {
        if (key.cardinality() == 0) continue;
        double mn = ev.at(key.elements().front());
        for (int r : key.elements()) mn = std::min(mn, ev.at(r));
        acc = acc + mn * mat;
    }
    return {acc, std::move(data.increments), std::move(data.chain), std::move(data.flags)};
}

}  // namespace qchoquet
