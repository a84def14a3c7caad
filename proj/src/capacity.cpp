#include "qchoquet/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qchoquet {

SubsetKey::SubsetKey(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw Error("SubsetKey: elements must be >= 1");
        if (i > 0 && elems_[i] == elems_[i - 1]) throw Error("SubsetKey: duplicate element");
    }
}

SubsetKey SubsetKey::full_set(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) e[static_cast<size_t>(r - 1)] = r;
    return SubsetKey(std::move(e));
}

bool SubsetKey::contains(int r) const {
    return std::binary_search(elems_.begin(), elems_.end(), r);
}

bool SubsetKey::is_subset_of(const SubsetKey& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

SubsetKey SubsetKey::with(int r) const {
    std::vector<int> e = elems_;
    e.push_back(r);
    return SubsetKey(std::move(e));
}

bool SubsetKey::operator<(const SubsetKey& o) const {
    if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
    return elems_ < o.elems_;
}

std::string SubsetKey::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

std::vector<SubsetKey> all_subsets(int n) {
    if (n < 0 || n > kMaxOmega) throw Error("all_subsets: n out of range");
    std::vector<SubsetKey> out;
    out.reserve(static_cast<size_t>(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> e;
        for (int r = 1; r <= n; ++r)
            if (mask & (1u << (r - 1))) e.push_back(r);
        out.emplace_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SubsetKey> subsets_of(const SubsetKey& a) {
    const std::vector<int>& e = a.elements();
    const int k = a.cardinality();
    std::vector<SubsetKey> out;
    out.reserve(static_cast<size_t>(1) << k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(e[static_cast<size_t>(i)]);
        out.emplace_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

const HermitianMatrix& table_at(const std::map<SubsetKey, HermitianMatrix>& t, const SubsetKey& a) {
    auto it = t.find(a);
    if (it == t.end()) throw IncompleteTable("missing table entry for " + a.to_string());
    return it->second;
}

}  // namespace

const HermitianMatrix& MatrixCapacity::at(const SubsetKey& a) const { return table_at(table, a); }

bool MatrixCapacity::complete() const {
    return static_cast<long long>(table.size()) == (1LL << n);
}

const HermitianMatrix& MobiusTable::at(const SubsetKey& a) const { return table_at(table, a); }

ValidationReport validate_capacity(const MatrixCapacity& c) {
    if (!c.complete()) throw IncompleteTable("validate_capacity: table has missing subsets");
    ValidationReport report;
    const HermitianMatrix zero = HermitianMatrix::zero(c.dim);
    const HermitianMatrix one = HermitianMatrix::identity(c.dim);

    if (!c.at(SubsetKey::empty_set()).approx_equal(zero, 1e-10))
        report.warnings.push_back("theta(empty) differs from 0");
    if (!c.at(SubsetKey::full_set(c.n)).approx_equal(one, 1e-10 * std::sqrt(double(c.dim))))
        report.warnings.push_back("theta(Omega) differs from identity");

    for (const auto& [key, theta] : c.table) {
        if (!is_positive_semidefinite(theta))
            report.violations.push_back({SubsetKey::empty_set(), key, Ordering::Incomparable});
        const Ordering vs_one = loewner_compare(one, theta).ordering;
        if (vs_one != Ordering::Greater && vs_one != Ordering::Equal)
            report.violations.push_back({key, SubsetKey::full_set(c.n), vs_one});
    }

    // Covering pairs only: A < B with |B| = |A| + 1.
    for (const auto& [key, theta] : c.table) {
        for (int r = 1; r <= c.n; ++r) {
            if (key.contains(r)) continue;
            const SubsetKey larger = key.with(r);
            const Ordering o = loewner_compare(c.at(larger), theta).ordering;
            if (o != Ordering::Greater && o != Ordering::Equal)
                report.violations.push_back({key, larger, o});
        }
    }
    return report;
}

MatrixCapacity build_lattice(const std::vector<HermitianMatrix>& singletons,
                             const LatticeWeights& weights) {
    const int n = static_cast<int>(singletons.size());
    if (n < 1 || n > kMaxOmega) throw Error("build_lattice: need 1..20 singletons");
    const int d = singletons.front().dim();
    const HermitianMatrix one = HermitianMatrix::identity(d);

    for (int r = 0; r < n; ++r) {
        const HermitianMatrix& s = singletons[static_cast<size_t>(r)];
        if (s.dim() != d) throw DimensionMismatch("build_lattice: singleton dimension mismatch");
        const Ordering below_one = loewner_compare(one, s).ordering;
        if (!is_positive_semidefinite(s) ||
            (below_one != Ordering::Greater && below_one != Ordering::Equal))
            throw SingletonNotInUnitInterval("build_lattice: theta({" + std::to_string(r + 1) +
                                             "}) not in [0, 1]");
    }
    for (const auto& [key, mus] : weights)
        for (const auto& [elem, mu] : mus) {
            if (mu < 1.0)
                throw WeightBelowOne("build_lattice: weight below 1 for element " +
                                     std::to_string(elem) + " in " + key.to_string());
            if (!key.contains(elem))
                throw Error("build_lattice: weight names element outside its subset");
        }

    MatrixCapacity c;
    c.n = n;
    c.dim = d;
    for (const SubsetKey& a : all_subsets(n)) {
        if (a.cardinality() == 0) {
            c.table.emplace(a, HermitianMatrix::zero(d));
        } else if (a.cardinality() == n) {
            c.table.emplace(a, one);
        } else {
            HermitianMatrix theta = HermitianMatrix::zero(d);
            auto wit = weights.find(a);
            for (int r : a.elements()) {
                double mu = 1.0;
                if (wit != weights.end()) {
                    auto mit = wit->second.find(r);
                    if (mit != wit->second.end()) mu = mit->second;
                }
                theta = theta + mu * singletons[static_cast<size_t>(r - 1)];
            }
            const Ordering below_one = loewner_compare(one, theta).ordering;
            if (below_one != Ordering::Greater && below_one != Ordering::Equal)
                throw TopElementViolation("build_lattice: theta" + a.to_string() +
                                          " is not below the identity");
            c.table.emplace(a, theta);
        }
    }
    return c;
}

std::map<SubsetKey, double> scalar_capacity(const MatrixCapacity& c, const HermitianMatrix& rho) {
    if (!is_density_matrix(rho)) throw NotADensityMatrix("scalar_capacity: R is not a density matrix");
    std::map<SubsetKey, double> mu;
    for (const auto& [key, theta] : c.table) mu[key] = expectation(rho, theta);
    return mu;
}

MobiusTable mobius_transform(const MatrixCapacity& c) {
    if (!c.complete()) throw IncompleteTable("mobius_transform: incomplete capacity table");
    MobiusTable m;
    m.n = c.n;
    m.dim = c.dim;
    for (const auto& [key, theta] : c.table) {
        HermitianMatrix acc = HermitianMatrix::zero(c.dim);
        for (const SubsetKey& b : subsets_of(key)) {
            const double sign = ((key.cardinality() - b.cardinality()) % 2 == 0) ? 1.0 : -1.0;
            acc = acc + sign * c.at(b);
        }
        m.table.emplace(key, acc);
    }
    return m;
}

MatrixCapacity inverse_mobius(const MobiusTable& m) {
    if (static_cast<long long>(m.table.size()) != (1LL << m.n))
        throw IncompleteTable("inverse_mobius: incomplete Mobius table");
    MatrixCapacity c;
    c.n = m.n;
    c.dim = m.dim;
    for (const auto& [key, unused] : m.table) {
        (void)unused;
        HermitianMatrix acc = HermitianMatrix::zero(m.dim);
        for (const SubsetKey& b : subsets_of(key)) acc = acc + m.at(b);
        c.table.emplace(key, acc);
    }
    return c;
}

double identity_residual(const MobiusTable& m) {
    HermitianMatrix acc = HermitianMatrix::zero(m.dim);
    for (const auto& [key, mat] : m.table)
        if (key.cardinality() > 0) acc = acc + mat;
    return (acc - HermitianMatrix::identity(m.dim)).frobenius_norm();
}

}  // namespace qchoquet
