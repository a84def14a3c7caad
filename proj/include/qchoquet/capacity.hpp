#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qchoquet/hermitian.hpp"

namespace qchoquet {

struct IncompleteTable : Error {
    using Error::Error;
};

struct SingletonNotInUnitInterval : Error {
    using Error::Error;
};

struct WeightBelowOne : Error {
    using Error::Error;
};

struct TopElementViolation : Error {
    using Error::Error;
};

/// Canonical subset of Omega = {1,..,n}: strictly increasing elements.
/// Ordered by (cardinality, lexicographic) so table iteration is
/// deterministic.
class SubsetKey {
public:
    SubsetKey() = default;
    explicit SubsetKey(std::vector<int> elements);

    static SubsetKey empty_set() { return SubsetKey(); }
    static SubsetKey full_set(int n);

    const std::vector<int>& elements() const { return elems_; }
    int cardinality() const { return static_cast<int>(elems_.size()); }
    bool contains(int r) const;
    bool is_subset_of(const SubsetKey& other) const;
    SubsetKey with(int r) const;

    bool operator==(const SubsetKey& o) const { return elems_ == o.elems_; }
    bool operator!=(const SubsetKey& o) const { return elems_ != o.elems_; }
    bool operator<(const SubsetKey& o) const;

    std::string to_string() const;

private:
    std::vector<int> elems_;
};

/// All 2^n subsets ordered by (cardinality, lexicographic).
std::vector<SubsetKey> all_subsets(int n);
/// All subsets of the given set (same ordering).
std::vector<SubsetKey> subsets_of(const SubsetKey& a);

constexpr int kMaxOmega = 20;  // 2^n table entries; desk scale

/// Map from every subset of {1,..,n} to a Hermitian d x d matrix with
/// theta(empty) = 0, theta(Omega) = 1 and Loewner monotonicity.
struct MatrixCapacity {
    int n = 0;
    int dim = 0;
    std::map<SubsetKey, HermitianMatrix> table;

    const HermitianMatrix& at(const SubsetKey& a) const;
    bool complete() const;
};

/// Mobius coefficients M(A); entries are Hermitian but not PSD in general.
struct MobiusTable {
    int n = 0;
    int dim = 0;
    std::map<SubsetKey, HermitianMatrix> table;

    const HermitianMatrix& at(const SubsetKey& a) const;
};

struct CapacityViolation {
    SubsetKey smaller;
    SubsetKey larger;
    Ordering found;  // classification of table[larger] vs table[smaller]
};

struct ValidationReport {
    std::vector<CapacityViolation> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

/// Checks boundary entries, PSD/unit-interval bounds and monotonicity over
/// covering pairs A < B with |B| = |A| + 1 (transitivity covers the rest).
ValidationReport validate_capacity(const MatrixCapacity& c);

/// Per-subset per-element weights mu >= 1 used by build_lattice; missing
/// entries default to 1.
using LatticeWeights = std::map<SubsetKey, std::map<int, double>>;

/// theta(A) = sum_{r in A} mu_r(A) theta({r}) for 1 < |A| < n, with
/// theta(empty) = 0 and theta(Omega) = identity pinned.
MatrixCapacity build_lattice(const std::vector<HermitianMatrix>& singletons,
                             const LatticeWeights& weights = {});

/// Scalar capacity mu(A) = Tr[R theta(A)].
std::map<SubsetKey, double> scalar_capacity(const MatrixCapacity& c, const HermitianMatrix& rho);

/// M(A) = sum_{B subset A} (-1)^{|A|-|B|} theta(B).
MobiusTable mobius_transform(const MatrixCapacity& c);

/// theta(A) = sum_{B subset A} M(B). Monotonicity of the result is not
/// re-asserted; arbitrary Mobius tables need not yield capacities.
MatrixCapacity inverse_mobius(const MobiusTable& m);

/// || sum_{B != empty} M(B) - 1 ||_F; vanishes for tables derived from a
/// valid capacity.
double identity_residual(const MobiusTable& m);

}  // namespace qchoquet
