#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchoquet {

using cplx = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

/// Dense complex square matrix, row-major. General carrier for unitaries,
/// Fourier matrices and intermediate products; Hermitian data lives in
/// HermitianMatrix.
class CMatrix {
public:
    explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
        if (dim < 1) throw Error("CMatrix: dim must be >= 1");
    }

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    CMatrix operator+(const CMatrix& o) const {
        check_dim(o);
        CMatrix r(dim_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    CMatrix operator-(const CMatrix& o) const {
        check_dim(o);
        CMatrix r(dim_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    CMatrix operator*(const CMatrix& o) const {
        check_dim(o);
        CMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx(0.0)) continue;
                for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    friend CMatrix operator*(cplx s, const CMatrix& m) {
        CMatrix r(m.dim_);
        for (size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = s * m.a_[k];
        return r;
    }

    CMatrix adjoint() const {
        CMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    std::vector<cplx> apply(const std::vector<cplx>& x) const {
        if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("CMatrix::apply: vector size");
        std::vector<cplx> y(dim_, cplx(0.0));
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    void check_dim(const CMatrix& o) const {
        if (o.dim_ != dim_) throw DimensionMismatch("CMatrix: dimension mismatch");
    }

    int dim_;
    std::vector<cplx> a_;
};

/// d x d complex matrix with enforced Hermitian symmetry. Inputs with
/// ||H - H^dag||_F <= 1e-9 ||H||_F are symmetrized as (H + H^dag)/2,
/// larger asymmetry is rejected.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const CMatrix& m);

    static HermitianMatrix zero(int dim);
    static HermitianMatrix identity(int dim);
    static HermitianMatrix diagonal(const std::vector<double>& entries);
    /// Rank-1 projector |v><v| / <v|v>.
    static HermitianMatrix projector(const std::vector<cplx>& v);

    int dim() const { return mat_.dim(); }
    const cplx& at(int i, int j) const { return mat_(i, j); }
    const CMatrix& raw() const { return mat_; }

    double trace() const { return mat_.trace().real(); }
    double frobenius_norm() const { return mat_.frobenius_norm(); }

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    friend HermitianMatrix operator*(double s, const HermitianMatrix& m);

    /// U H U^dag for unitary U (result symmetrized against roundoff).
    HermitianMatrix conjugate_by(const CMatrix& u) const;

    bool approx_equal(const HermitianMatrix& o, double tol) const {
        return (*this - o).frobenius_norm() <= tol;
    }

private:
    struct Trusted {};
    HermitianMatrix(Trusted, CMatrix m) : mat_(std::move(m)) {}

    CMatrix mat_;
};

}  // namespace qchoquet
