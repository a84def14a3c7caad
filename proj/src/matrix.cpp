#include "qchoquet/matrix.hpp"

#include <cmath>
#include <utility>

namespace qchoquet {

namespace {

// (H + H^dag)/2 without symmetry checks.
CMatrix symmetrize(const CMatrix& m) {
    const int d = m.dim();
    CMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return r;
}

}  // namespace

HermitianMatrix::HermitianMatrix(const CMatrix& m) : mat_(m.dim()) {
    const double asym = (m - m.adjoint()).frobenius_norm();
    const double norm = m.frobenius_norm();
    if (asym > 1e-9 * norm)
        throw NotHermitian("HermitianMatrix: asymmetry " + std::to_string(asym) +
                           " exceeds 1e-9 * ||H||_F");
    mat_ = symmetrize(m);
}

HermitianMatrix HermitianMatrix::zero(int dim) {
    return HermitianMatrix(Trusted{}, CMatrix(dim));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    return HermitianMatrix(Trusted{}, CMatrix::identity(dim));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& entries) {
    CMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<size_t>(i)];
    return HermitianMatrix(Trusted{}, std::move(m));
}

HermitianMatrix HermitianMatrix::projector(const std::vector<cplx>& v) {
    const int d = static_cast<int>(v.size());
    double n2 = 0.0;
    for (const cplx& z : v) n2 += std::norm(z);
    if (n2 <= 0.0) throw Error("HermitianMatrix::projector: zero vector");
    CMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]) / n2;
    return HermitianMatrix(Trusted{}, std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    return HermitianMatrix(Trusted{}, mat_ + o.mat_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    return HermitianMatrix(Trusted{}, mat_ - o.mat_);
}

HermitianMatrix operator*(double s, const HermitianMatrix& m) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, cplx(s) * m.mat_);
}

HermitianMatrix HermitianMatrix::conjugate_by(const CMatrix& u) const {
    return HermitianMatrix(Trusted{}, symmetrize(u * mat_ * u.adjoint()));
}

}  // namespace qchoquet
