#include "qchoquet/zd.hpp"

#include <cmath>

namespace qchoquet {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return s;
}

}  // namespace

ZdSystem::ZdSystem(int d) : d_(d), omega_(std::polar(1.0, 2.0 * kPi / d)), fourier_(d < 1 ? 1 : d) {
    if (d < 3 || d % 2 == 0)
        throw Error("ZdSystem: d must be odd and >= 3 (2^{-1} mod d must exist)");
    const double root = 1.0 / std::sqrt(static_cast<double>(d));
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s)
            fourier_(r, s) = root * omega_pow(static_cast<long long>(r) * s);
}

cplx ZdSystem::omega_pow(long long k) const {
    long long m = k % d_;
    if (m < 0) m += d_;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(m) / d_);
}

std::vector<HermitianMatrix> position_projectors(const ZdSystem& sys) {
    std::vector<HermitianMatrix> out;
    out.reserve(static_cast<size_t>(sys.d()));
    for (int r = 0; r < sys.d(); ++r) {
        std::vector<cplx> e(static_cast<size_t>(sys.d()), cplx(0.0));
        e[static_cast<size_t>(r)] = 1.0;
        out.push_back(HermitianMatrix::projector(e));
    }
    return out;
}

CMatrix displacement(const ZdSystem& sys, int alpha, int beta) {
    const int d = sys.d();
    const long long half_inv = (d + 1) / 2;  // 2^{-1} mod d, d odd
    const cplx global = sys.omega_pow(-half_inv * alpha * beta);
    // Z^alpha X^beta: |m + beta><m| picks up omega^{alpha (m + beta)}.
    CMatrix m(d);
    for (int col = 0; col < d; ++col) {
        const int row = (col + beta % d + d) % d;
        m(row, col) = global * sys.omega_pow(static_cast<long long>(alpha) * row);
    }
    return m;
}

std::vector<cplx> default_fiducial(int d) {
    std::vector<cplx> g(static_cast<size_t>(d), cplx(0.0));
    const double a = 1.0 / std::sqrt(static_cast<double>(d - 1));
    for (int r = 0; r < d - 1; ++r) g[static_cast<size_t>(r)] = a;
    return g;
}

CoherentFamily coherent_family(const ZdSystem& sys, const std::vector<cplx>& fiducial) {
    const int d = sys.d();
    if (static_cast<int>(fiducial.size()) != d)
        throw DimensionMismatch("coherent_family: fiducial has wrong length");
    if (std::abs(norm2(fiducial) - 1.0) > 1e-10)
        throw NotNormalized("coherent_family: fiducial must be normalized");

    CoherentFamily fam;
    fam.fiducial = fiducial;

    // Warn if the fiducial is (close to) a position or momentum state; the
    // family is degenerate in that case.
    for (int r = 0; r < d; ++r) {
        cplx pos_overlap = fiducial[static_cast<size_t>(r)];
        cplx mom_overlap = 0.0;
        for (int s = 0; s < d; ++s)
            mom_overlap += std::conj(sys.fourier()(s, r)) * fiducial[static_cast<size_t>(s)];
        if (std::abs(pos_overlap) > 1.0 - 1e-9)
            fam.warnings.push_back("fiducial coincides with position state " + std::to_string(r));
        if (std::abs(mom_overlap) > 1.0 - 1e-9)
            fam.warnings.push_back("fiducial coincides with momentum state " + std::to_string(r));
    }

    fam.projectors.reserve(static_cast<size_t>(d) * d);
    for (int alpha = 0; alpha < d; ++alpha)
        for (int beta = 0; beta < d; ++beta) {
            const std::vector<cplx> state = displacement(sys, alpha, beta).apply(fiducial);
            fam.projectors.push_back(HermitianMatrix::projector(state));
        }
    return fam;
}

StateExpansion expand_state(const ZdSystem& sys, const CoherentFamily& family,
                            const std::vector<cplx>& f) {
    const int d = sys.d();
    if (static_cast<int>(f.size()) != d) throw DimensionMismatch("expand_state: wrong length");
    if (std::abs(norm2(f) - 1.0) > 1e-10) throw NotNormalized("expand_state: f must be normalized");

    StateExpansion out;
    out.position = f;  // position basis is the standard basis
    out.coherent.reserve(static_cast<size_t>(d) * d);
    for (int alpha = 0; alpha < d; ++alpha)
        for (int beta = 0; beta < d; ++beta) {
            const std::vector<cplx> state = displacement(sys, alpha, beta).apply(family.fiducial);
            cplx overlap = 0.0;
            for (int r = 0; r < d; ++r) overlap += std::conj(state[static_cast<size_t>(r)]) * f[static_cast<size_t>(r)];
            out.coherent.push_back(overlap);
        }
    return out;
}

}  // namespace qchoquet
