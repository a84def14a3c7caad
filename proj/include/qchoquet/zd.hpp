#pragma once

#include <vector>

#include "qchoquet/hermitian.hpp"

namespace qchoquet {

struct NotNormalized : Error {
    using Error::Error;
};

/// Finite quantum system over Z_d, odd d >= 3. The position basis is the
/// standard basis; F is the d x d Fourier matrix.
class ZdSystem {
public:
    explicit ZdSystem(int d);

    int d() const { return d_; }
    cplx omega() const { return omega_; }
    const CMatrix& fourier() const { return fourier_; }

    /// omega^k with the exponent reduced mod d.
    cplx omega_pow(long long k) const;

private:
    int d_;
    cplx omega_;
    CMatrix fourier_;
};

/// Position-basis projectors: orthonormal, complete.
std::vector<HermitianMatrix> position_projectors(const ZdSystem& sys);

/// D(alpha, beta) = Z^alpha X^beta omega^{-2^{-1} alpha beta}; unitary,
/// D(0,0) = identity. Needs odd d for the inverse of 2 mod d.
CMatrix displacement(const ZdSystem& sys, int alpha, int beta);

/// d^2 coherent-state projectors generated from a fiducial vector.
struct CoherentFamily {
    std::vector<cplx> fiducial;
    std::vector<HermitianMatrix> projectors;  // indexed alpha * d + beta
    std::vector<std::string> warnings;

    const HermitianMatrix& at(int alpha, int beta, int d) const {
        return projectors[static_cast<size_t>(alpha) * d + beta];
    }
};

CoherentFamily coherent_family(const ZdSystem& sys, const std::vector<cplx>& fiducial);

/// Normalized (1, 1, ..., 1, 0)/sqrt(d-1); distinct from every position and
/// momentum state for d >= 3.
std::vector<cplx> default_fiducial(int d);

/// Coefficients of a normalized state in the position basis and in the
/// coherent family (f(alpha,beta) = <alpha,beta|f>).
struct StateExpansion {
    std::vector<cplx> position;   // f_r
    std::vector<cplx> coherent;   // f(alpha,beta), indexed alpha * d + beta
};

StateExpansion expand_state(const ZdSystem& sys, const CoherentFamily& family,
                            const std::vector<cplx>& f);

}  // namespace qchoquet
