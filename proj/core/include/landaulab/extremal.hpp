#pragma once

#include <landaulab/exponents.hpp>
#include <landaulab/potential.hpp>
#include <landaulab/projector.hpp>

namespace landaulab {

/// Closed-form radial maximizer of || W P_k W || under ||W||_{2r} = 1.
/// Within one angular-momentum line the quadratic form is rank one and
/// Hoelder saturates at W ~ |phi|^{1/(r-1)}, giving the level-q norm of the
/// profile squared; the best line is scanned explicitly.
struct RadialExtremal {
    int k0 = 0;
    LebesgueExponent r = 1.5;
    LebesgueExponent q = 6.0;  // dual exponent 2 r'
    PotentialSpec potential;   // V = -W^2, unit L^r norm
    double achieved = 0.0;     // || W P_k W ||
    int best_ell = 0;
};

RadialExtremal radial_extremal(int k0, LebesgueExponent r);

struct ExtremalSearchOptions {
    int m_extra = 40;   // basis columns beyond k0
    int max_iters = 60;
    double rel_tol = 1e-9;
    int starts = 3;
    unsigned seed = 31;
};

/// Alternating ascent over general (possibly non-radial) level-state powers:
/// eigenvector step for fixed W, Hoelder step for fixed state.  Both steps
/// are exact maximizations, so the objective never decreases.
struct GeneralExtremal {
    PotentialSpec potential;  // V = -W^2, unit L^r norm
    double achieved = 0.0;    // || W P_k W || within the basis window
    double radial_value = 0.0;
    int iters = 0;
    bool converged = false;
};

GeneralExtremal optimize_extremal(int k0, LebesgueExponent r,
                                  const ExtremalSearchOptions& opts = {});

}  // namespace landaulab
