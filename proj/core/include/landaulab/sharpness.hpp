#pragma once

#include <landaulab/birman_schwinger.hpp>
#include <landaulab/cluster.hpp>
#include <landaulab/potential.hpp>

namespace landaulab {

struct SharpnessOptions {
    double strength = 0.3;  // target || W P_{k0} W ||; sets a = lambda - strength/2
    BSOptions bs;
    ClusterOptions cluster;
    double bisect_tol = 1e-10;
};

/// Two-sided certificate that the extremal potential at one level produces
/// an eigenvalue in (lambda - 1/2, a], a = lambda - mu/2, mu the level norm
/// of the coupling.  With the level term alone pinned at 2 on that endpoint,
/// the off-level norm below 1 and the full norm below 1 at the left endpoint
/// force the largest Birman-Schwinger eigenvalue through 1 inside the gap.
struct SharpnessCertificate {
    int k0 = 0;
    double lambda = 0.0;
    double mu_level = 0.0;      // || W P_{k0} W ||
    double a = 0.0;             // lambda - mu_level / 2
    double b = 0.0;             // lambda - 1/2
    double mu0_at_a = 0.0;      // level term at a; 2 by construction
    double q1_at_a = 0.0;       // off-level norm at a (upper bound)
    double q_at_b = 0.0;        // full norm at b (upper bound)
    bool certified = false;     // q1_at_a < 1, q_at_b < 1 and a > b
    double eigenvalue_bs = 0.0; // where the top eigenvalue crosses 1
    double eigenvalue_gal = 0.0;// cluster confirmation (closest member)
    double distance = 0.0;      // lambda - eigenvalue_bs
    bool confirmed = false;     // both estimates agree inside the interval
    PotentialSpec potential;
    double potential_norm = 0.0;  // L^{3/2}
};

SharpnessCertificate sharpness_certificate(int k0, const SharpnessOptions& opts = {});

}  // namespace landaulab
