#include <landaulab/sharpness.hpp>

#include <landaulab/extremal.hpp>
#include <landaulab/levels.hpp>

#include <algorithm>
#include <cmath>

namespace landaulab {

SharpnessCertificate sharpness_certificate(int k0, const SharpnessOptions& opts) {
    if (!(opts.strength > 0.0 && opts.strength < 1.0))
        throw DomainError("sharpness_certificate: strength must sit in (0, 1)");
    SharpnessCertificate cert;
    cert.k0 = k0;
    cert.lambda = landau_eigenvalue(k0);
    cert.b = cert.lambda - 0.5;

    RadialExtremal ext = radial_extremal(k0, LebesgueExponent(1.5));
    cert.potential = ext.potential;
    // the level norm scales linearly with the potential
    cert.potential.scale *= std::sqrt(opts.strength / ext.achieved);
    cert.potential_norm = cert.potential.lp_norm(LebesgueExponent(1.5));

    BSOptions bs = opts.bs;
    bs.k_main = std::max(bs.k_main, 5 * k0 + 64);
    RadialBSOperator op(cert.potential, bs);

    cert.mu_level = op.level_norm(k0);
    cert.a = cert.lambda - 0.5 * cert.mu_level;
    cert.mu0_at_a = cert.mu_level / (cert.lambda - cert.a);
    cert.q1_at_a = op.norm(cert.a, k0).upper();
    cert.q_at_b = op.norm(cert.b).upper();
    cert.certified = cert.q1_at_a < 1.0 && cert.q_at_b < 1.0 && cert.a > cert.b;

    double bs_width = 0.0;
    if (cert.certified) {
        // the top eigenvalue of the resolved block runs monotonically from
        // below 1 at b to above 1 at a; unresolved levels only push it up,
        // so the crossing of the full operator sits at most bs_width lower
        double lo = cert.b, hi = cert.a;
        while (hi - lo > opts.bisect_tol) {
            const double mid = 0.5 * (lo + hi);
            (op.top_eigenvalue(mid).main < 1.0 ? lo : hi) = mid;
        }
        cert.eigenvalue_bs = 0.5 * (lo + hi);
        cert.distance = cert.lambda - cert.eigenvalue_bs;
        const double slope = cert.mu_level / (cert.distance * cert.distance);
        bs_width = op.top_eigenvalue(cert.eigenvalue_bs).tail / slope;
    }

    ClusterReport rep = cluster_spectrum(cert.potential, k0, opts.cluster);
    if (cert.certified && !rep.members.empty()) {
        double best = rep.members.front();
        for (double e : rep.members)
            if (std::abs(e - cert.eigenvalue_bs) < std::abs(best - cert.eigenvalue_bs))
                best = e;
        cert.eigenvalue_gal = best;
        const double tol =
            std::max(1e-6, bs_width + 0.02 * cert.distance);
        cert.confirmed = std::abs(best - cert.eigenvalue_bs) <= tol &&
                         best > cert.b - 1e-9 && best <= cert.a + 1e-9;
    }
    return cert;
}

}  // namespace landaulab
