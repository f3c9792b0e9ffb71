#include <doctest.h>

#include <landaulab/birman_schwinger.hpp>
#include <landaulab/extremal.hpp>
#include <landaulab/scaling.hpp>
#include <landaulab/sharpness.hpp>

#include <cmath>
#include <vector>

using namespace landaulab;

TEST_CASE("per-level coupling norms and the near-level expansion") {
    RadialExtremal ext = radial_extremal(6, LebesgueExponent(1.5));
    BSOptions opts;
    opts.k_main = 96;
    opts.k_meas = 400;
    RadialBSOperator op(ext.potential, opts);

    // the resolved level norm reproduces the closed-form extremal value
    CHECK(op.level_norm(6) == doctest::Approx(ext.achieved).epsilon(1e-6));

    // measured decay of the level norms is a genuine power law
    CHECK(op.fitted_exponent() < -0.3);
    CHECK(op.fitted_exponent() > -0.8);
    std::vector<double> lam, mu;
    for (int k = 40; k <= 400; k += 12) {
        lam.push_back(landau_eigenvalue(k));
        mu.push_back(op.level_norm(k));
    }
    PowerFit fit = fit_power_law(lam, mu);
    CHECK(fit.r2 > 0.97);

    // close below lambda_6 the level term dominates the norm
    const double l6 = landau_eigenvalue(6);
    const double mu6 = op.level_norm(6);
    for (double gap : {1e-3, 1e-4}) {
        NormInterval full = op.norm(l6 - gap);
        CHECK(full.main == doctest::Approx(mu6 / gap).epsilon(2e-2));
        CHECK(full.tail < 0.01 * full.main);
    }
    // dropping the level removes the divergence entirely
    CHECK(op.norm(l6 - 1e-4, 6).upper() < 2.0);
}

TEST_CASE("complex evaluation agrees with the hermitian path on the real axis") {
    RadialExtremal ext = radial_extremal(4, LebesgueExponent(1.5));
    BSOptions opts;
    opts.k_main = 64;
    opts.k_meas = 300;
    RadialBSOperator op(ext.potential, opts);
    const double e = landau_eigenvalue(4) - 0.21;
    NormInterval re = op.norm(e);
    NormInterval cx = op.norm({e, 1e-12});
    CHECK(re.main == doctest::Approx(cx.main).epsilon(1e-8));
    CHECK(re.main > 0.0);
    // a finite imaginary part shrinks every weight
    NormInterval up = op.norm({e, 0.5});
    CHECK(up.main < re.main * 1.5);
    CHECK(up.main > 0.0);
}

TEST_CASE("sharpness certificate at level 8") {
    SharpnessOptions opts;
    opts.strength = 0.3;
    opts.bs.k_main = 128;
    opts.bs.k_meas = 600;
    SharpnessCertificate cert = sharpness_certificate(8, opts);

    CHECK(cert.lambda == 17.0);
    CHECK(cert.mu_level == doctest::Approx(0.3).epsilon(1e-5));
    CHECK(cert.mu0_at_a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cert.q1_at_a < 1.0);
    CHECK(cert.q_at_b < 1.0);
    CHECK(cert.certified);

    // the level norm scales linearly with the potential
    RadialExtremal ext = radial_extremal(8, LebesgueExponent(1.5));
    CHECK(cert.mu_level / cert.potential_norm == doctest::Approx(ext.achieved).epsilon(1e-5));

    // the eigenvalue lands inside (b, a] and both routes to it agree
    CHECK(cert.eigenvalue_bs > cert.b);
    CHECK(cert.eigenvalue_bs <= cert.a);
    CHECK(cert.confirmed);
    CHECK(cert.distance > 0.5 * cert.mu_level);
    CHECK(cert.distance < 0.5);

    // at the located eigenvalue the top coupling eigenvalue is pinned at 1
    BSOptions bs = opts.bs;
    bs.k_main = 128;
    RadialBSOperator op(cert.potential, bs);
    CHECK(op.top_eigenvalue(cert.eigenvalue_bs).main == doctest::Approx(1.0).epsilon(1e-6));
}
