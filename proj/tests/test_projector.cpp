#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <landaulab/fields.hpp>
#include <landaulab/potential.hpp>
#include <landaulab/projector.hpp>

using namespace landaulab;

namespace {

PlanarField random_field(const QuadratureGrid& g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PlanarField f(g.n_points());
    for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = {gauss(rng), gauss(rng)};
    // taper to keep mass inside the grid
    const int nt = g.n_angular;
    for (int ir = 0; ir < g.n_radial(); ++ir) {
        const double damp = std::exp(-0.08 * g.r[ir] * g.r[ir]);
        for (int it = 0; it < nt; ++it) f[ir * nt + it] *= damp;
    }
    return f;
}

}  // namespace

TEST_CASE("gram matrix of the basis is the identity") {
    QuadratureGrid g = build_grid_for_level(4, 10);
    std::vector<LevelBasis> levels;
    for (int k = 0; k <= 4; ++k) levels.push_back(make_level_basis(g, k, 10));
    PlanarField one = PlanarField::Ones(g.n_points());
    Eigen::MatrixXcd gram = assemble_projected_potential(g, one, levels);
    Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
    CHECK((gram - eye).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("projector reproduces its own level and kills the others") {
    QuadratureGrid g = build_grid_for_level(5, 12);
    LevelProjector proj(g, 3, 12);
    for (int m : {0, 4, 9}) {
        PlanarField own = sample_field(g, [&](double x, double y) {
            return eigenfunction_eval(3, m, x, y);
        });
        CHECK(lp_norm(g, proj.apply(own) - own, 2.0) < 1e-8);
        PlanarField other = sample_field(g, [&](double x, double y) {
            return eigenfunction_eval(5, m, x, y);
        });
        CHECK(lp_norm(g, proj.apply(other), 2.0) < 1e-8);
    }
}

TEST_CASE("projector is idempotent and self-adjoint on random fields") {
    QuadratureGrid g = build_grid_for_level(6, 16);
    LevelProjector proj(g, 4, 16);
    PlanarField f = random_field(g, 11);
    PlanarField h = random_field(g, 13);
    PlanarField pf = proj.apply(f);
    CHECK(lp_norm(g, proj.apply(pf) - pf, 2.0) < 1e-8 * lp_norm(g, f, 2.0));
    const auto a = inner(g, proj.apply(f), h);
    const auto b = inner(g, f, proj.apply(h));
    CHECK(std::abs(a - b) < 1e-10 * lp_norm(g, f, 2.0) * lp_norm(g, h, 2.0));
    // contraction in L^2
    CHECK(lp_norm(g, pf, 2.0) <= lp_norm(g, f, 2.0) * (1.0 + 1e-12));
}

TEST_CASE("analysis and synthesis are mutually inverse on the level") {
    QuadratureGrid g = build_grid_for_level(2, 9);
    LevelProjector proj(g, 2, 9);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd c(proj.m_max() + 1);
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = {gauss(rng), gauss(rng)};
    Eigen::VectorXcd back = proj.analyze(proj.synthesize(c));
    CHECK((back - c).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("projector agrees with direct kernel integration") {
    // f mixes two levels with known coefficients; both the transform path
    // and brute-force kernel quadrature must keep level 3 and drop level 5.
    QuadratureGrid g = build_grid_for_level(5, 8);
    LevelProjector proj(g, 3, 8);
    std::mt19937_64 rng(21);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd keep(9), drop(9);
    for (int m = 0; m <= 8; ++m) {
        keep[m] = {gauss(rng), gauss(rng)};
        drop[m] = {gauss(rng), gauss(rng)};
    }
    PlanarField f = sample_field(g, [&](double x, double y) {
        std::complex<double> acc = 0.0;
        for (int m = 0; m <= 8; ++m)
            acc += keep[m] * eigenfunction_eval(3, m, x, y) +
                   drop[m] * eigenfunction_eval(5, m, x, y);
        return acc;
    });
    PlanarField pf = proj.apply(f);
    PlanarField expect = sample_field(g, [&](double x, double y) {
        std::complex<double> acc = 0.0;
        for (int m = 0; m <= 8; ++m) acc += keep[m] * eigenfunction_eval(3, m, x, y);
        return acc;
    });
    CHECK(lp_norm(g, pf - expect, 2.0) < 1e-8 * lp_norm(g, expect, 2.0));

    // probe at moderate radius: the direct angular quadrature of the kernel
    // phase needs n_angular well above |x| r_max, which fails near the rim
    std::uniform_int_distribution<int> pick_r(0, g.n_radial() / 3);
    std::uniform_int_distribution<int> pick_t(0, g.n_angular - 1);
    for (int probe = 0; probe < 3; ++probe) {
        const int ir = pick_r(rng), it = pick_t(rng);
        Eigen::Vector2d x(g.point_x(ir, it), g.point_y(ir, it));
        std::complex<double> acc = 0.0;
        for (int jr = 0; jr < g.n_radial(); ++jr)
            for (int jt = 0; jt < g.n_angular; ++jt) {
                Eigen::Vector2d y(g.point_x(jr, jt), g.point_y(jr, jt));
                acc += g.point_weight(jr) * projection_kernel(3, x, y) *
                       f[static_cast<Eigen::Index>(jr) * g.n_angular + jt];
            }
        CHECK(std::abs(acc - pf[static_cast<Eigen::Index>(ir) * g.n_angular + it]) < 1e-6);
    }
}

TEST_CASE("level norm of a radial potential: fast and dense paths agree") {
    QuadratureGrid g = build_grid_for_level(3, 14);
    LevelBasis b = make_level_basis(g, 3, 14);
    PotentialSpec v = gaussian_potential(0.7, 1.3);
    Eigen::VectorXd vr(g.n_radial());
    for (int ir = 0; ir < g.n_radial(); ++ir) vr[ir] = v.abs_radial(g.r[ir]);
    PlanarField vf = sample_potential(g, v, 1.5).cwiseAbs().cast<std::complex<double>>();
    const double fast = level_potential_norm(g, vr, b);
    const double dense = level_potential_norm(g, vf, b);
    CHECK(fast == doctest::Approx(dense).epsilon(1e-10));
    CHECK(fast > 0.0);
    CHECK(fast <= 0.7 * (1.0 + 1e-12));
}

TEST_CASE("angular cutoff is honest") {
    const int k = 2;
    const double rv = 3.0;
    const int cut = angular_cutoff(k, rv, 1e-12);
    CHECK(cut > 0);
    CHECK(mass_in_disc(k, cut, rv) < 1e-12);
    CHECK(mass_in_disc(k, std::max(0, cut / 2), rv) > 1e-12);
}
