#include <doctest.h>

#include <cmath>

#include <landaulab/errors.hpp>
#include <landaulab/grid.hpp>

using namespace landaulab;

TEST_CASE("gauss-legendre rule: symmetry and polynomial exactness") {
    Eigen::VectorXd x, w;
    gauss_legendre(8, x, w);
    REQUIRE(x.size() == 8);
    CHECK(w.sum() == doctest::Approx(2.0).epsilon(1e-14));
    for (int i = 0; i < 4; ++i) {
        CHECK(x[i] == doctest::Approx(-x[7 - i]).epsilon(1e-14));
        CHECK(w[i] == doctest::Approx(w[7 - i]).epsilon(1e-14));
    }
    // exact through degree 15
    for (int deg : {2, 6, 10, 14}) {
        double acc = 0.0;
        for (int i = 0; i < 8; ++i) acc += w[i] * std::pow(x[i], deg);
        CHECK(acc == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
    }
    double m16 = 0.0;
    for (int i = 0; i < 8; ++i) m16 += w[i] * std::pow(x[i], 16);
    CHECK(std::abs(m16 - 2.0 / 17.0) > 1e-8);  // degree 16 is out of reach
}

TEST_CASE("grid weights integrate the disc exactly") {
    QuadratureGrid g = build_grid(5.0, 10.0, 64);
    CHECK(g.wr.sum() == doctest::Approx(0.5 * 25.0).epsilon(1e-13));
    double area = 0.0;
    for (int ir = 0; ir < g.n_radial(); ++ir)
        for (int it = 0; it < g.n_angular; ++it) area += g.point_weight(ir);
    CHECK(area == doctest::Approx(M_PI * 25.0).epsilon(1e-12));
}

TEST_CASE("eigenfunction quadrature mass") {
    QuadratureGrid g = build_grid_for_level(6, 14);
    CHECK(quadrature_mass(g, 0, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(quadrature_mass(g, 3, 5) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quadrature_mass(g, 6, 14) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("calibration gates") {
    QuadratureGrid g = build_grid_for_level(4, 8);
    CHECK_NOTHROW(g.require_calibrated(4, 8));
    CHECK_NOTHROW(g.require_calibrated(2, 3));
    CHECK_THROWS_AS(g.require_calibrated(5, 8), GridError);
    CHECK_THROWS_AS(g.require_calibrated(4, 40), GridError);

    // a grid that cannot hold the requested level fails calibration
    QuadratureGrid tiny = build_grid(2.0, 10.0, 32);
    CHECK_THROWS_AS(calibrate(tiny, 6, 12), GridError);
}

TEST_CASE("power-of-two helper") {
    CHECK(next_pow2(1) == 1);
    CHECK(next_pow2(2) == 2);
    CHECK(next_pow2(3) == 4);
    CHECK(next_pow2(63) == 64);
    CHECK(next_pow2(64) == 64);
    CHECK(next_pow2(65) == 128);
}
