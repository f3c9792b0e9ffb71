#include <doctest.h>

#include <cmath>
#include <complex>

#include <landaulab/errors.hpp>
#include <landaulab/resolvent3d.hpp>

using namespace landaulab;
using cd = std::complex<double>;

namespace {

cd gauss_half(double x) { return cd(std::exp(-0.5 * x * x), 0.0); }

cd offset_gauss(double x) {
    const double s = x - 0.4;
    return cd(std::exp(-0.8 * s * s), 0.0);
}

struct ScanSetup {
    QuadratureGrid planar = build_grid_for_level(3, 5);
    AxialGrid ax = make_axial_grid(7.0, 181);
    LayeredFunction f, g;
    MixedNormSpec spec{MixedSpace::Xq, LebesgueExponent(4.0), 3};
    MixedNormSpec vq{MixedSpace::Vq, LebesgueExponent(4.0), 3};

    ScanSetup() {
        f = single_channel(ax, 0, 0, gauss_half);
        g = single_channel(ax, 0, 0, offset_gauss);
    }

    LayeredPotential potential(double amplitude) const {
        return make_layered_potential(planar, 3, 5, gaussian_potential(amplitude, 1.5),
                                      1.2, ax, vq);
    }
};

}  // namespace

TEST_CASE("pairings with disjoint channels vanish identically") {
    ScanSetup s;
    LayeredFunction g2 = single_channel(s.ax, 1, 2, gauss_half);
    LapScanTable t = lap_bilinear_scan({2.0}, {1e-2}, s.f, g2, s.spec, s.planar);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].value == 0.0);
    CHECK(t.rows[0].gated);
    CHECK(!t.any_refused);
}

TEST_CASE("free pairings stabilize along the regularization ladder") {
    ScanSetup s;
    LapScanTable t =
        lap_bilinear_scan({2.0}, {1e-1, 1e-2, 1e-3, 1e-4}, s.f, s.g, s.spec, s.planar);
    REQUIRE(t.rows.size() == 4);
    for (const LapScanRow& r : t.rows) {
        CHECK(r.gated);
        CHECK(r.value > 0.0);
        CHECK(r.f_norm > 0.0);
        CHECK(r.g_norm > 0.0);
    }
    const double a = t.rows[2].value;
    const double b = t.rows[3].value;
    CHECK(std::abs(a - b) <= 0.05 * std::min(a, b));
    CHECK(!t.any_refused);
}

TEST_CASE("weak coupling stays within the perturbative band") {
    ScanSetup s;
    LayeredPotential pot = s.potential(0.03);
    CHECK(pot.vq_norm > 0.0);
    CHECK(pot.vq_norm < 0.6);
    CHECK(pot.sup_abs >= 0.03);

    LapScanTable free_t = lap_bilinear_scan({2.0}, {1e-3, 1e-4}, s.f, s.g, s.spec, s.planar);
    LapScanTable pert_t =
        lap_bilinear_scan({2.0}, {1e-3, 1e-4}, s.f, s.g, s.spec, s.planar, &pot);
    REQUIRE(pert_t.rows.size() == 2);
    CHECK(!pert_t.any_refused);
    for (size_t i = 0; i < pert_t.rows.size(); ++i) {
        const LapScanRow& r = pert_t.rows[i];
        CHECK(r.gated);
        const double v = pot.vq_norm;
        const double band = (1.0 + v) / (1.0 - v);
        CHECK(r.value <= free_t.rows[i].value * band);
        CHECK(r.value >= free_t.rows[i].value / band);
    }
    const double a = pert_t.rows[0].value;
    const double b = pert_t.rows[1].value;
    CHECK(std::abs(a - b) <= 0.05 * std::min(a, b));
}

TEST_CASE("strong coupling is refused rather than resummed") {
    ScanSetup s;
    LayeredPotential pot = s.potential(50.0);
    LapScanTable t = lap_bilinear_scan({2.0}, {1e-2}, s.f, s.g, s.spec, s.planar, &pot);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.any_refused);
    CHECK(!t.rows[0].gated);
    CHECK(std::isnan(t.rows[0].value));
    CHECK(t.rows[0].eta >= 0.995);
}

TEST_CASE("scan rejects resonant energies and vanishing regularization") {
    ScanSetup s;
    CHECK_THROWS_AS(lap_bilinear_scan({2.0}, {0.0}, s.f, s.g, s.spec, s.planar), Error);
    CHECK_THROWS_AS(lap_bilinear_scan({3.02}, {1e-2}, s.f, s.g, s.spec, s.planar), Error);
    LayeredFunction zero = s.f;
    for (auto& c : zero.channels) c.axial.setZero();
    CHECK_THROWS_AS(lap_bilinear_scan({2.0}, {1e-2}, zero, s.g, s.spec, s.planar), Error);
}

TEST_CASE("potential packaging records the coupling data") {
    ScanSetup s;
    LayeredPotential pot = s.potential(0.5);
    CHECK(pot.sign == -1);
    CHECK(pot.sup_abs >= 0.5);
    CHECK(pot.vq_norm > 0.0);
    CHECK(pot.full.window_leak() >= 0.0);
    CHECK(pot.full.window_leak() < 1.0);
    MixedNormSpec xq{MixedSpace::Xq, LebesgueExponent(4.0), 3};
    CHECK_THROWS_AS(make_layered_potential(s.planar, 3, 5, gaussian_potential(0.5, 1.5),
                                           1.2, s.ax, xq),
                    Error);
}
