#include <doctest.h>

#include <landaulab/cluster.hpp>
#include <landaulab/fd_oracle.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace landaulab;

namespace {

std::vector<double> shifted_members(const ClusterReport& rep, double floor = 1e-8) {
    std::vector<double> out;
    for (double e : rep.members)
        if (std::abs(e - rep.lambda) > floor) out.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("support radius brackets the closed-form gaussian tail") {
    PotentialSpec v = gaussian_potential(0.7, 1.3);
    const double R = potential_support_radius(v, LebesgueExponent(1.0), 1e-10);
    CHECK(v.tail_fraction(R, LebesgueExponent(1.0)) <= 1e-10);
    CHECK(v.tail_fraction(0.98 * R, LebesgueExponent(1.0)) > 1e-10 * 0.3);
    // exp(-d^2 / (2 sigma^2)) = 1e-10  =>  d = sigma sqrt(2 ln 1e10)
    CHECK(R == doctest::Approx(1.3 * std::sqrt(2.0 * std::log(1e10))).epsilon(2e-3));
}

TEST_CASE("angular-momentum line path matches the dense assembly") {
    PotentialSpec v = gaussian_potential(0.4, 1.2);
    ClusterOptions opts;
    opts.check_stability = false;

    ClusterReport radial = cluster_spectrum(v, 3, opts);

    PotentialSpec off = v;
    off.center = {1e-9, 0.0};  // forces the coupled-block path
    CHECK_FALSE(off.is_radial());
    ClusterReport dense = cluster_spectrum(off, 3, opts);

    auto a = shifted_members(radial), b = shifted_members(dense);
    REQUIRE_FALSE(a.empty());
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7));
    CHECK(radial.shift_max == doctest::Approx(dense.shift_max).epsilon(1e-6));
}

TEST_CASE("window doubling flags a converged cluster") {
    PotentialSpec v = gaussian_potential(0.3, 1.0);
    ClusterReport rep = cluster_spectrum(v, 2);
    CHECK(rep.stable);
    CHECK(rep.stability_change < 0.01);
    CHECK(rep.shift_max > 1e-3);       // the potential is actually felt
    CHECK(rep.shift_max < 0.4);
    CHECK(rep.delta_max == doctest::Approx(rep.shift_max).epsilon(1e-12));
    CHECK_FALSE(rep.band_edge);
    REQUIRE_FALSE(rep.members.empty());
    CHECK(std::is_sorted(rep.members.begin(), rep.members.end()));
}

TEST_CASE("cluster eigenvalues track the finite-difference spectrum") {
    // an attractive gaussian drags a handful of states below each level;
    // the box spectrum and the window spectra must agree on the most
    // attracted member, which lives far from the walls
    PotentialSpec v = gaussian_potential(0.5, 1.0);
    auto vfun = [](double x, double y) { return -0.5 * std::exp(-0.5 * (x * x + y * y)); };

    ClusterReport c0 = cluster_spectrum(v, 0);
    ClusterReport c1 = cluster_spectrum(v, 1);
    REQUIRE_FALSE(c0.members.empty());
    REQUIRE_FALSE(c1.members.empty());

    oracle::FDProblem p;
    p.half_width = 5.0;
    p.h = 0.1;
    p.potential = vfun;
    p.count = 2;
    auto ground = oracle::fd_spectrum(p);
    REQUIRE_FALSE(ground.pairs.empty());
    CHECK(ground.pairs[0].value == doctest::Approx(c0.members.front()).epsilon(4e-3));

    // level-1 members sit near 2.7; squeezed box states are screened off by
    // their wall mass
    oracle::FDProblem p1 = p;
    p1.count = 0;
    p1.shifts = {2.6};
    p1.per_shift = 6;
    auto upper = oracle::fd_spectrum(p1);
    double fd1 = 0.0;
    for (const auto& pr : upper.pairs)
        if (pr.value > 2.0 && pr.boundary_mass < 5e-4) {
            fd1 = pr.value;
            break;
        }
    REQUIRE(fd1 > 2.0);
    CHECK(fd1 == doctest::Approx(c1.members.front()).epsilon(4e-3));
}
