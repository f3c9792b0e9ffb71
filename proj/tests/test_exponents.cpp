#include <doctest.h>

#include <cmath>

#include <landaulab/errors.hpp>
#include <landaulab/exponents.hpp>

using namespace landaulab;

TEST_CASE("lebesgue exponent basics") {
    LebesgueExponent two = 2.0;
    CHECK(two.value() == 2.0);
    CHECK(!two.is_infinite());
    CHECK(two.reciprocal() == 0.5);
    CHECK(two.conjugate() == LebesgueExponent(2.0));

    auto inf = LebesgueExponent::infinity();
    CHECK(inf.is_infinite());
    CHECK(inf.reciprocal() == 0.0);
    CHECK(inf.conjugate() == LebesgueExponent(1.0));
    CHECK(LebesgueExponent(1.0).conjugate().is_infinite());
    CHECK_THROWS_AS(inf.value(), DomainError);
    CHECK_THROWS_AS(LebesgueExponent(0.5), DomainError);

    CHECK(LebesgueExponent(1.5).conjugate() == LebesgueExponent(3.0));
    CHECK(LebesgueExponent(4.0).conjugate().value() == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("decay rate against the norm exponent, planar case") {
    // first branch: d/(2r) - 1 down to the break r = (d+1)/2
    CHECK(nu_exponent(2, 1.0) == doctest::Approx(0.0));
    CHECK(nu_exponent(2, 1.5) == doctest::Approx(-1.0 / 3.0));
    // second branch: -1/(2r)
    CHECK(nu_exponent(2, 3.0) == doctest::Approx(-1.0 / 6.0));
    CHECK(nu_exponent(2, LebesgueExponent::infinity()) == doctest::Approx(0.0));
    CHECK(nu_break(2) == doctest::Approx(1.5));

    // the two branches agree at the break
    const double rb = nu_break(2);
    CHECK(0.5 * 2 / rb - 1.0 == doctest::Approx(-0.5 / rb));

    CHECK_THROWS_AS(nu_exponent(2, 1.0 - 1e-6) /* below d/2 */, DomainError);
}

TEST_CASE("restriction exponent across both branches") {
    CHECK(rho_exponent(2, 2.0) == doctest::Approx(0.0));
    CHECK(rho_exponent(2, 4.0) == doctest::Approx(-0.25));
    CHECK(rho_exponent(2, 6.0) == doctest::Approx(-1.0 / 3.0));
    CHECK(rho_break(2) == doctest::Approx(6.0));
    CHECK(rho_exponent(2, LebesgueExponent::infinity()) == doctest::Approx(0.0));

    CHECK(rho_exponent(3, 4.0) == doctest::Approx(-0.25));
    CHECK(rho_break(3) == doctest::Approx(4.0));
    CHECK(rho_exponent(3, 100.0) == doctest::Approx(0.5 - 3.0 / 100.0));
    CHECK(rho_exponent(3, LebesgueExponent::infinity()) == doctest::Approx(0.5));

    // minimum sits at the break and equals -1/(d+1)
    for (int d : {2, 3, 4}) {
        CHECK(rho_exponent(d, rho_break(d)) == doctest::Approx(-1.0 / (d + 1)));
    }
    CHECK_THROWS_AS(rho_exponent(2, 1.5), DomainError);
    CHECK_THROWS_AS(rho_exponent(1, 4.0), DomainError);
}

TEST_CASE("duality ties the two exponents together") {
    for (int d : {2, 3, 5}) {
        for (double r : {0.5 * d, 0.5 * d + 0.1, 0.5 * (d + 1), 2.0 * d, 50.0}) {
            if (r < 1.0) continue;
            LebesgueExponent q = dual_pair_exponent(r);
            if (r > 1.0)
                CHECK(q.value() == doctest::Approx(2.0 * r / (r - 1.0)));
            else
                CHECK(q.is_infinite());
            CHECK(nu_exponent(d, r) == doctest::Approx(rho_exponent(d, q)).epsilon(1e-14));
        }
        // r = d/2 maps onto the endpoint q = 2d/(d-2) ... only meaningful d>2
        if (d > 2) {
            LebesgueExponent q = dual_pair_exponent(0.5 * d);
            CHECK(nu_exponent(d, 0.5 * d) ==
                  doctest::Approx(rho_exponent(d, q)).epsilon(1e-14));
        }
    }
    // r = 1 pairs with q = infinity
    CHECK(dual_pair_exponent(1.0).is_infinite());
    CHECK(dual_pair_exponent(LebesgueExponent::infinity()).value() == doctest::Approx(2.0));
}

TEST_CASE("exponent table is consistent row by row") {
    auto table = make_exponent_table(2, {1.0, 1.25, 1.5, 2.0, 3.0, LebesgueExponent::infinity()});
    REQUIRE(table.rows.size() == 6);
    for (const auto& row : table.rows) {
        CHECK(row.nu == doctest::Approx(nu_exponent(2, row.r)));
        CHECK(row.rho == doctest::Approx(rho_exponent(2, row.q)));
        CHECK(row.nu == doctest::Approx(row.rho).epsilon(1e-14));
    }
}
