#include <doctest.h>

#include <landaulab/errors.hpp>
#include <landaulab/levels.hpp>

using namespace landaulab;

TEST_CASE("eigenvalues are 2k + n") {
    CHECK(landau_eigenvalue(0, 1) == 1.0);
    CHECK(landau_eigenvalue(5, 1) == 11.0);
    CHECK(landau_eigenvalue(3, 2) == 8.0);
    CHECK(landau_eigenvalue({4, 1}) == 9.0);
    CHECK_THROWS_AS(landau_eigenvalue(-1, 1), DomainError);
    CHECK_THROWS_AS(landau_eigenvalue(0, 0), DomainError);
}

TEST_CASE("distance to the spectrum") {
    CHECK(spectrum_distance(1.0) == 0.0);
    CHECK(spectrum_distance(9.0) == 0.0);
    CHECK(spectrum_distance(2.0) == 1.0);
    CHECK(spectrum_distance(3.4) == doctest::Approx(0.4));
    CHECK(spectrum_distance(2.6) == doctest::Approx(0.4));
    CHECK(spectrum_distance(0.2) == doctest::Approx(0.8));
    CHECK(spectrum_distance(-3.0) == doctest::Approx(4.0));
    CHECK(spectrum_distance(7.5, 2) == doctest::Approx(0.5));  // spectrum 2, 4, 6, 8
    CHECK(spectrum_distance(1.0, 2) == doctest::Approx(1.0));
}
