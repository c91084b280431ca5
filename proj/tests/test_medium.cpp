#include <doctest.h>

#include <cmath>
#include <vector>

#include "bers/errors.hpp"
#include "bers/medium.hpp"

using namespace bers;

TEST_CASE("vacuum tables: travel time equals distance") {
    const MediumTables t = build_tables(MediumProfile::vacuum(0.0, 2.0, 2001));
    CHECK(t.xi_max() == doctest::Approx(2.0).epsilon(1e-12));
    for (double x = 0.0; x <= 2.0; x += 0.17) {
        CHECK(t.c(x) == doctest::Approx(1.0));
        CHECK(t.n(x) == doctest::Approx(1.0));
        CHECK(t.Z(x) == doctest::Approx(1.0));
        CHECK(t.N_of_x(x) == doctest::Approx(x).epsilon(1e-10));
        CHECK(t.x_of_xi(x) == doctest::Approx(x).epsilon(1e-10));
        CHECK(t.f_of_xi(x) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(t.c1(x)) < 1e-10);
        CHECK(std::abs(t.z1(x)) < 1e-10);
    }
}

TEST_CASE("exponential profile closed forms") {
    // eps = e^{-2x}, mu = 1: c = e^x, n = e^{-x}, N = 1 - e^{-x},
    // f(xi) = (1 - xi)^{-1/2}.
    const MediumTables t =
        build_tables(MediumProfile::exponential(1.0, -2.0, 1.0, 0.0, 1.0, 4001));
    CHECK(t.xi_max() == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
    for (double x = 0.0; x <= 1.0; x += 0.13) {
        CHECK(t.c(x) == doctest::Approx(std::exp(x)).epsilon(1e-12));
        CHECK(t.N_of_x(x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-9));
        CHECK(t.c1(x) == doctest::Approx(0.5).epsilon(1e-8));
        CHECK(t.z1(x) == doctest::Approx(0.5).epsilon(1e-8));
    }
    for (double xi = 0.0; xi <= 0.6; xi += 0.07) {
        CHECK(t.x_of_xi(xi) == doctest::Approx(-std::log(1.0 - xi)).epsilon(1e-8));
        CHECK(t.f_of_xi(xi) == doctest::Approx(std::pow(1.0 - xi, -0.5)).epsilon(1e-8));
        CHECK(t.f_prime_of_xi(xi) ==
              doctest::Approx(0.5 * std::pow(1.0 - xi, -1.5)).epsilon(1e-6));
    }
}

TEST_CASE("polynomial profile closed forms") {
    // eps = (x+1)^{-4}, mu = 1: c = (x+1)^2, N = 1 - 1/(x+1) = x/(x+1).
    const MediumTables t =
        build_tables(MediumProfile::polynomial(1.0, 1.0, -4.0, 1.0, 0.0, 1.0, 4001));
    for (double x = 0.0; x <= 1.0; x += 0.11) {
        const double s = x + 1.0;
        CHECK(t.c(x) == doctest::Approx(s * s).epsilon(1e-12));
        CHECK(t.N_of_x(x) == doctest::Approx(x / s).epsilon(1e-9));
        CHECK(t.c1(x) == doctest::Approx(1.0 / s).epsilon(1e-7));
    }
    CHECK(t.c(1.0) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("constant mu makes the two log-derivatives agree") {
    const MediumTables t =
        build_tables(MediumProfile::exponential(2.0, 1.5, 3.0, 0.0, 1.0, 2001));
    for (double x = 0.0; x <= 1.0; x += 0.09) {
        // Z = sqrt(mu/eps), c = 1/sqrt(eps mu): same log-derivative up to sign
        // conventions: c1 = z1 for constant mu.
        CHECK(t.c1(x) == doctest::Approx(t.z1(x)).epsilon(1e-9));
    }
}

TEST_CASE("table profile interpolates the samples") {
    std::vector<double> xs, vals;
    for (int i = 0; i <= 40; ++i) {
        const double x = 0.025 * i;
        xs.push_back(x);
        vals.push_back(2.0 + std::sin(x));
    }
    const MediumTables t = build_tables(MediumProfile::table(xs, vals, 1.0, 2001));
    for (double x = 0.0; x <= 1.0; x += 0.083) {
        CHECK(t.eps(x) == doctest::Approx(2.0 + std::sin(x)).epsilon(1e-6));
    }
}

TEST_CASE("round trip between x and travel time") {
    const MediumTables t =
        build_tables(MediumProfile::exponential(1.0, -2.0, 1.0, 0.0, 1.0, 2001));
    for (double x = 0.0; x <= 1.0; x += 0.061) {
        CHECK(t.x_of_xi(t.N_of_x(x)) == doctest::Approx(x).epsilon(1e-9));
    }
    for (double xi = 0.0; xi < t.xi_max(); xi += 0.051) {
        CHECK(t.N_of_x(t.x_of_xi(xi)) == doctest::Approx(xi).epsilon(1e-9));
    }
}

TEST_CASE("doubling the sample count shrinks travel-time error by at least 8x") {
    auto err_at = [](std::size_t samples) {
        const MediumTables t =
            build_tables(MediumProfile::exponential(1.0, -2.0, 1.0, 0.0, 1.0, samples));
        double worst = 0.0;
        for (double x = 0.05; x <= 0.95; x += 0.05) {
            worst = std::max(worst, std::abs(t.N_of_x(x) - (1.0 - std::exp(-x))));
        }
        return worst;
    };
    const double coarse = err_at(251);
    const double fine = err_at(501);
    CHECK(fine * 8.0 <= coarse * 1.05);
}

TEST_CASE("invalid media are rejected") {
    CHECK_THROWS_AS(build_tables(MediumProfile::exponential(-1.0, 1.0, 1.0, 0.0, 1.0, 101)),
                    NonPositivePermittivity);
    MediumProfile p = MediumProfile::vacuum(0.0, 1.0, 101);
    p.eps = [](double x) { return 0.5 - x; };  // crosses zero inside the range
    CHECK_THROWS_AS(build_tables(p), NonPositivePermittivity);
    MediumProfile q = MediumProfile::vacuum(0.0, 1.0, 101);
    q.mu = 0.0;
    CHECK_THROWS_AS(build_tables(q), std::invalid_argument);
}

TEST_CASE("queries outside the tabulated range are rejected") {
    const MediumTables t = build_tables(MediumProfile::vacuum(0.0, 1.0, 101));
    CHECK_THROWS_AS((void)t.N_of_x(1.5), OutOfDomain);
    CHECK_THROWS_AS((void)t.x_of_xi(-0.5), OutOfDomain);
}

TEST_CASE("c_vector matches the tabulated log-derivative") {
    const MediumTables t =
        build_tables(MediumProfile::exponential(1.0, -2.0, 1.0, 0.0, 1.0, 2001));
    for (double x = 0.1; x <= 0.9; x += 0.13) {
        CHECK(c_vector(t, x) == doctest::Approx(t.c1(x)).epsilon(1e-14));
    }
}
