#include <doctest.h>

#include <cmath>
#include <random>

#include "bers/calculus.hpp"
#include "bers/errors.hpp"
#include "bers/grid.hpp"
#include "bers/residual.hpp"

using namespace bers;

TEST_CASE("partial derivatives are exact on quadratics, boundaries included") {
    const Grid2 g = make_grid2(-1.0, 2.0, 13, 0.0, 1.0, 9);
    const auto f = Field2<double>::sample(
        g, [](const std::array<double, 2>& p) { return 2.0 * p[0] * p[0] - 3.0 * p[0] + 0.5; });
    const auto df = partial(f, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto idx = g.unflatten(i);
        const double x = g.coord(0, idx[0]);
        worst = std::max(worst, std::abs(df.values[i] - (4.0 * x - 3.0)));
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("partial of sin converges at second order on the interior") {
    std::vector<double> errs, hs;
    for (std::size_t n : {17u, 33u, 65u}) {
        const Grid2 g = make_grid2(0.0, 3.0, n, 0.0, 1.0, 5);
        const auto f = Field2<double>::sample(
            g, [](const std::array<double, 2>& p) { return std::sin(p[0]); });
        auto diff = partial(f, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto idx = g.unflatten(i);
            diff.values[i] -= std::cos(g.coord(0, idx[0]));
        }
        const Norms nm = interior_norms(diff);
        hs.push_back(g.spacing[0]);
        errs.push_back(nm.max_norm);
        // classic bound h^2/6 max|f'''| on central stencils
        CHECK(nm.max_norm <= g.spacing[0] * g.spacing[0] / 6.0 * 1.0001);
    }
    CHECK(ResidualReport::observed_order(hs, errs) > 1.9);
}

TEST_CASE("partial refuses axes with fewer than five nodes") {
    Grid2 g;
    g.origin = {0.0, 0.0};
    g.spacing = {0.1, 0.1};
    g.count = {4, 8};
    const Field2<double> f(g);
    CHECK_THROWS_AS((void)partial(f, 0), GridTooSmall);
}

TEST_CASE("moisil-theodoresco on linear vector fields") {
    const Grid3 g = make_grid3(0.0, 1.0, 6);
    // q = x1 e1: D q = e1 d1 (x1 e1) = e1 e1 = -1
    auto q1 = Field3<Biquaternion>::sample(g, [](const std::array<double, 3>& p) {
        return Biquaternion::e(1) * p[0];
    });
    const auto d1 = moisil_theodoresco(q1);
    // q = x2 e1: D q = e2 e1 = -e3
    auto q2 = Field3<Biquaternion>::sample(g, [](const std::array<double, 3>& p) {
        return Biquaternion::e(1) * p[1];
    });
    const auto d2 = moisil_theodoresco(q2);
    const Biquaternion want1(-1.0);
    const Biquaternion want2 = -Biquaternion::e(3);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(bq_norm(d1.values[i] - want1) < 1e-13);
        CHECK(bq_norm(d2.values[i] - want2) < 1e-13);
    }
}

TEST_CASE("elliptic dbar annihilates holomorphic cubes at second order") {
    std::vector<double> errs, hs;
    for (std::size_t n : {17u, 33u, 65u}) {
        const Grid2 g = make_grid2(-1.0, 1.0, n, -1.0, 1.0, n);
        const auto w = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
            const cplx z(p[0], p[1]);
            return z * z * z;
        });
        const auto db = dbar_elliptic(w);
        const auto dz = dz_elliptic(w);
        double dz_worst = 0.0;
        Field2<cplx> dz_err(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto idx = g.unflatten(i);
            const cplx z(g.coord(0, idx[0]), g.coord(1, idx[1]));
            dz_err.values[i] = dz.values[i] - 3.0 * z * z;
            dz_worst = std::max(dz_worst, std::abs(dz_err.values[i]));
        }
        const Norms nm = interior_norms(db);
        hs.push_back(g.spacing[0]);
        errs.push_back(nm.max_norm);
        // stencils are only exact on quadratics, so dz carries an h^2 error
        CHECK(dz_worst < 10.0 * g.spacing[0] * g.spacing[0]);
    }
    CHECK(ResidualReport::observed_order(hs, errs) > 1.9);
}

TEST_CASE("hyperbolic dbar annihilates hyperbolic squares") {
    const Grid2 g = make_grid2(0.0, 1.0, 33, 0.0, 1.0, 17);
    const auto w = Field2<Hyperbolic>::sample(g, [](const std::array<double, 2>& p) {
        const Hyperbolic z{p[0], p[1]};
        return z * z;
    });
    const Norms nm = interior_norms(dbar_hyperbolic(w));
    CHECK(nm.max_norm < 1e-13);  // z^2 components are quadratics, stencils exact
}

TEST_CASE("characteristic coefficients of (e^x, i e^-x)") {
    const Grid2 g = make_grid2(0.0, 1.0, 33, 0.0, 1.0, 33);
    const auto F = Field2<cplx>::sample(
        g, [](const std::array<double, 2>& p) { return cplx(std::exp(p[0]), 0.0); });
    const auto G = Field2<cplx>::sample(
        g, [](const std::array<double, 2>& p) { return cplx(0.0, std::exp(-p[0])); });
    const auto [a, b] = characteristic_coefficients(F, G);
    double worst_a = 0.0, worst_b = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst_a = std::max(worst_a, std::abs(a.values[i]));
        worst_b = std::max(worst_b, std::abs(b.values[i] - 0.5));
    }
    const double h2 = g.spacing[0] * g.spacing[0];
    CHECK(worst_a < 2.0 * h2);
    CHECK(worst_b < 2.0 * h2);
}

TEST_CASE("degenerate pairs are rejected") {
    const Grid2 g = make_grid2(0.0, 1.0, 9, 0.0, 1.0, 9);
    const auto F = Field2<cplx>::sample(
        g, [](const std::array<double, 2>& p) { return cplx(std::exp(p[0]), 0.0); });
    // G parallel to F over the reals: Im(Fbar G) = 0 everywhere
    const auto G = Field2<cplx>::sample(
        g, [](const std::array<double, 2>& p) { return cplx(2.0 * std::exp(p[0]), 0.0); });
    CHECK_THROWS_AS((void)characteristic_coefficients(F, G), DegeneratePair);
}

TEST_CASE("generating pair members solve their own vekua equation to rounding") {
    // With a,b built by finite differences, the pair residual reuses the same
    // stencils and cancels to rounding, not merely to O(h^2).
    const Grid2 g = make_grid2(0.0, 1.0, 21, 0.0, 1.0, 21);
    const auto F = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
        return std::exp(cplx(p[0], 0.3 * p[1]));
    });
    const auto G = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
        return cplx(0.0, 1.0) * std::exp(cplx(-0.5 * p[0], 0.2 * p[1]));
    });
    const auto [a, b] = characteristic_coefficients(F, G);
    const Norms rf = full_norms(vekua_residual_field(F, a, b));
    const Norms rg = full_norms(vekua_residual_field(G, a, b));
    CHECK(rf.max_norm < 1e-12);
    CHECK(rg.max_norm < 1e-12);
}

TEST_CASE("analytic-coefficient vekua residual shows second order") {
    // a and b sampled from closed forms; W = alpha F + beta G solves the
    // equation analytically, so the FD residual shrinks at stencil order.
    std::mt19937_64 eng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        const double alpha = d(eng), beta = d(eng);
        std::vector<double> errs, hs;
        for (std::size_t n : {17u, 33u, 65u}) {
            const Grid2 g = make_grid2(0.0, 1.0, n, 0.0, 1.0, n);
            const auto F = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
                return std::exp(cplx(p[0], 0.4 * p[1]));
            });
            const auto G = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
                return cplx(0.0, 1.0) * std::exp(cplx(-0.3 * p[0], 0.5 * p[1]));
            });
            // closed forms of the coefficients for this concrete pair
            // dbar F = 0.5(1 + i 0.4 i) F = 0.5(1 - 0.4) F; careful with the
            // complex chain rule below.
            const auto dbarF = Field2<cplx>::sample(g, [&](const std::array<double, 2>& p) {
                const cplx val = std::exp(cplx(p[0], 0.4 * p[1]));
                return 0.5 * (val + cplx(0.0, 1.0) * cplx(0.0, 0.4) * val);
            });
            const auto dbarG = Field2<cplx>::sample(g, [&](const std::array<double, 2>& p) {
                const cplx val = cplx(0.0, 1.0) * std::exp(cplx(-0.3 * p[0], 0.5 * p[1]));
                return 0.5 * (-0.3 * val + cplx(0.0, 1.0) * cplx(0.0, 0.5) * val);
            });
            Field2<cplx> a(g), b(g);
            for (std::size_t i = 0; i < g.size(); ++i) {
                const cplx Fi = F.values[i], Gi = G.values[i];
                const cplx den = Fi * std::conj(Gi) - std::conj(Fi) * Gi;
                a.values[i] = -(std::conj(Fi) * dbarG.values[i] -
                                std::conj(Gi) * dbarF.values[i]) /
                              den;
                b.values[i] =
                    (Fi * dbarG.values[i] - Gi * dbarF.values[i]) / den;
            }
            Field2<cplx> W(g);
            for (std::size_t i = 0; i < g.size(); ++i)
                W.values[i] = alpha * F.values[i] + beta * G.values[i];
            const Norms nm = interior_norms(vekua_residual_field(W, a, b));
            hs.push_back(g.spacing[0]);
            errs.push_back(nm.max_norm);
        }
        CHECK(ResidualReport::observed_order(hs, errs) > 1.9);
    }
}

TEST_CASE("elliptic intertwining residual vanishes for pair members") {
    const Grid2 g = make_grid2(0.0, 1.0, 33, 0.0, 1.0, 33);
    const auto F = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
        return std::exp(cplx(p[0], 0.3 * p[1]));
    });
    const auto G = Field2<cplx>::sample(g, [](const std::array<double, 2>& p) {
        return cplx(0.0, 1.0) * std::exp(cplx(-0.5 * p[0], 0.2 * p[1]));
    });
    const auto [a, b] = characteristic_coefficients(F, G);
    const auto phi = Field2<double>::sample(
        g, [](const std::array<double, 2>& p) { return std::sin(p[0] + 2.0 * p[1]); });
    const Norms nm = interior_norms(intertwine_residual_elliptic_field(F, phi, a, b));
    const double h2 = g.spacing[0] * g.spacing[0];
    CHECK(nm.max_norm < 20.0 * h2);
}
