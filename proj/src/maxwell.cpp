#include "bers/maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bers/calculus.hpp"
#include "bers/errors.hpp"
#include "bers/linalg.hpp"

namespace bers::maxwell {

namespace {

const cplx kI(0.0, 1.0);

template <std::size_t D>
double coarse_h(const Grid<D>& g) {
    double h = 0.0;
    for (auto s : g.spacing) h = std::max(h, s);
    return h;
}

template <class V, std::size_t D>
ResidualReport one_level(const char* op, const Field<V, D>& r) {
    ResidualReport rep;
    rep.op = op;
    rep.append_level(coarse_h(r.grid), interior_norms(r));
    return rep;
}

Biquaternion right_ic_e1(double coeff) { return Biquaternion::e(1) * cplx(0.0, coeff); }

}  // namespace

void validate(const EMField1D& em) {
    const auto check_grid = [&](const Grid2& g) {
        if (!(g == em.grid)) throw GridMismatch("EMField1D members sampled on different grids");
    };
    check_grid(em.E2.grid);
    check_grid(em.E3.grid);
    check_grid(em.H2.grid);
    check_grid(em.H3.grid);
    check_grid(em.V1.grid);
    const auto finite = [](double v) { return std::isfinite(v); };
    for (std::size_t i = 0; i < em.grid.size(); ++i) {
        if (!finite(em.E2.values[i]) || !finite(em.E3.values[i]) || !finite(em.H2.values[i]) ||
            !finite(em.H3.values[i]) || !finite(em.V1.values[i].real()) ||
            !finite(em.V1.values[i].imag()))
            throw std::invalid_argument("EMField1D: non-finite sample");
    }
}

EMField1D sample_em(const Grid2& grid, const ScalarXT& e2, const ScalarXT& e3, const ScalarXT& h2,
                    const ScalarXT& h3) {
    EMField1D em(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto p = grid.point(grid.unflatten(i));
        em.E2.values[i] = e2(p[0], p[1]);
        em.E3.values[i] = e3(p[0], p[1]);
        em.H2.values[i] = h2(p[0], p[1]);
        em.H3.values[i] = h3(p[0], p[1]);
    }
    return em;
}

Biquaternion assemble_v(double eps, double mu, const std::array<double, 3>& E,
                        const std::array<double, 3>& H) {
    const double se = std::sqrt(eps);
    const double sm = std::sqrt(mu);
    Biquaternion v;
    for (int k = 0; k < 3; ++k) v.c[k + 1] = cplx(se * E[k], sm * H[k]);
    return v;
}

Biquaternion transverse_v(double eps, double mu, double e2, double e3, double h2, double h3) {
    return assemble_v(eps, mu, {0.0, e2, e3}, {0.0, h2, h3});
}

Field2<Biquaternion> transverse_V(const MediumTables& tables, const EMField1D& em) {
    validate(em);
    Field2<Biquaternion> q(em.grid);
    for (std::size_t i = 0; i < em.grid.size(); ++i) {
        const double x = em.grid.coord(0, em.grid.unflatten(i)[0]);
        q.values[i] = transverse_v(tables.eps(x), tables.mu(), em.E2.values[i], em.E3.values[i],
                                   em.H2.values[i], em.H3.values[i]);
    }
    return q;
}

Field4<Biquaternion> assemble_V(const MediumTables& tables, const Field4<std::array<double, 3>>& E,
                                const Field4<std::array<double, 3>>& H) {
    if (!(E.grid == H.grid)) throw GridMismatch("assemble_V: E and H grids differ");
    Field4<Biquaternion> V(E.grid);
    for (std::size_t i = 0; i < V.grid.size(); ++i) {
        const double x1 = V.grid.coord(1, V.grid.unflatten(i)[1]);
        V.values[i] = assemble_v(tables.eps(x1), tables.mu(), E.values[i], H.values[i]);
    }
    return V;
}

Field4<Biquaternion> main_residual_field(const MediumTables& tables, const Field4<Biquaternion>& V) {
    const auto dt = partial(V, 0);
    const auto DV = moisil_theodoresco(V);
    Field4<Biquaternion> r(V.grid);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const double x1 = r.grid.coord(1, r.grid.unflatten(i)[1]);
        r.values[i] = dt.values[i] * (1.0 / tables.c(x1)) + kI * DV.values[i] -
                      V.values[i] * right_ic_e1(tables.c1(x1)) -
                      bq_complex_conj(V.values[i]) * right_ic_e1(tables.z1(x1));
    }
    return r;
}

ResidualReport main_residual(const MediumTables& tables, const Field4<Biquaternion>& V) {
    return one_level("maxwell-main", main_residual_field(tables, V));
}

Field4<Biquaternion> nonmagnetic_residual_field(const MediumTables& tables,
                                                const Field4<Biquaternion>& V) {
    const auto dt = partial(V, 0);
    const auto DV = moisil_theodoresco(V);
    Field4<Biquaternion> r(V.grid);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const double x1 = r.grid.coord(1, r.grid.unflatten(i)[1]);
        r.values[i] = dt.values[i] * (1.0 / tables.c(x1)) + kI * DV.values[i] -
                      (V.values[i] + bq_complex_conj(V.values[i])) * right_ic_e1(tables.c1(x1));
    }
    return r;
}

ResidualReport nonmagnetic_residual(const MediumTables& tables, const Field4<Biquaternion>& V) {
    return one_level("maxwell-nonmagnetic", nonmagnetic_residual_field(tables, V));
}

Field4<Biquaternion> intertwine_residual_field(const MediumTables& tables,
                                               const Field4<Biquaternion>& V,
                                               const Field4<double>& phi) {
    if (!(V.grid == phi.grid)) throw GridMismatch("intertwine_residual: V and phi grids differ");
    Field4<Biquaternion> phiV(V.grid);
    for (std::size_t i = 0; i < phiV.grid.size(); ++i)
        phiV.values[i] = V.values[i] * phi.values[i];
    auto r = main_residual_field(tables, phiV);

    const auto dt = partial(phi, 0);
    const auto d1 = partial(phi, 1);
    const auto d2 = partial(phi, 2);
    const auto d3 = partial(phi, 3);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const double x1 = r.grid.coord(1, r.grid.unflatten(i)[1]);
        Biquaternion dphi(cplx(dt.values[i] / tables.c(x1)));
        dphi += Biquaternion::e(1) * (kI * d1.values[i]);
        dphi += Biquaternion::e(2) * (kI * d2.values[i]);
        dphi += Biquaternion::e(3) * (kI * d3.values[i]);
        r.values[i] -= dphi * V.values[i];
    }
    return r;
}

ResidualReport intertwine_residual(const MediumTables& tables, const Field4<Biquaternion>& V,
                                   const Field4<double>& phi) {
    return one_level("maxwell-intertwine", intertwine_residual_field(tables, V, phi));
}

Field2<Biquaternion> nonmagnetic_1d_residual_field(const MediumTables& tables,
                                                   const Field2<Biquaternion>& V) {
    const auto dx = partial(V, 0);
    const auto dt = partial(V, 1);
    Field2<Biquaternion> r(V.grid);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const double x = r.grid.coord(0, r.grid.unflatten(i)[0]);
        r.values[i] = dt.values[i] * (1.0 / tables.c(x)) +
                      kI * (Biquaternion::e(1) * dx.values[i]) -
                      (V.values[i] + bq_complex_conj(V.values[i])) * right_ic_e1(tables.c1(x));
    }
    return r;
}

ResidualReport nonmagnetic_1d_residual(const MediumTables& tables, const Field2<Biquaternion>& V) {
    return one_level("maxwell-nonmagnetic-1d", nonmagnetic_1d_residual_field(tables, V));
}

Biquaternion GeneratingSextet::at(int k, double x) const {
    switch (k) {
        case 0: return Biquaternion::e(1) * c_(x);
        case 1: return Biquaternion::e(2) * (1.0 / c_(x));
        case 2: return Biquaternion::e(3) * (1.0 / c_(x));
        case 3: return Biquaternion::e(1) * kI;
        case 4: return Biquaternion::e(2) * kI;
        case 5: return Biquaternion::e(3) * kI;
        default: throw std::invalid_argument("sextet index outside 0..5");
    }
}

double GeneratingSextet::det_at(double x) const {
    std::array<std::array<double, 6>, 6> m{};
    for (int k = 0; k < 6; ++k) {
        const Biquaternion v = at(k, x);
        for (int r = 0; r < 3; ++r) {
            m[r][static_cast<std::size_t>(k)] = v.c[r + 1].real();
            m[r + 3][static_cast<std::size_t>(k)] = v.c[r + 1].imag();
        }
    }
    return det_small<double, 6>(m);
}

GeneratingSextet build_sextet(const MediumTables& tables, std::size_t det_samples) {
    GeneratingSextet s;
    s.c_ = [t = tables](double x) { return t.c(x); };
    if (det_samples < 2) det_samples = 2;
    const double h = (tables.x_max() - tables.x_min()) / static_cast<double>(det_samples - 1);
    double min_det = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < det_samples; ++k) {
        const double d = std::abs(s.det_at(tables.x_min() + h * static_cast<double>(k)));
        min_det = std::min(min_det, d);
        if (d <= 1e-10) throw DependentSet("sextet determinant vanishes inside the x range");
    }
    s.min_det_ = min_det;
    return s;
}

namespace {

template <std::size_t D>
void require_common_grid(const std::array<Field<double, D>, 6>& phi) {
    for (const auto& p : phi)
        if (!(p.grid == phi[0].grid)) throw GridMismatch("phi components on different grids");
}

}  // namespace

Field2<Biquaternion> combine_1d(const GeneratingSextet& sextet,
                                const std::array<Field2<double>, 6>& phi) {
    require_common_grid(phi);
    Field2<Biquaternion> V(phi[0].grid);
    for (std::size_t i = 0; i < V.grid.size(); ++i) {
        const double x = V.grid.coord(0, V.grid.unflatten(i)[0]);
        for (int k = 0; k < 6; ++k) V.values[i] += sextet.at(k, x) * phi[k].values[i];
    }
    return V;
}

Field4<Biquaternion> combine(const GeneratingSextet& sextet,
                             const std::array<Field4<double>, 6>& phi) {
    require_common_grid(phi);
    Field4<Biquaternion> V(phi[0].grid);
    for (std::size_t i = 0; i < V.grid.size(); ++i) {
        const double x1 = V.grid.coord(1, V.grid.unflatten(i)[1]);
        for (int k = 0; k < 6; ++k) V.values[i] += sextet.at(k, x1) * phi[k].values[i];
    }
    return V;
}

Field4<Biquaternion> second_kind_residual_field(const MediumTables& tables,
                                                const GeneratingSextet& sextet,
                                                const std::array<Field4<double>, 6>& phi) {
    require_common_grid(phi);
    Field4<Biquaternion> r(phi[0].grid);
    for (int k = 0; k < 6; ++k) {
        const auto dt = partial(phi[k], 0);
        const auto d1 = partial(phi[k], 1);
        const auto d2 = partial(phi[k], 2);
        const auto d3 = partial(phi[k], 3);
        for (std::size_t i = 0; i < r.grid.size(); ++i) {
            const double x1 = r.grid.coord(1, r.grid.unflatten(i)[1]);
            Biquaternion dphi(cplx(dt.values[i] / tables.c(x1)));
            dphi += Biquaternion::e(1) * (kI * d1.values[i]);
            dphi += Biquaternion::e(2) * (kI * d2.values[i]);
            dphi += Biquaternion::e(3) * (kI * d3.values[i]);
            r.values[i] += dphi * sextet.at(k, x1);
        }
    }
    return r;
}

ResidualReport second_kind_residual(const MediumTables& tables, const GeneratingSextet& sextet,
                                    const std::array<Field4<double>, 6>& phi) {
    return one_level("maxwell-second-kind", second_kind_residual_field(tables, sextet, phi));
}

Field2<Biquaternion> second_kind_1d_residual_field(const MediumTables& tables,
                                                   const GeneratingSextet& sextet,
                                                   const std::array<Field2<double>, 6>& phi) {
    require_common_grid(phi);
    Field2<Biquaternion> r(phi[0].grid);
    for (int k = 0; k < 6; ++k) {
        const auto dx = partial(phi[k], 0);
        const auto dt = partial(phi[k], 1);
        for (std::size_t i = 0; i < r.grid.size(); ++i) {
            const double x = r.grid.coord(0, r.grid.unflatten(i)[0]);
            Biquaternion dphi(cplx(dt.values[i] / tables.c(x)));
            dphi += Biquaternion::e(1) * (kI * dx.values[i]);
            r.values[i] += dphi * sextet.at(k, x);
        }
    }
    return r;
}

ResidualReport second_kind_1d_residual(const MediumTables& tables, const GeneratingSextet& sextet,
                                       const std::array<Field2<double>, 6>& phi) {
    return one_level("maxwell-second-kind-1d", second_kind_1d_residual_field(tables, sextet, phi));
}

Field2<cplx> v1_closed_form(const MediumTables& tables, double a1, double a2, const Grid2& grid) {
    return Field2<cplx>::sample(grid, [&](const std::array<double, 2>& p) {
        return cplx(a1 * tables.c(p[0]), a2);
    });
}

Field2<Biquaternion> longitudinal_residual_field(const MediumTables& tables,
                                                 const Field2<cplx>& V1) {
    const auto dx = partial(V1, 0);
    const auto dt = partial(V1, 1);
    Field2<Biquaternion> r(V1.grid);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const double x = r.grid.coord(0, r.grid.unflatten(i)[0]);
        const cplx v = V1.values[i];
        r.values[i] = Biquaternion(dt.values[i] / tables.c(x)) +
                      Biquaternion::e(1) *
                          (kI * (dx.values[i] - tables.c1(x) * (v + std::conj(v))));
    }
    return r;
}

ResidualReport longitudinal_residual(const MediumTables& tables, const Field2<cplx>& V1) {
    return one_level("maxwell-longitudinal", longitudinal_residual_field(tables, V1));
}

ResidualReport longitudinal_residual(const MediumTables& tables, const EMField1D& em) {
    validate(em);
    return longitudinal_residual(tables, em.V1);
}

Field2<Biquaternion> transverse_residual_field(const MediumTables& tables, const EMField1D& em) {
    const auto q = transverse_V(tables, em);
    const auto dx = partial(q, 0);
    const auto dt = partial(q, 1);
    Field2<Biquaternion> r(q.grid);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const double x = r.grid.coord(0, r.grid.unflatten(i)[0]);
        r.values[i] = dt.values[i] * (1.0 / tables.c(x)) +
                      kI * (Biquaternion::e(1) * dx.values[i]) -
                      (q.values[i] + bq_complex_conj(q.values[i])) * right_ic_e1(tables.c1(x));
    }
    return r;
}

ResidualReport transverse_residual(const MediumTables& tables, const EMField1D& em) {
    return one_level("maxwell-transverse", transverse_residual_field(tables, em));
}

Bicomplex phi_from_v(const cplx& v2, const cplx& v3) { return Bicomplex(v2, v3); }

std::pair<cplx, cplx> v_from_phi(const Bicomplex& phi) { return {phi.z1(), phi.z2()}; }

Bicomplex w_from_psi(double C, const Bicomplex& psi) {
    return bicomplex_conj_i(psi) * std::sqrt(C);
}

Bicomplex psi_from_w(double C, const Bicomplex& W) {
    return bicomplex_conj_i(W) * (1.0 / std::sqrt(C));
}

Hyperbolic to_field_gauge(const Hyperbolic& w) { return Hyperbolic::j() * w; }

TransversePoint fields_from_w_point(const MediumTables& tables, double x, const Hyperbolic& w1,
                                    const Hyperbolic& w2) {
    const double sc = std::sqrt(tables.c(x));
    const double se = std::sqrt(tables.eps(x));
    const double sm = std::sqrt(tables.mu());
    TransversePoint p;
    p.E2 = w1.u / (sc * se);
    p.H3 = -w1.v / (sc * sm);
    p.E3 = w2.u / (sc * se);
    p.H2 = w2.v / (sc * sm);
    return p;
}

std::pair<Hyperbolic, Hyperbolic> w_from_fields_point(const MediumTables& tables, double x,
                                                      const TransversePoint& p) {
    const double sc = std::sqrt(tables.c(x));
    const double se = std::sqrt(tables.eps(x));
    const double sm = std::sqrt(tables.mu());
    return {Hyperbolic{sc * se * p.E2, -sc * sm * p.H3}, Hyperbolic{sc * se * p.E3, sc * sm * p.H2}};
}

EMField1D fields_from_w(const MediumTables& tables, const HypEval& w1, const HypEval& w2,
                        const Grid2& xt_grid) {
    EMField1D em(xt_grid);
    for (std::size_t i = 0; i < xt_grid.size(); ++i) {
        const auto pt = xt_grid.point(xt_grid.unflatten(i));
        const double xi = tables.N_of_x(pt[0]);
        const auto p = fields_from_w_point(tables, pt[0], w1(xi, pt[1]), w2(xi, pt[1]));
        em.E2.values[i] = p.E2;
        em.E3.values[i] = p.E3;
        em.H2.values[i] = p.H2;
        em.H3.values[i] = p.H3;
    }
    return em;
}

std::pair<Field2<Hyperbolic>, Field2<Hyperbolic>> w_from_fields(const MediumTables& tables,
                                                                const EMField1D& em) {
    validate(em);
    Field2<Hyperbolic> w1(em.grid), w2(em.grid);
    for (std::size_t i = 0; i < em.grid.size(); ++i) {
        const double x = em.grid.coord(0, em.grid.unflatten(i)[0]);
        const TransversePoint p{em.E2.values[i], em.E3.values[i], em.H2.values[i],
                                em.H3.values[i]};
        const auto [a, b] = w_from_fields_point(tables, x, p);
        w1.values[i] = a;
        w2.values[i] = b;
    }
    return {w1, w2};
}

EMField1D em_from_formal_power(const MediumTables& tables, const FormalPowerTable& fp, int n,
                               const Hyperbolic& a, const Grid2& xt_grid) {
    const HypEval w1 = [&](double xi, double t) {
        return to_field_gauge(z_formal_power(fp, n, a, Hyperbolic{xi, t}));
    };
    const HypEval w2 = [](double, double) { return Hyperbolic{}; };
    return fields_from_w(tables, w1, w2, xt_grid);
}

}  // namespace bers::maxwell
