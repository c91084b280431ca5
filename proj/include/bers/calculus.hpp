#pragma once

#include <utility>

#include "bers/algebra.hpp"
#include "bers/grid.hpp"
#include "bers/residual.hpp"

namespace bers {

// Second-order partial derivative along one axis: central differences inside,
// one-sided three-point stencils at the two boundary layers. Exact on
// quadratics everywhere.
template <class V, std::size_t D>
Field<V, D> partial(const Field<V, D>& f, std::size_t axis) {
    const Grid<D>& g = f.grid;
    if (g.count[axis] < 5) throw GridTooSmall("partial: need at least 5 nodes per axis");
    Field<V, D> out(g);
    std::size_t stride = 1;
    for (std::size_t a = axis + 1; a < D; ++a) stride *= g.count[a];
    const std::size_t n = g.count[axis];
    const double inv2h = 1.0 / (2.0 * g.spacing[axis]);
    const std::size_t total = g.size();
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t k = (i / stride) % n;
        if (k == 0) {
            out.values[i] =
                (f.values[i] * -3.0 + f.values[i + stride] * 4.0 - f.values[i + 2 * stride]) * inv2h;
        } else if (k + 1 == n) {
            out.values[i] =
                (f.values[i] * 3.0 - f.values[i - stride] * 4.0 + f.values[i - 2 * stride]) * inv2h;
        } else {
            out.values[i] = (f.values[i + stride] - f.values[i - stride]) * inv2h;
        }
    }
    return out;
}

// D q = e1 d1 q + e2 d2 q + e3 d3 q (left multiplication by the units).
inline Field3<Biquaternion> moisil_theodoresco(const Field3<Biquaternion>& q) {
    Field3<Biquaternion> out(q.grid);
    for (std::size_t a = 0; a < 3; ++a) {
        const auto d = partial(q, a);
        const Biquaternion e = Biquaternion::e(static_cast<int>(a) + 1);
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += e * d.values[i];
    }
    return out;
}

// Same operator on (t,x1,x2,x3) fields; spatial axes are 1..3.
inline Field4<Biquaternion> moisil_theodoresco(const Field4<Biquaternion>& q) {
    Field4<Biquaternion> out(q.grid);
    for (std::size_t a = 1; a < 4; ++a) {
        const auto d = partial(q, a);
        const Biquaternion e = Biquaternion::e(static_cast<int>(a));
        for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += e * d.values[i];
    }
    return out;
}

namespace detail {
inline Hyperbolic j_times(const Hyperbolic& w) { return Hyperbolic::j() * w; }
inline Bicomplex j_times(const Bicomplex& w) { return bicomplex_j() * w; }
}  // namespace detail

// Hyperbolic d-bar: (1/2)(d_xi - j d_t) on a grid with axis 0 = xi, axis 1 = t.
template <class V>
Field2<V> dbar_hyperbolic(const Field2<V>& w) {
    const auto dxi = partial(w, 0);
    const auto dt = partial(w, 1);
    Field2<V> out(w.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = (dxi.values[i] - detail::j_times(dt.values[i])) * 0.5;
    return out;
}

// Elliptic d-bar and d: (1/2)(d_x ± i d_y) on a grid with axis 0 = x, axis 1 = y.
inline Field2<cplx> dbar_elliptic(const Field2<cplx>& w) {
    const auto dx = partial(w, 0);
    const auto dy = partial(w, 1);
    Field2<cplx> out(w.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = 0.5 * (dx.values[i] + cplx(0.0, 1.0) * dy.values[i]);
    return out;
}

inline Field2<cplx> dz_elliptic(const Field2<cplx>& w) {
    const auto dx = partial(w, 0);
    const auto dy = partial(w, 1);
    Field2<cplx> out(w.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = 0.5 * (dx.values[i] - cplx(0.0, 1.0) * dy.values[i]);
    return out;
}

struct CharacteristicCoefficients {
    Field2<cplx> a;
    Field2<cplx> b;
};

// Characteristic coefficients of a generating pair (F,G):
//   a = -(Fbar dbar G - Gbar dbar F) / (F Gbar - Fbar G)
//   b =  (F dbar G - G dbar F)      / (F Gbar - Fbar G)
// Requires Im(Fbar G) > 0; nodes with |Im(Fbar G)| <= tol (|F|^2 + |G|^2)
// are rejected as degenerate.
CharacteristicCoefficients characteristic_coefficients(const Field2<cplx>& F, const Field2<cplx>& G,
                                                       double tol = 1e-10);

// Residual field of dbar W - a W - b conj(W).
Field2<cplx> vekua_residual_field(const Field2<cplx>& W, const Field2<cplx>& a, const Field2<cplx>& b);

// Residual field of (dbar - a - bC)(phi f) - f dbar phi for real scalar phi.
Field2<cplx> intertwine_residual_elliptic_field(const Field2<cplx>& f, const Field2<double>& phi,
                                                const Field2<cplx>& a, const Field2<cplx>& b);

ResidualReport vekua_residual(const Field2<cplx>& W, const Field2<cplx>& a, const Field2<cplx>& b);
ResidualReport intertwine_residual_elliptic(const Field2<cplx>& f, const Field2<double>& phi,
                                            const Field2<cplx>& a, const Field2<cplx>& b);

}  // namespace bers
