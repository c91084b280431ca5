#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "bers/algebra.hpp"
#include "bers/errors.hpp"

namespace bers {

// Uniform tensor-product grid in D dimensions. Row-major storage, last axis
// fastest. Axis meaning is fixed by each operator's documentation:
//   2D: axis 0 = xi (or x), axis 1 = t (or y)
//   3D: axes = x1, x2, x3
//   4D: axis 0 = t, axes 1..3 = x1, x2, x3
template <std::size_t D>
struct Grid {
    std::array<double, D> origin{};
    std::array<double, D> spacing{};
    std::array<std::size_t, D> count{};

    std::size_t size() const {
        std::size_t n = 1;
        for (auto c : count) n *= c;
        return n;
    }

    double coord(std::size_t axis, std::size_t idx) const {
        return origin[axis] + spacing[axis] * static_cast<double>(idx);
    }

    std::array<std::size_t, D> unflatten(std::size_t flat) const {
        std::array<std::size_t, D> idx{};
        for (std::size_t a = D; a-- > 0;) {
            idx[a] = flat % count[a];
            flat /= count[a];
        }
        return idx;
    }

    std::size_t flatten(const std::array<std::size_t, D>& idx) const {
        std::size_t flat = 0;
        for (std::size_t a = 0; a < D; ++a) flat = flat * count[a] + idx[a];
        return flat;
    }

    std::array<double, D> point(const std::array<std::size_t, D>& idx) const {
        std::array<double, D> x{};
        for (std::size_t a = 0; a < D; ++a) x[a] = coord(a, idx[a]);
        return x;
    }

    bool operator==(const Grid&) const = default;
};

using Grid2 = Grid<2>;
using Grid3 = Grid<3>;
using Grid4 = Grid<4>;

inline Grid2 make_grid2(double a0, double b0, std::size_t n0, double a1, double b1, std::size_t n1) {
    Grid2 g;
    g.origin = {a0, a1};
    g.count = {n0, n1};
    g.spacing = {(b0 - a0) / static_cast<double>(n0 - 1), (b1 - a1) / static_cast<double>(n1 - 1)};
    return g;
}

inline Grid3 make_grid3(double a, double b, std::size_t n) {
    Grid3 g;
    g.origin = {a, a, a};
    const double h = (b - a) / static_cast<double>(n - 1);
    g.spacing = {h, h, h};
    g.count = {n, n, n};
    return g;
}

template <class V, std::size_t D>
struct Field {
    Grid<D> grid;
    std::vector<V> values;

    Field() = default;
    explicit Field(const Grid<D>& g) : grid(g), values(g.size()) {}

    V& operator[](std::size_t flat) { return values[flat]; }
    const V& operator[](std::size_t flat) const { return values[flat]; }

    template <class Fn>
    static Field sample(const Grid<D>& g, Fn&& fn) {
        Field f(g);
        const std::size_t n = g.size();
        for (std::size_t i = 0; i < n; ++i) f.values[i] = fn(g.point(g.unflatten(i)));
        return f;
    }
};

template <class V>
using Field2 = Field<V, 2>;
template <class V>
using Field3 = Field<V, 3>;
template <class V>
using Field4 = Field<V, 4>;

// value_norm: Euclidean magnitude of one node value, any supported type.
inline double value_norm(double x) { return std::abs(x); }
inline double value_norm(const cplx& z) { return std::abs(z); }
inline double value_norm(const Hyperbolic& h) { return hyp_norm(h); }
inline double value_norm(const Bicomplex& b) { return bicomplex_norm(b); }
inline double value_norm(const Biquaternion& q) { return bq_norm(q); }
template <class V, std::size_t N>
double value_norm(const std::array<V, N>& a) {
    double s = 0.0;
    for (const auto& x : a) {
        const double n = value_norm(x);
        s += n * n;
    }
    return std::sqrt(s);
}

struct Norms {
    double max_norm = 0.0;
    double l2_norm = 0.0;  // root mean square over the measured nodes
};

template <class V, std::size_t D>
bool is_interior(const Grid<D>& g, std::size_t flat) {
    const auto idx = g.unflatten(flat);
    for (std::size_t a = 0; a < D; ++a)
        if (idx[a] == 0 || idx[a] + 1 == g.count[a]) return false;
    return true;
}

// Norms over interior nodes only, keeping one-sided boundary stencils out of
// the measurement.
template <class V, std::size_t D>
Norms interior_norms(const Field<V, D>& f) {
    Norms n;
    double sum2 = 0.0;
    std::size_t m = 0;
    const std::size_t total = f.grid.size();
    for (std::size_t i = 0; i < total; ++i) {
        if (!is_interior<V>(f.grid, i)) continue;
        const double v = value_norm(f.values[i]);
        if (v > n.max_norm) n.max_norm = v;
        sum2 += v * v;
        ++m;
    }
    n.l2_norm = m ? std::sqrt(sum2 / static_cast<double>(m)) : 0.0;
    return n;
}

template <class V, std::size_t D>
Norms full_norms(const Field<V, D>& f) {
    Norms n;
    double sum2 = 0.0;
    for (const auto& v : f.values) {
        const double x = value_norm(v);
        if (x > n.max_norm) n.max_norm = x;
        sum2 += x * x;
    }
    n.l2_norm = f.values.empty() ? 0.0 : std::sqrt(sum2 / static_cast<double>(f.values.size()));
    return n;
}

}  // namespace bers
