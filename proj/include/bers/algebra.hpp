#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "bers/errors.hpp"

namespace bers {

using cplx = std::complex<double>;

// Quaternions with complex components. Units e1,e2,e3 satisfy
// e1e2 = e3, e2e3 = e1, e3e1 = e2, ek^2 = -1; the complex unit i commutes
// with all ek. Doubles only; the tolerance story lives at call sites.
struct Biquaternion {
    std::array<cplx, 4> c{};  // components over {1, e1, e2, e3}

    Biquaternion() = default;
    Biquaternion(cplx s) { c[0] = s; }
    Biquaternion(double s) { c[0] = s; }
    Biquaternion(cplx q0, cplx q1, cplx q2, cplx q3) : c{q0, q1, q2, q3} {}

    // basis element e_k, k = 0..3 (e0 = 1)
    static Biquaternion e(int k) {
        Biquaternion q;
        q.c[static_cast<std::size_t>(k)] = 1.0;
        return q;
    }

    cplx scalar() const { return c[0]; }

    Biquaternion& operator+=(const Biquaternion& r) {
        for (int k = 0; k < 4; ++k) c[k] += r.c[k];
        return *this;
    }
    Biquaternion& operator-=(const Biquaternion& r) {
        for (int k = 0; k < 4; ++k) c[k] -= r.c[k];
        return *this;
    }
    Biquaternion& operator*=(cplx s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    Biquaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
};

inline Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
inline Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
inline Biquaternion operator*(Biquaternion a, cplx s) { return a *= s; }
inline Biquaternion operator*(cplx s, Biquaternion a) { return a *= s; }
inline Biquaternion operator*(Biquaternion a, double s) { return a *= cplx(s); }
inline Biquaternion operator*(double s, Biquaternion a) { return a *= cplx(s); }

inline Biquaternion operator*(const Biquaternion& p, const Biquaternion& q) {
    const auto& a = p.c;
    const auto& b = q.c;
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3],
            a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1]};
}

// Quaternionic conjugation: q0 - q1e1 - q2e2 - q3e3.
inline Biquaternion bq_conj(const Biquaternion& q) {
    return {q.c[0], -q.c[1], -q.c[2], -q.c[3]};
}

// Componentwise complex conjugation: Re q - i Im q. Fixes e1,e2,e3, flips i.
inline Biquaternion bq_complex_conj(const Biquaternion& q) {
    return {std::conj(q.c[0]), std::conj(q.c[1]), std::conj(q.c[2]), std::conj(q.c[3])};
}

// q * conj(q) = q0^2 + q1^2 + q2^2 + q3^2, a complex scalar.
inline cplx bq_qqbar(const Biquaternion& q) {
    return q.c[0] * q.c[0] + q.c[1] * q.c[1] + q.c[2] * q.c[2] + q.c[3] * q.c[3];
}

inline double bq_norm2(const Biquaternion& q) {
    return std::norm(q.c[0]) + std::norm(q.c[1]) + std::norm(q.c[2]) + std::norm(q.c[3]);
}

inline double bq_norm(const Biquaternion& q) { return std::sqrt(bq_norm2(q)); }

// Invertible iff q*conj(q) is away from zero; the test is scale-invariant.
inline bool bq_is_zero_divisor(const Biquaternion& q, double tol = 1e-12) {
    return std::abs(bq_qqbar(q)) < tol * (1.0 + bq_norm2(q));
}

inline Biquaternion bq_inverse(const Biquaternion& q) {
    const cplx d = bq_qqbar(q);
    if (bq_is_zero_divisor(q)) throw ZeroDivisor("biquaternion has no inverse: |q qbar| below threshold");
    return bq_conj(q) * (cplx(1.0) / d);
}

// Right multiplication operator M^p : q -> q p. Kept as an object so operator
// composition (M^b M^c = M^{cb}) can be tested as stated.
struct RightMul {
    Biquaternion p;
    Biquaternion operator()(const Biquaternion& q) const { return q * p; }
};

inline RightMul right_mul(const Biquaternion& p) { return RightMul{p}; }

// ---------------------------------------------------------------------------
// Hyperbolic (split-complex) numbers u + vj, j^2 = +1.

struct Hyperbolic {
    double u = 0.0;
    double v = 0.0;

    Hyperbolic() = default;
    Hyperbolic(double re) : u(re) {}
    Hyperbolic(double re, double im) : u(re), v(im) {}

    static Hyperbolic j() { return {0.0, 1.0}; }

    Hyperbolic& operator+=(const Hyperbolic& r) {
        u += r.u;
        v += r.v;
        return *this;
    }
    Hyperbolic& operator-=(const Hyperbolic& r) {
        u -= r.u;
        v -= r.v;
        return *this;
    }
    Hyperbolic operator-() const { return {-u, -v}; }
};

inline Hyperbolic operator+(Hyperbolic a, const Hyperbolic& b) { return a += b; }
inline Hyperbolic operator-(Hyperbolic a, const Hyperbolic& b) { return a -= b; }
inline Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b) {
    return {a.u * b.u + a.v * b.v, a.u * b.v + a.v * b.u};
}
inline Hyperbolic operator*(const Hyperbolic& a, double s) { return {a.u * s, a.v * s}; }
inline Hyperbolic operator*(double s, const Hyperbolic& a) { return a * s; }

inline Hyperbolic hyp_conj(const Hyperbolic& a) { return {a.u, -a.v}; }
inline double hyp_norm(const Hyperbolic& a) { return std::hypot(a.u, a.v); }

// u^2 - v^2; vanishes exactly on the zero-divisor cone u = ±v.
inline double hyp_modulus2(const Hyperbolic& a) { return a.u * a.u - a.v * a.v; }

// ---------------------------------------------------------------------------
// Bicomplex numbers: commutative span of {1, i, e1, ie1}, i^2 = e1^2 = -1,
// (ie1)^2 = +1. Stored as four reals over that basis.

struct Bicomplex {
    std::array<double, 4> w{};  // components over {1, i, e1, ie1}

    Bicomplex() = default;
    Bicomplex(double a, double b, double c, double d) : w{a, b, c, d} {}
    explicit Bicomplex(cplx z1, cplx z2 = 0.0)
        : w{z1.real(), z1.imag(), z2.real(), z2.imag()} {}

    // z1 + z2 e1 with z1, z2 in C(i)
    cplx z1() const { return {w[0], w[1]}; }
    cplx z2() const { return {w[2], w[3]}; }

    Bicomplex& operator+=(const Bicomplex& r) {
        for (int k = 0; k < 4; ++k) w[k] += r.w[k];
        return *this;
    }
    Bicomplex& operator-=(const Bicomplex& r) {
        for (int k = 0; k < 4; ++k) w[k] -= r.w[k];
        return *this;
    }
    Bicomplex operator-() const { return {-w[0], -w[1], -w[2], -w[3]}; }
};

inline Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
inline Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
inline Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    // (z1 + z2 e1)(y1 + y2 e1) = (z1 y1 - z2 y2) + (z1 y2 + z2 y1) e1
    return Bicomplex(a.z1() * b.z1() - a.z2() * b.z2(), a.z1() * b.z2() + a.z2() * b.z1());
}
inline Bicomplex operator*(const Bicomplex& a, double s) {
    return {a.w[0] * s, a.w[1] * s, a.w[2] * s, a.w[3] * s};
}
inline Bicomplex operator*(double s, const Bicomplex& a) { return a * s; }

// Conjugation of the i unit: i -> -i (so ie1 -> -ie1).
inline Bicomplex bicomplex_conj_i(const Bicomplex& a) {
    return {a.w[0], -a.w[1], a.w[2], -a.w[3]};
}

// Conjugation with respect to j = ie1: W = P + Q j with P,Q in span{1,e1}
// maps to P - Q j. On these coordinates it negates the same pair (i, ie1)
// as conj_i, because i = -j e1; the two conjugations coincide here.
inline Bicomplex bicomplex_conj_j(const Bicomplex& a) { return bicomplex_conj_i(a); }

inline double bicomplex_norm(const Bicomplex& a) {
    return std::sqrt(a.w[0] * a.w[0] + a.w[1] * a.w[1] + a.w[2] * a.w[2] + a.w[3] * a.w[3]);
}

// W = w1 + w2 e1 with w1, w2 hyperbolic in j = ie1:
//   W = a + bi + ce1 + d(ie1)  =>  w1 = a + dj,  w2 = c - bj.
inline std::pair<Hyperbolic, Hyperbolic> bicomplex_split(const Bicomplex& W) {
    return {Hyperbolic{W.w[0], W.w[3]}, Hyperbolic{W.w[2], -W.w[1]}};
}

inline Bicomplex bicomplex_join(const Hyperbolic& w1, const Hyperbolic& w2) {
    return {w1.u, -w2.v, w2.u, w1.v};
}

// j = ie1 as a bicomplex constant; left multiplication by it is used when a
// hyperbolic-plane operator acts on bicomplex fields.
inline Bicomplex bicomplex_j() { return {0.0, 0.0, 0.0, 1.0}; }

}  // namespace bers
