#include <doctest.h>

#include <cmath>
#include <random>

#include "bers/algebra.hpp"
#include "bers/errors.hpp"

using namespace bers;

namespace {

Biquaternion random_bq(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Biquaternion q;
    for (auto& c : q.c) c = cplx(d(eng), d(eng));
    return q;
}

const cplx kI(0.0, 1.0);

}  // namespace

TEST_CASE("quaternion unit table") {
    const Biquaternion e1 = Biquaternion::e(1), e2 = Biquaternion::e(2), e3 = Biquaternion::e(3);
    CHECK(bq_norm(e1 * e2 - e3) == 0.0);
    CHECK(bq_norm(e2 * e3 - e1) == 0.0);
    CHECK(bq_norm(e3 * e1 - e2) == 0.0);
    CHECK(bq_norm(e2 * e1 + e3) == 0.0);
    CHECK(bq_norm(e3 * e2 + e1) == 0.0);
    CHECK(bq_norm(e1 * e3 + e2) == 0.0);
    for (int k = 1; k <= 3; ++k) {
        const Biquaternion ek = Biquaternion::e(k);
        CHECK(bq_norm(ek * ek + Biquaternion(1.0)) == 0.0);
    }
    // the complex unit commutes with every quaternionic unit
    CHECK(bq_norm((e1 * kI) * e2 - (e1 * e2) * kI) == 0.0);
}

TEST_CASE("conjugation negates the vector part and reverses products") {
    std::mt19937_64 eng(42);
    const Biquaternion q = random_bq(eng);
    const Biquaternion qb = bq_conj(q);
    CHECK(qb.c[0] == q.c[0]);
    for (int k = 1; k < 4; ++k) CHECK(qb.c[k] == -q.c[k]);
    for (int i = 0; i < 100; ++i) {
        const Biquaternion p = random_bq(eng), r = random_bq(eng);
        CHECK(bq_norm(bq_conj(p * r) - bq_conj(r) * bq_conj(p)) < 1e-14);
    }
}

TEST_CASE("componentwise complex conjugation") {
    const Biquaternion q(cplx(1, 2), cplx(3, -4), cplx(0, 5), cplx(-6, 7));
    const Biquaternion qs = bq_complex_conj(q);
    for (int k = 0; k < 4; ++k) CHECK(qs.c[k] == std::conj(q.c[k]));
}

TEST_CASE("q qbar is a complex scalar equal to bq_qqbar") {
    std::mt19937_64 eng(7);
    for (int i = 0; i < 200; ++i) {
        const Biquaternion q = random_bq(eng);
        const Biquaternion prod = q * bq_conj(q);
        CHECK(std::abs(prod.c[1]) < 1e-15);
        CHECK(std::abs(prod.c[2]) < 1e-15);
        CHECK(std::abs(prod.c[3]) < 1e-15);
        CHECK(std::abs(prod.c[0] - bq_qqbar(q)) < 1e-15);
    }
}

TEST_CASE("zero divisors are detected and refuse inversion") {
    Biquaternion q(1.0);
    q.c[1] = kI;  // 1 + i e1, qqbar = 0
    CHECK(bq_is_zero_divisor(q));
    CHECK(std::abs(bq_qqbar(q)) == 0.0);
    CHECK_THROWS_AS((void)bq_inverse(q), ZeroDivisor);

    Biquaternion p = q;
    p.c[0] = 2.0;  // shifted scalar restores invertibility
    CHECK_FALSE(bq_is_zero_divisor(p));
    const Biquaternion one(1.0);
    CHECK(bq_norm(p * bq_inverse(p) - one) < 1e-14);
    CHECK(bq_norm(bq_inverse(p) * p - one) < 1e-14);
}

TEST_CASE("right multiplication operators compose in reverse order") {
    std::mt19937_64 eng(3);
    for (int i = 0; i < 50; ++i) {
        const Biquaternion b = random_bq(eng), c = random_bq(eng), q = random_bq(eng);
        const RightMul Mb = right_mul(b), Mc = right_mul(c), Mcb = right_mul(c * b);
        CHECK(bq_norm(Mb(Mc(q)) - Mcb(q)) < 1e-14);
    }
}

TEST_CASE("hyperbolic unit squares to one") {
    const Hyperbolic j = Hyperbolic::j();
    const Hyperbolic jj = j * j;
    CHECK(jj.u == 1.0);
    CHECK(jj.v == 0.0);
    const Hyperbolic z{1.0, 1.0};  // 1 + j has vanishing modulus
    CHECK(hyp_modulus2(z) == 0.0);
    CHECK(hyp_modulus2(hyp_conj(z) * z) == 0.0);
    const Hyperbolic w{3.0, 2.0};
    CHECK(hyp_modulus2(w) == doctest::Approx(5.0));
    const Hyperbolic wc = hyp_conj(w) * w;  // (u^2 - v^2) + 0 j
    CHECK(wc.u == doctest::Approx(5.0));
    CHECK(wc.v == doctest::Approx(0.0));
}

TEST_CASE("bicomplex split and join: frozen example") {
    // 2 + 3i + 5 e1 + 7 i e1  ->  (2 + 7j, 5 - 3j)
    const Bicomplex w{2.0, 3.0, 5.0, 7.0};
    const auto [w1, w2] = bicomplex_split(w);
    CHECK(w1.u == 2.0);
    CHECK(w1.v == 7.0);
    CHECK(w2.u == 5.0);
    CHECK(w2.v == -3.0);
    const Bicomplex back = bicomplex_join(w1, w2);
    CHECK(bicomplex_norm(back - w) == 0.0);
}

TEST_CASE("bicomplex split respects products") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Bicomplex w{d(eng), d(eng), d(eng), d(eng)};
        const Bicomplex v{d(eng), d(eng), d(eng), d(eng)};
        const auto [w1, w2] = bicomplex_split(w);
        const auto [v1, v2] = bicomplex_split(v);
        const auto [p1, p2] = bicomplex_split(w * v);
        CHECK(hyp_norm(p1 - (w1 * v1 - w2 * v2)) < 1e-14);
        CHECK(hyp_norm(p2 - (w1 * v2 + w2 * v1)) < 1e-14);
        // commutative algebra
        CHECK(bicomplex_norm(w * v - v * w) == 0.0);
    }
}

TEST_CASE("the two bicomplex conjugations coincide") {
    std::mt19937_64 eng(13);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Bicomplex w{d(eng), d(eng), d(eng), d(eng)};
        CHECK(bicomplex_norm(bicomplex_conj_i(w) - bicomplex_conj_j(w)) == 0.0);
    }
    // and they invert the sign of both imaginary slots
    const Bicomplex w{1.0, 2.0, 3.0, 4.0};
    const Bicomplex c = bicomplex_conj_i(w);
    CHECK(c.w[0] == 1.0);
    CHECK(c.w[1] == -2.0);
    CHECK(c.w[2] == 3.0);
    CHECK(c.w[3] == -4.0);
}

TEST_CASE("bicomplex complex views multiply like a pair of complex numbers") {
    const Bicomplex w{1.0, 2.0, 3.0, 4.0};
    const Bicomplex v{-2.0, 1.0, 0.5, -1.0};
    const Bicomplex p = w * v;
    // z1/z2 views: w = z1 + z2 e1 with z1 = w0 + i w1, z2 = w2 + i w3
    const cplx pz1 = w.z1() * v.z1() - w.z2() * v.z2();
    const cplx pz2 = w.z1() * v.z2() + w.z2() * v.z1();
    CHECK(std::abs(p.z1() - pz1) < 1e-15);
    CHECK(std::abs(p.z2() - pz2) < 1e-15);
}

TEST_CASE("randomized product identities at tight tolerance") {
    std::mt19937_64 eng(99);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Biquaternion p = random_bq(eng), q = random_bq(eng), r = random_bq(eng);
        const double scale = 1.0 + bq_norm(p) * bq_norm(q) * bq_norm(r);
        worst = std::max(worst, bq_norm((p * q) * r - p * (q * r)) / scale);
        worst = std::max(worst, bq_norm(p * (q + r) - (p * q + p * r)) / scale);
    }
    CHECK(worst < 1e-12);
}
