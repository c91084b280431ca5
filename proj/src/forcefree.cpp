#include "bers/forcefree.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "bers/calculus.hpp"
#include "bers/errors.hpp"
#include "bers/linalg.hpp"

namespace bers::forcefree {

namespace {

template <class V>
ResidualReport one_level(const char* op, const Field<V, 3>& r) {
    double h = 0.0;
    for (auto s : r.grid.spacing) h = std::max(h, s);
    ResidualReport rep;
    rep.op = op;
    rep.append_level(h, interior_norms(r));
    return rep;
}

}  // namespace

AlphaField AlphaField::constant(cplx a) {
    AlphaField f;
    f.fn_ = [a](const std::array<double, 3>&) { return Biquaternion(a); };
    return f;
}

AlphaField AlphaField::scalar_fn(std::function<cplx(const std::array<double, 3>&)> fn) {
    AlphaField f;
    f.fn_ = [fn = std::move(fn)](const std::array<double, 3>& x) { return Biquaternion(fn(x)); };
    return f;
}

AlphaField AlphaField::biquaternion_fn(
    std::function<Biquaternion(const std::array<double, 3>&)> fn) {
    AlphaField f;
    f.fn_ = std::move(fn);
    return f;
}

AlphaField AlphaField::sampled(Field3<Biquaternion> samples) {
    for (const auto& q : samples.values)
        for (const auto& comp : q.c)
            if (!std::isfinite(comp.real()) || !std::isfinite(comp.imag()))
                throw std::invalid_argument("AlphaField: non-finite sample");
    AlphaField f;
    f.samples_ = std::move(samples);
    return f;
}

Biquaternion AlphaField::at(const Grid3& g, std::size_t flat) const {
    if (samples_) {
        if (!(samples_->grid == g))
            throw GridMismatch("alpha samples live on a different grid than the field");
        return samples_->values[flat];
    }
    return fn_(g.point(g.unflatten(flat)));
}

Field3<Biquaternion> ff_residual_field(const Field3<Biquaternion>& B, const AlphaField& alpha) {
    auto r = moisil_theodoresco(B);
    for (std::size_t i = 0; i < r.grid.size(); ++i)
        r.values[i] += alpha.at(B.grid, i) * B.values[i];
    return r;
}

ResidualReport ff_residual(const Field3<Biquaternion>& B, const AlphaField& alpha) {
    return one_level("forcefree", ff_residual_field(B, alpha));
}

Biquaternion exp_solution_at(cplx alpha, int axis, const std::array<double, 3>& x) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("exp_solution: axis must be 1..3");
    const cplx arg = alpha * x[static_cast<std::size_t>(axis - 1)];
    return Biquaternion(std::cos(arg)) + Biquaternion::e(axis) * std::sin(arg);
}

Field3<Biquaternion> exp_solution(cplx alpha, int axis, const Grid3& grid) {
    return Field3<Biquaternion>::sample(
        grid, [&](const std::array<double, 3>& x) { return exp_solution_at(alpha, axis, x); });
}

GeneratingQuartet quartet_from_b(const Field3<Biquaternion>& b) {
    GeneratingQuartet q;
    for (auto& member : q.b) member = Field3<Biquaternion>(b.grid);
    double min_det = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.grid.size(); ++i) {
        if (bq_is_zero_divisor(b.values[i]))
            throw NotInvertible("quartet seed is a zero divisor at a grid node");
        q.b[0].values[i] = b.values[i];
        for (int k = 1; k < 4; ++k) q.b[k].values[i] = b.values[i] * Biquaternion::e(k);
        std::array<std::array<cplx, 4>, 4> m;
        for (std::size_t col = 0; col < 4; ++col)
            for (std::size_t row = 0; row < 4; ++row) m[row][col] = q.b[col].values[i].c[row];
        min_det = std::min(min_det, std::abs(det_small<cplx, 4>(m)));
    }
    q.min_abs_det = min_det;
    return q;
}

Field3<Biquaternion> second_kind_residual_field(const std::array<Field3<cplx>, 4>& phi,
                                                const GeneratingQuartet& quartet) {
    const Grid3& g = quartet.b[0].grid;
    for (const auto& p : phi)
        if (!(p.grid == g)) throw GridMismatch("phi components and quartet on different grids");
    Field3<Biquaternion> r(g);
    for (int k = 0; k < 4; ++k) {
        const auto d1 = partial(phi[k], 0);
        const auto d2 = partial(phi[k], 1);
        const auto d3 = partial(phi[k], 2);
        for (std::size_t i = 0; i < r.grid.size(); ++i) {
            Biquaternion dphi = Biquaternion::e(1) * d1.values[i];
            dphi += Biquaternion::e(2) * d2.values[i];
            dphi += Biquaternion::e(3) * d3.values[i];
            r.values[i] += dphi * quartet.b[k].values[i];
        }
    }
    return r;
}

ResidualReport second_kind_residual(const std::array<Field3<cplx>, 4>& phi,
                                    const GeneratingQuartet& quartet) {
    return one_level("forcefree-second-kind", second_kind_residual_field(phi, quartet));
}

namespace {

std::array<Field3<cplx>, 4> quotient_components(const Field3<Biquaternion>& denom,
                                                const Field3<Biquaternion>& numer) {
    if (!(denom.grid == numer.grid)) throw GridMismatch("quotient pair on different grids");
    std::array<Field3<cplx>, 4> comps;
    for (auto& c : comps) c = Field3<cplx>(denom.grid);
    for (std::size_t i = 0; i < denom.grid.size(); ++i) {
        if (bq_is_zero_divisor(denom.values[i]))
            throw NotInvertible("quotient denominator is a zero divisor at a grid node");
        const Biquaternion q = bq_inverse(denom.values[i]) * numer.values[i];
        for (int k = 0; k < 4; ++k) comps[static_cast<std::size_t>(k)].values[i] = q.c[k];
    }
    return comps;
}

}  // namespace

std::pair<ResidualReport, ResidualReport> quotient_check(const Field3<Biquaternion>& f,
                                                         const Field3<Biquaternion>& g) {
    auto rep1 = second_kind_residual(quotient_components(f, g), quartet_from_b(f));
    rep1.op = "forcefree-quotient-f-inv-g";
    auto rep2 = second_kind_residual(quotient_components(g, f), quartet_from_b(g));
    rep2.op = "forcefree-quotient-g-inv-f";
    return {rep1, rep2};
}

Field3<cplx> divergence(const Field3<Biquaternion>& B) {
    Field3<cplx> out(B.grid);
    for (std::size_t a = 0; a < 3; ++a) {
        const auto d = partial(B, a);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += d.values[i].c[a + 1];
    }
    return out;
}

ResidualReport divergence_residual(const Field3<Biquaternion>& B) {
    return one_level("forcefree-divergence", divergence(B));
}

Field3<Biquaternion> right_multiplied(const Field3<Biquaternion>& B, const Biquaternion& lambda) {
    Field3<Biquaternion> out(B.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = B.values[i] * lambda;
    return out;
}

}  // namespace bers::forcefree
