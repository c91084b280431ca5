#include "bers/dirac.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bers/calculus.hpp"
#include "bers/errors.hpp"
#include "bers/linalg.hpp"

namespace bers::dirac {

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

double min_component_det(const std::array<const Biquaternion*, 4>& q) {
    std::array<std::array<cplx, 4>, 4> m;
    for (std::size_t col = 0; col < 4; ++col)
        for (std::size_t row = 0; row < 4; ++row) m[row][col] = q[col]->c[row];
    return std::abs(det_small<cplx, 4>(m));
}

}  // namespace

Biquaternion DiracData::b_at(const std::array<double, 3>& x) const {
    const double p = phi ? phi(x) : 0.0;
    return Biquaternion::e(1) * cplx(0.0, -(p + omega)) + Biquaternion::e(2) * (-m);
}

Biquaternion DiracData::a_at(const std::array<double, 3>& x) const {
    return a ? a(x) : Biquaternion();
}

Field3<Biquaternion> dirac_residual_field(const Field3<Biquaternion>& W, const DiracData& data) {
    auto r = moisil_theodoresco(W);
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        const auto x = W.grid.point(W.grid.unflatten(i));
        r.values[i] += data.a_at(x) * W.values[i] + W.values[i] * data.b_at(x);
    }
    return r;
}

ResidualReport dirac_residual(const Field3<Biquaternion>& W, const DiracData& data) {
    return one_level("dirac", dirac_residual_field(W, data));
}

namespace {

Biquaternion ode_rhs(const DiracData& data, double x1, const Biquaternion& W) {
    return Biquaternion::e(1) * (W * data.b_at({x1, 0.0, 0.0}));
}

Biquaternion rk4_step(const DiracData& data, double x1, double h, const Biquaternion& W) {
    const Biquaternion k1 = ode_rhs(data, x1, W);
    const Biquaternion k2 = ode_rhs(data, x1 + 0.5 * h, W + k1 * (0.5 * h));
    const Biquaternion k3 = ode_rhs(data, x1 + 0.5 * h, W + k2 * (0.5 * h));
    const Biquaternion k4 = ode_rhs(data, x1 + h, W + k3 * h);
    return W + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
}

}  // namespace

OdeTrajectories ode_oracle_solutions(const DiracData& data, double x_max, std::size_t nodes,
                                     double tol) {
    if (nodes < 2) throw std::invalid_argument("ode_oracle_solutions: need at least 2 nodes");
    if (!(x_max > 0.0)) throw std::invalid_argument("ode_oracle_solutions: x_max must be positive");
    const double h = x_max / static_cast<double>(nodes - 1);
    OdeTrajectories traj;
    traj.x.resize(nodes);
    for (std::size_t j = 0; j < nodes; ++j) traj.x[j] = h * static_cast<double>(j);
    for (int k = 0; k < 4; ++k) {
        auto& W = traj.W[static_cast<std::size_t>(k)];
        W.resize(nodes);
        W[0] = Biquaternion::e(k);
        for (std::size_t j = 0; j + 1 < nodes; ++j) {
            const double x1 = traj.x[j];
            const Biquaternion full = rk4_step(data, x1, h, W[j]);
            const Biquaternion half = rk4_step(data, x1 + 0.5 * h, 0.5 * h,
                                               rk4_step(data, x1, 0.5 * h, W[j]));
            const double err = bq_norm(full - half) / 15.0;
            if (err > tol * (1.0 + bq_norm(W[j])))
                throw StepTooLarge("ode_oracle_solutions: local error estimate above tolerance");
            W[j + 1] = full;
        }
    }
    return traj;
}

std::array<Field3<Biquaternion>, 4> extend_quartet(const OdeTrajectories& traj, const Grid3& grid) {
    const std::size_t n = traj.x.size();
    if (grid.count[0] != n) throw GridMismatch("grid axis 0 node count differs from trajectory");
    const double slack = 1e-12 * (1.0 + std::abs(traj.x.back()));
    if (std::abs(grid.origin[0] - traj.x.front()) > slack ||
        (n > 1 && std::abs(grid.spacing[0] - (traj.x[1] - traj.x[0])) > slack))
        throw GridMismatch("grid axis 0 nodes differ from trajectory nodes");
    std::array<Field3<Biquaternion>, 4> out;
    for (int k = 0; k < 4; ++k) {
        auto& f = out[static_cast<std::size_t>(k)];
        f = Field3<Biquaternion>(grid);
        for (std::size_t i = 0; i < grid.size(); ++i)
            f.values[i] = traj.W[static_cast<std::size_t>(k)][grid.unflatten(i)[0]];
    }
    return out;
}

double quartet_independence(const std::array<std::vector<Biquaternion>, 4>& F) {
    const std::size_t n = F[0].size();
    for (const auto& f : F)
        if (f.size() != n) throw GridMismatch("quartet trajectories of different length");
    double min_det = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
        min_det = std::min(min_det, min_component_det({&F[0][j], &F[1][j], &F[2][j], &F[3][j]}));
    return min_det;
}

double quartet_independence(const std::array<Field3<Biquaternion>, 4>& F) {
    for (const auto& f : F)
        if (!(f.grid == F[0].grid)) throw GridMismatch("quartet members on different grids");
    double min_det = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < F[0].grid.size(); ++i)
        min_det = std::min(min_det, min_component_det({&F[0].values[i], &F[1].values[i],
                                                       &F[2].values[i], &F[3].values[i]}));
    return min_det;
}

Field3<Biquaternion> second_kind_residual_field(const std::array<Field3<cplx>, 4>& phi,
                                                const std::array<Field3<Biquaternion>, 4>& F) {
    if (quartet_independence(F) <= 1e-10)
        throw DependentSet("second-kind quartet fails the independence tolerance");
    const Grid3& g = F[0].grid;
    for (const auto& p : phi)
        if (!(p.grid == g)) throw GridMismatch("phi components and quartet on different grids");
    Field3<Biquaternion> r(g);
    for (int k = 0; k < 4; ++k) {
        const auto d1 = partial(phi[static_cast<std::size_t>(k)], 0);
        const auto d2 = partial(phi[static_cast<std::size_t>(k)], 1);
        const auto d3 = partial(phi[static_cast<std::size_t>(k)], 2);
        for (std::size_t i = 0; i < r.grid.size(); ++i) {
            Biquaternion dphi = Biquaternion::e(1) * d1.values[i];
            dphi += Biquaternion::e(2) * d2.values[i];
            dphi += Biquaternion::e(3) * d3.values[i];
            r.values[i] += dphi * F[static_cast<std::size_t>(k)].values[i];
        }
    }
    return r;
}

ResidualReport second_kind_residual(const std::array<Field3<cplx>, 4>& phi,
                                    const std::array<Field3<Biquaternion>, 4>& F) {
    return one_level("dirac-second-kind", second_kind_residual_field(phi, F));
}

}  // namespace bers::dirac
