#include "bers/formal_powers.hpp"

#include <cmath>
#include <stdexcept>

#include "bers/calculus.hpp"
#include "bers/errors.hpp"
#include "bers/interp.hpp"

namespace bers {

FormalPowerTable::FormalPowerTable(std::vector<double> f_samples, double h, int n_max)
    : h_(h), n_max_(n_max), f_(std::move(f_samples)) {
    if (f_.size() < 5) throw GridTooSmall("FormalPowerTable: need >= 5 f samples");
    if (!(h > 0.0)) throw std::invalid_argument("FormalPowerTable: step must be positive");
    if (n_max < 0) throw DegreeOutOfRange("FormalPowerTable: n_max < 0");
    if (!(f_.front() > 0.0)) throw NonPositiveF("FormalPowerTable: f(0) <= 0");
    scale_ = f_.front();
    for (auto& v : f_) {
        v /= scale_;
        if (!(v > 0.0)) throw NonPositiveF("FormalPowerTable: f <= 0 at a sample");
    }

    const std::size_t m = f_.size();
    X_.assign(static_cast<std::size_t>(n_max) + 1, std::vector<double>(m, 1.0));
    Xt_ = X_;
    std::vector<double> integrand(m);
    for (int n = 1; n <= n_max; ++n) {
        const bool odd = (n % 2) != 0;
        for (std::size_t k = 0; k < m; ++k) {
            const double f2 = f_[k] * f_[k];
            integrand[k] = X_[n - 1][k] * (odd ? 1.0 / f2 : f2);
        }
        X_[n] = cumulative_simpson(integrand, h_);
        for (auto& v : X_[n]) v *= static_cast<double>(n);
        for (std::size_t k = 0; k < m; ++k) {
            const double f2 = f_[k] * f_[k];
            integrand[k] = Xt_[n - 1][k] * (odd ? f2 : 1.0 / f2);
        }
        Xt_[n] = cumulative_simpson(integrand, h_);
        for (auto& v : Xt_[n]) v *= static_cast<double>(n);
    }
}

void FormalPowerTable::check_degree(int n) const {
    if (n < 0 || n > n_max_) throw DegreeOutOfRange("formal power degree outside the built table");
}

double FormalPowerTable::f(double xi) const { return uniform_cubic_value(f_, 0.0, h_, xi); }
double FormalPowerTable::f_prime(double xi) const { return uniform_cubic_derivative(f_, 0.0, h_, xi); }

double FormalPowerTable::X(int n, double xi) const {
    check_degree(n);
    return uniform_cubic_value(X_[static_cast<std::size_t>(n)], 0.0, h_, xi);
}

double FormalPowerTable::Xt(int n, double xi) const {
    check_degree(n);
    return uniform_cubic_value(Xt_[static_cast<std::size_t>(n)], 0.0, h_, xi);
}

const std::vector<double>& FormalPowerTable::X_samples(int n) const {
    check_degree(n);
    return X_[static_cast<std::size_t>(n)];
}

const std::vector<double>& FormalPowerTable::Xt_samples(int n) const {
    check_degree(n);
    return Xt_[static_cast<std::size_t>(n)];
}

FormalPowerTable build_x_tables(const MediumTables& tables, int n_max, std::size_t samples) {
    if (samples < 5) throw GridTooSmall("build_x_tables: need >= 5 samples");
    const double h = tables.xi_max() / static_cast<double>(samples - 1);
    std::vector<double> f(samples);
    for (std::size_t k = 0; k < samples; ++k)
        f[k] = tables.f_of_xi(h * static_cast<double>(k));
    return FormalPowerTable(std::move(f), h, n_max);
}

namespace {

double binomial(int n, int m) {
    double r = 1.0;
    for (int k = 1; k <= m; ++k) r = r * static_cast<double>(n - m + k) / static_cast<double>(k);
    return r;
}

}  // namespace

Hyperbolic star_z(const FormalPowerTable& table, int n, const Hyperbolic& a, const Hyperbolic& z) {
    const double xi = z.u;
    const double t = z.v;
    Hyperbolic sx;   // sum with X coefficients
    Hyperbolic sxt;  // sum with Xt coefficients
    double tpow = 1.0;
    for (int m = 0; m <= n; ++m) {
        const double w = binomial(n, m) * tpow;
        const Hyperbolic jm = (m % 2) ? Hyperbolic{0.0, w} : Hyperbolic{w, 0.0};  // (jt)^m weight
        sx += jm * table.X(n - m, xi);
        sxt += jm * table.Xt(n - m, xi);
        tpow *= t;
    }
    const bool odd = (n % 2) != 0;
    const Hyperbolic& first = odd ? sx : sxt;
    const Hyperbolic& second = odd ? sxt : sx;
    return first * a.u + Hyperbolic::j() * (second * a.v);
}

Hyperbolic z_formal_power(const FormalPowerTable& table, int n, const Hyperbolic& a,
                          const Hyperbolic& z) {
    const Hyperbolic s = star_z(table, n, a, z);
    const double f = table.f(z.u);
    return {f * s.u, s.v / f};
}

Field2<Hyperbolic> z_formal_power_field(const FormalPowerTable& table, int n, const Hyperbolic& a,
                                        const Grid2& grid) {
    return Field2<Hyperbolic>::sample(
        grid, [&](const std::array<double, 2>& p) {
            return z_formal_power(table, n, a, Hyperbolic{p[0], p[1]});
        });
}

ResidualReport verify_formal_power(const FormalPowerTable& table, int n, const Hyperbolic& a,
                                   const Grid2& grid) {
    const auto Z = z_formal_power_field(table, n, a, grid);
    auto r = dbar_hyperbolic(Z);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const double xi = grid.coord(0, grid.unflatten(i)[0]);
        const double lam = table.f_prime(xi) / (2.0 * table.f(xi));
        r.values[i] -= hyp_conj(Z.values[i]) * lam;
    }
    ResidualReport rep;
    rep.op = "formal-power-vekua";
    rep.append_level(std::max(grid.spacing[0], grid.spacing[1]), interior_norms(r));
    return rep;
}

}  // namespace bers
