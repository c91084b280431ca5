#include "bers/medium.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include "bers/errors.hpp"

namespace bers {

MediumProfile MediumProfile::exponential(double amplitude, double rate, double mu, double x_min,
                                         double x_max, std::size_t samples) {
    MediumProfile p;
    p.eps = [amplitude, rate](double x) { return amplitude * std::exp(rate * x); };
    p.mu = mu;
    p.x_min = x_min;
    p.x_max = x_max;
    p.samples = samples;
    return p;
}

MediumProfile MediumProfile::polynomial(double amplitude, double shift, double power, double mu,
                                        double x_min, double x_max, std::size_t samples) {
    MediumProfile p;
    p.eps = [amplitude, shift, power](double x) { return amplitude * std::pow(x + shift, power); };
    p.mu = mu;
    p.x_min = x_min;
    p.x_max = x_max;
    p.samples = samples;
    return p;
}

MediumProfile MediumProfile::table(std::vector<double> xs, std::vector<double> values, double mu,
                                   std::size_t samples) {
    if (xs.size() != values.size() || xs.size() < 4)
        throw std::invalid_argument("MediumProfile::table: need >= 4 matching samples");
    MediumProfile p;
    p.x_min = xs.front();
    p.x_max = xs.back();
    auto itp = std::make_shared<MonotoneCubic>(std::move(xs), std::move(values));
    p.eps = [itp](double x) { return itp->value(x); };
    p.mu = mu;
    p.samples = samples;
    return p;
}

MediumProfile MediumProfile::vacuum(double x_min, double x_max, std::size_t samples) {
    return exponential(1.0, 0.0, 1.0, x_min, x_max, samples);
}

double MediumTables::c(double x) const { return 1.0 / std::sqrt(eps_fn_(x) * mu_); }
double MediumTables::n(double x) const { return std::sqrt(eps_fn_(x) * mu_); }
double MediumTables::Z(double x) const { return std::sqrt(mu_ / eps_fn_(x)); }

MediumTables build_tables(const MediumProfile& profile) {
    if (!(profile.mu > 0.0)) throw std::invalid_argument("build_tables: mu must be positive");
    if (!(profile.x_max > profile.x_min))
        throw std::invalid_argument("build_tables: empty x interval");
    std::size_t m = std::max<std::size_t>(profile.samples, 5);
    if (m % 2 == 0) ++m;  // keep Simpson pairs whole

    MediumTables t;
    t.eps_fn_ = profile.eps;
    t.mu_ = profile.mu;
    t.x_min_ = profile.x_min;
    t.x_max_ = profile.x_max;

    const double h = (profile.x_max - profile.x_min) / static_cast<double>(m - 1);
    t.xs_.resize(m);
    t.cs_.resize(m);
    std::vector<double> ns(m), Zs(m), fs(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double x = profile.x_min + h * static_cast<double>(k);
        const double e = profile.eps(x);
        if (!(e > 0.0)) throw NonPositivePermittivity("build_tables: eps <= 0 at a sample");
        t.xs_[k] = x;
        ns[k] = std::sqrt(e * profile.mu);
        t.cs_[k] = 1.0 / ns[k];
        Zs[k] = std::sqrt(profile.mu / e);
    }
    t.N_ = cumulative_simpson(ns, h);
    for (std::size_t k = 0; k + 1 < m; ++k)
        if (!(t.N_[k + 1] > t.N_[k]))
            throw NonMonotone("build_tables: travel-time coordinate not strictly increasing");
    for (std::size_t k = 0; k < m; ++k) fs[k] = std::sqrt(t.cs_[k]);

    t.N_itp_ = MonotoneCubic(t.xs_, t.N_);
    t.x_itp_ = MonotoneCubic(t.N_, t.xs_);
    t.c_itp_ = MonotoneCubic(t.xs_, t.cs_);
    t.Z_itp_ = MonotoneCubic(t.xs_, Zs);
    t.f_itp_ = MonotoneCubic(t.N_, fs);
    return t;
}

double c_vector(const MediumTables& tables, double x) { return tables.c1(x); }

}  // namespace bers
