#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bers/interp.hpp"

namespace bers {

// Stratified medium: permittivity varies along x only (C1 expected),
// permeability is a positive constant.
struct MediumProfile {
    std::function<double(double)> eps;
    double mu = 1.0;
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t samples = 2001;  // quadrature sampling density; forced odd

    static MediumProfile exponential(double amplitude, double rate, double mu, double x_min,
                                     double x_max, std::size_t samples = 2001);
    static MediumProfile polynomial(double amplitude, double shift, double power, double mu,
                                    double x_min, double x_max, std::size_t samples = 2001);
    static MediumProfile table(std::vector<double> xs, std::vector<double> values, double mu,
                               std::size_t samples = 2001);
    static MediumProfile vacuum(double x_min = 0.0, double x_max = 1.0, std::size_t samples = 2001);
};

// Sampled quantities of a stratified medium, plus the travel-time coordinate
//   xi = N(x) = integral of n from x_min,  N(x_min) = 0,
// with its monotone-cubic inverse x(xi). Direct values come from the profile;
// every derivative comes from an interpolant, never from user input.
class MediumTables {
  public:
    double mu() const { return mu_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double xi_max() const { return N_.back(); }

    double eps(double x) const { return eps_fn_(x); }
    double c(double x) const;  // 1 / sqrt(eps mu)
    double n(double x) const;  // sqrt(eps mu)
    double Z(double x) const;  // sqrt(mu / eps)

    double N_of_x(double x) const { return N_itp_.value(x); }
    double x_of_xi(double xi) const { return x_itp_.value(xi); }
    double C_of_xi(double xi) const { return c(x_of_xi(xi)); }
    double f_of_xi(double xi) const { return f_itp_.value(xi); }      // sqrt(C)
    double f_prime_of_xi(double xi) const { return f_itp_.derivative(xi); }

    // c'(x) / (2 c(x)) and Z'(x) / (2 Z(x)); for constant mu the two agree.
    double c1(double x) const { return c_itp_.derivative(x) / (2.0 * c(x)); }
    double z1(double x) const { return Z_itp_.derivative(x) / (2.0 * Z(x)); }

    const std::vector<double>& x_samples() const { return xs_; }
    const std::vector<double>& N_samples() const { return N_; }
    const std::vector<double>& c_samples() const { return cs_; }

  private:
    friend MediumTables build_tables(const MediumProfile&);

    std::function<double(double)> eps_fn_;
    double mu_ = 1.0;
    double x_min_ = 0.0, x_max_ = 1.0;
    std::vector<double> xs_, N_, cs_;
    MonotoneCubic N_itp_, x_itp_, c_itp_, Z_itp_, f_itp_;
};

MediumTables build_tables(const MediumProfile& profile);

// c1(x) = c'(x) / (2 c(x)), the stratified log-derivative entering the
// first-order systems.
double c_vector(const MediumTables& tables, double x);

}  // namespace bers
