#pragma once

#include <vector>

#include "bers/algebra.hpp"
#include "bers/grid.hpp"
#include "bers/medium.hpp"
#include "bers/residual.hpp"

namespace bers {

// Recursive integral tables for the generating pair (f, j/f) on a uniform
// xi grid starting at 0:
//   X^(0) = Xt^(0) = 1
//   X^(n)  = n * int_0^xi X^(n-1)  * f^{-2}   (odd n;  f^{+2} for even n)
//   Xt^(n) = n * int_0^xi Xt^(n-1) * f^{+2}   (odd n;  f^{-2} for even n)
// f is rescaled so f(0) = 1 before building; the original f(0) is kept as
// scale(). Values between nodes come from 4-point Lagrange cubics, matching
// the quadrature order.
class FormalPowerTable {
  public:
    FormalPowerTable(std::vector<double> f_samples, double h, int n_max = 6);

    int n_max() const { return n_max_; }
    double h() const { return h_; }
    std::size_t nodes() const { return f_.size(); }
    double xi_max() const { return h_ * static_cast<double>(f_.size() - 1); }
    double scale() const { return scale_; }

    double f(double xi) const;
    double f_prime(double xi) const;
    double X(int n, double xi) const;
    double Xt(int n, double xi) const;

    const std::vector<double>& f_samples() const { return f_; }
    const std::vector<double>& X_samples(int n) const;
    const std::vector<double>& Xt_samples(int n) const;

  private:
    void check_degree(int n) const;

    double h_ = 0.0;
    int n_max_ = 0;
    double scale_ = 1.0;
    std::vector<double> f_;
    std::vector<std::vector<double>> X_, Xt_;
};

FormalPowerTable build_x_tables(const MediumTables& tables, int n_max = 6,
                                std::size_t samples = 2001);

// *Z^(n)(a, 0, z) for z = xi + jt:
//   odd n:  a' sum_m C(n,m) X^(n-m)(xi) (jt)^m + j a'' sum_m C(n,m) Xt^(n-m)(xi) (jt)^m
//   even n: the two X roles swap.
Hyperbolic star_z(const FormalPowerTable& table, int n, const Hyperbolic& a, const Hyperbolic& z);

// Z^(n) = f * Re_j(*Z^(n)) + (j/f) * Im_j(*Z^(n)).
Hyperbolic z_formal_power(const FormalPowerTable& table, int n, const Hyperbolic& a,
                          const Hyperbolic& z);

// Samples Z^(n)(a,0,.) on the (xi,t) grid (axis 0 = xi, axis 1 = t).
Field2<Hyperbolic> z_formal_power_field(const FormalPowerTable& table, int n, const Hyperbolic& a,
                                        const Grid2& grid);

// Norms of dbar Z^(n) - (f'/(2f)) conj_j(Z^(n)) on the grid interior; one
// refinement level per call.
ResidualReport verify_formal_power(const FormalPowerTable& table, int n, const Hyperbolic& a,
                                   const Grid2& grid);

}  // namespace bers
