#pragma once

#include <array>
#include <functional>
#include <vector>

#include "bers/algebra.hpp"
#include "bers/grid.hpp"
#include "bers/residual.hpp"

namespace bers::dirac {

// Fixed-energy data: mass m >= 0, energy omega, electric potential phi(x),
// magnetic potential a(x) (purely vectorial). The right factor
//   b(x) = -i (phi(x) + omega) e1 - m e2
// is recomputed from these on every use, never stored.
struct DiracData {
    double m = 0.0;
    double omega = 0.0;
    std::function<double(const std::array<double, 3>&)> phi;      // empty means 0
    std::function<Biquaternion(const std::array<double, 3>&)> a;  // empty means 0

    Biquaternion b_at(const std::array<double, 3>& x) const;
    Biquaternion a_at(const std::array<double, 3>& x) const;
};

// Norms of D W + a W + W b (a from the left, b from the right).
Field3<Biquaternion> dirac_residual_field(const Field3<Biquaternion>& W, const DiracData& data);
ResidualReport dirac_residual(const Field3<Biquaternion>& W, const DiracData& data);

// Independent oracle for the x1-reduced equation. With a = 0 and phi read
// along the x1 axis, x1-dependent solutions satisfy e1 d1 W + W b = 0, i.e.
//   d1 W = e1 W b.
// Integrated by the classical 4th-order one-step method from W(0) = e_k,
// k = 0..3, with a step-doubling local error estimate; StepTooLarge when the
// estimate exceeds tol (1 + |W|). The stored trajectory is the plain
// full-step result, keeping the observed order at 4.
struct OdeTrajectories {
    std::vector<double> x;
    std::array<std::vector<Biquaternion>, 4> W;
};
OdeTrajectories ode_oracle_solutions(const DiracData& data, double x_max, std::size_t nodes,
                                     double tol = 1e-8);

// Broadcasts the four trajectories along x1 of a 3D grid whose axis-0 nodes
// coincide with the trajectory nodes; GridMismatch otherwise.
std::array<Field3<Biquaternion>, 4> extend_quartet(const OdeTrajectories& traj, const Grid3& grid);

// Minimum over nodes of |det| of the 4x4 complex component matrix.
double quartet_independence(const std::array<std::vector<Biquaternion>, 4>& F);
double quartet_independence(const std::array<Field3<Biquaternion>, 4>& F);

// Second-kind residual sum_k (D phi_k) F_k for complex scalar phi_k. Vanishes
// together with dirac_residual(sum phi_k F_k) when the F_k are solutions.
// DependentSet if the quartet independence minimum is <= 1e-10; GridMismatch
// on inconsistent grids.
Field3<Biquaternion> second_kind_residual_field(const std::array<Field3<cplx>, 4>& phi,
                                                const std::array<Field3<Biquaternion>, 4>& F);
ResidualReport second_kind_residual(const std::array<Field3<cplx>, 4>& phi,
                                    const std::array<Field3<Biquaternion>, 4>& F);

}  // namespace bers::dirac
