#pragma once

#include <array>
#include <functional>
#include <utility>

#include "bers/algebra.hpp"
#include "bers/formal_powers.hpp"
#include "bers/grid.hpp"
#include "bers/medium.hpp"
#include "bers/residual.hpp"

namespace bers::maxwell {

// 1D electromagnetic field for an x-stratified medium, sampled on an (x,t)
// grid (axis 0 = x, axis 1 = t). E2..H3 are the transverse components; V1
// carries the decoupled longitudinal combination sqrt(eps) E1 + i sqrt(mu) H1.
struct EMField1D {
    Grid2 grid;
    Field2<double> E2, E3, H2, H3;
    Field2<cplx> V1;

    EMField1D() = default;
    explicit EMField1D(const Grid2& g) : grid(g), E2(g), E3(g), H2(g), H3(g), V1(g) {}
};

// GridMismatch if the member fields disagree; invalid_argument on non-finite
// samples.
void validate(const EMField1D& em);

using ScalarXT = std::function<double(double x, double t)>;
EMField1D sample_em(const Grid2& grid, const ScalarXT& e2, const ScalarXT& e3,
                    const ScalarXT& h2, const ScalarXT& h3);

// V = sqrt(eps) E + i sqrt(mu) H, componentwise; purely vectorial result.
Biquaternion assemble_v(double eps, double mu, const std::array<double, 3>& E,
                        const std::array<double, 3>& H);

// The transverse pair packed as V2 e2 + V3 e3 with V2 = sqrt(eps) E2 + i sqrt(mu) H2,
// V3 = sqrt(eps) E3 + i sqrt(mu) H3.
Biquaternion transverse_v(double eps, double mu, double e2, double e3, double h2, double h3);
Field2<Biquaternion> transverse_V(const MediumTables& tables, const EMField1D& em);

// Gridwise assembly on a (t,x1,x2,x3) grid; eps is evaluated at x1.
// GridMismatch if E and H live on different grids.
Field4<Biquaternion> assemble_V(const MediumTables& tables,
                                const Field4<std::array<double, 3>>& E,
                                const Field4<std::array<double, 3>>& H);

// Residual of the sourceless stratified Maxwell operator on (t,x1,x2,x3):
//   (1/c) dt V + i D V - V (i c1 e1) - V* (i z1 e1)
// with c1 = c'/2c and z1 = Z'/2Z taken along the stratification axis x1.
Field4<Biquaternion> main_residual_field(const MediumTables& tables, const Field4<Biquaternion>& V);
ResidualReport main_residual(const MediumTables& tables, const Field4<Biquaternion>& V);

// Constant-mu form: z1 = c1 and the last two terms merge into
// -(V + V*)(i c1 e1).
Field4<Biquaternion> nonmagnetic_residual_field(const MediumTables& tables,
                                                const Field4<Biquaternion>& V);
ResidualReport nonmagnetic_residual(const MediumTables& tables, const Field4<Biquaternion>& V);

// Residual of the intertwining identity for a real scalar phi:
//   op(phi V) - [(1/c) dt phi + i D phi] V
// where op is the main operator above. Vanishes (to FD accuracy) iff V solves
// the main equation.
Field4<Biquaternion> intertwine_residual_field(const MediumTables& tables,
                                               const Field4<Biquaternion>& V,
                                               const Field4<double>& phi);
ResidualReport intertwine_residual(const MediumTables& tables, const Field4<Biquaternion>& V,
                                   const Field4<double>& phi);

// (t,x)-only restriction of the constant-mu operator on an (x,t) grid:
//   (1/c) dt V + i e1 dx V - (V + V*)(i c1 e1)
Field2<Biquaternion> nonmagnetic_1d_residual_field(const MediumTables& tables,
                                                   const Field2<Biquaternion>& V);
ResidualReport nonmagnetic_1d_residual(const MediumTables& tables, const Field2<Biquaternion>& V);

// Six x-dependent solutions of the constant-mu equation spanning the complex
// 3-vectors over real scalars: c e1, e2/c, e3/c, i e1, i e2, i e3. Nodewise
// independence is the 6x6 real determinant of (Re, Im) components.
class GeneratingSextet {
  public:
    Biquaternion at(int k, double x) const;  // k in 0..5
    double det_at(double x) const;
    double min_abs_det() const { return min_det_; }

  private:
    friend GeneratingSextet build_sextet(const MediumTables&, std::size_t);
    std::function<double(double)> c_;
    double min_det_ = 0.0;
};

// DependentSet if |det| <= 1e-10 at any scan node.
GeneratingSextet build_sextet(const MediumTables& tables, std::size_t det_samples = 201);

// Sum phi_k V_k sampled on the phi grid; the 2D form reads x from axis 0, the
// 4D form from axis 1.
Field2<Biquaternion> combine_1d(const GeneratingSextet& sextet,
                                const std::array<Field2<double>, 6>& phi);
Field4<Biquaternion> combine(const GeneratingSextet& sextet,
                             const std::array<Field4<double>, 6>& phi);

// Second-kind residual: sum_k [(1/c) dt phi_k + i D phi_k] V_k. Vanishes
// together with the main-equation residual of sum phi_k V_k.
Field4<Biquaternion> second_kind_residual_field(const MediumTables& tables,
                                                const GeneratingSextet& sextet,
                                                const std::array<Field4<double>, 6>& phi);
ResidualReport second_kind_residual(const MediumTables& tables, const GeneratingSextet& sextet,
                                    const std::array<Field4<double>, 6>& phi);
Field2<Biquaternion> second_kind_1d_residual_field(const MediumTables& tables,
                                                   const GeneratingSextet& sextet,
                                                   const std::array<Field2<double>, 6>& phi);
ResidualReport second_kind_1d_residual(const MediumTables& tables, const GeneratingSextet& sextet,
                                       const std::array<Field2<double>, 6>& phi);

// General solution of the decoupled longitudinal equation: a1 c(x) + i a2.
Field2<cplx> v1_closed_form(const MediumTables& tables, double a1, double a2, const Grid2& grid);

// Longitudinal residual, packed as a biquaternion field: scalar slot
// (1/c) dt V1, e1 slot i (dx V1 - c1 (V1 + conj V1)).
Field2<Biquaternion> longitudinal_residual_field(const MediumTables& tables,
                                                 const Field2<cplx>& V1);
ResidualReport longitudinal_residual(const MediumTables& tables, const Field2<cplx>& V1);
ResidualReport longitudinal_residual(const MediumTables& tables, const EMField1D& em);

// Transverse residual:
//   (1/c) dt q + i e1 dx q - (q + q*)(i c1 e1),  q = V2 e2 + V3 e3.
Field2<Biquaternion> transverse_residual_field(const MediumTables& tables, const EMField1D& em);
ResidualReport transverse_residual(const MediumTables& tables, const EMField1D& em);

// --- change-of-function chain, pointwise ------------------------------------
// Each step is a named involution-friendly transform so the bookkeeping can be
// checked in isolation. C is the wave speed at the point.

Bicomplex phi_from_v(const cplx& v2, const cplx& v3);    // V2 + V3 e1
std::pair<cplx, cplx> v_from_phi(const Bicomplex& phi);  // (V2, V3)
Bicomplex w_from_psi(double C, const Bicomplex& psi);    // sqrt(C) conj_i(psi)
Bicomplex psi_from_w(double C, const Bicomplex& W);      // conj_i(W) / sqrt(C)

// The formal powers solve the hyperbolic equation with a minus sign on the
// conjugate term (generating pair (f, j/f)); the field map below inverts
// solutions of the plus-sign equation (pair (1/f, j f)). Left multiplication
// by j swaps the two kernels exactly, so formal powers pass through this gauge
// before the field map. Involution: applying it twice is the identity.
Hyperbolic to_field_gauge(const Hyperbolic& w);

struct TransversePoint {
    double E2 = 0.0, E3 = 0.0, H2 = 0.0, H3 = 0.0;
};

// Inverse of the field map
//   w1 = sqrt(C)(sqrt(eps) E2 - sqrt(mu) H3 j),
//   w2 = sqrt(C)(sqrt(eps) E3 + sqrt(mu) H2 j)
// at the point x (xi = N(x) implied).
TransversePoint fields_from_w_point(const MediumTables& tables, double x, const Hyperbolic& w1,
                                    const Hyperbolic& w2);
std::pair<Hyperbolic, Hyperbolic> w_from_fields_point(const MediumTables& tables, double x,
                                                      const TransversePoint& p);

using HypEval = std::function<Hyperbolic(double xi, double t)>;

// Samples w1, w2 at (N(x), t) for every grid node and inverts the field map
// nodewise. OutOfDomain if the grid leaves the tabulated x range. V1 is left
// zero.
EMField1D fields_from_w(const MediumTables& tables, const HypEval& w1, const HypEval& w2,
                        const Grid2& xt_grid);
std::pair<Field2<Hyperbolic>, Field2<Hyperbolic>> w_from_fields(const MediumTables& tables,
                                                                const EMField1D& em);

// End-to-end pipeline: Z^(n)(a,0,.) through the j gauge into the w1 slot of
// the field map (w2 = 0).
EMField1D em_from_formal_power(const MediumTables& tables, const FormalPowerTable& fp, int n,
                               const Hyperbolic& a, const Grid2& xt_grid);

}  // namespace bers::maxwell
