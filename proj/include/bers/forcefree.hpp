#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "bers/algebra.hpp"
#include "bers/grid.hpp"
#include "bers/residual.hpp"

namespace bers::forcefree {

// Proportionality factor for (D + alpha)B = 0. Closed forms (constant,
// position-dependent scalar, or full biquaternion per the general case) are
// evaluated on demand; sampled factors must live on the grid of the field they
// multiply. Always acts by left multiplication.
class AlphaField {
  public:
    static AlphaField constant(cplx a);
    static AlphaField scalar_fn(std::function<cplx(const std::array<double, 3>&)> fn);
    static AlphaField biquaternion_fn(std::function<Biquaternion(const std::array<double, 3>&)> fn);
    static AlphaField sampled(Field3<Biquaternion> samples);  // invalid_argument on non-finite

    // Value at a node of g; GridMismatch when sampled on a different grid.
    Biquaternion at(const Grid3& g, std::size_t flat) const;

  private:
    std::function<Biquaternion(const std::array<double, 3>&)> fn_;
    std::optional<Field3<Biquaternion>> samples_;
};

// Norms of D B + alpha B.
Field3<Biquaternion> ff_residual_field(const Field3<Biquaternion>& B, const AlphaField& alpha);
ResidualReport ff_residual(const Field3<Biquaternion>& B, const AlphaField& alpha);

// b(x) = cos(alpha x_k) + e_k sin(alpha x_k), axis k in 1..3. Satisfies
// (D + alpha)b = 0 identically and b(x) b(-x) = 1, so it is invertible
// everywhere.
Biquaternion exp_solution_at(cplx alpha, int axis, const std::array<double, 3>& x);
Field3<Biquaternion> exp_solution(cplx alpha, int axis, const Grid3& grid);

// Quartet (b, b e1, b e2, b e3) generated by one everywhere-invertible
// solution. Nodewise independence: 4x4 complex determinant of the component
// matrix, which equals (b bbar)^2.
struct GeneratingQuartet {
    std::array<Field3<Biquaternion>, 4> b;
    double min_abs_det = 0.0;
};

// NotInvertible if b is a zero divisor at any node.
GeneratingQuartet quartet_from_b(const Field3<Biquaternion>& b);

// Second-kind residual: sum_k (D phi_k) b_k for complex scalar phi_k. By the
// product rule this equals the (D + alpha) residual of b (sum phi_k e_k) when
// b solves the equation, so the two residuals vanish together.
Field3<Biquaternion> second_kind_residual_field(const std::array<Field3<cplx>, 4>& phi,
                                                const GeneratingQuartet& quartet);
ResidualReport second_kind_residual(const std::array<Field3<cplx>, 4>& phi,
                                    const GeneratingQuartet& quartet);

// For two exact solutions f, g (f invertible for the first report, g for the
// second): components of f^{-1} g against the quartet of f, and of g^{-1} f
// against the quartet of g.
std::pair<ResidualReport, ResidualReport> quotient_check(const Field3<Biquaternion>& f,
                                                         const Field3<Biquaternion>& g);

// div of the vector part; for purely vectorial solutions this is the scalar
// part of -(D B) and so inherits the residual order.
Field3<cplx> divergence(const Field3<Biquaternion>& B);
ResidualReport divergence_residual(const Field3<Biquaternion>& B);

// Right module structure: B lambda for constant lambda.
Field3<Biquaternion> right_multiplied(const Field3<Biquaternion>& B, const Biquaternion& lambda);

}  // namespace bers::forcefree
