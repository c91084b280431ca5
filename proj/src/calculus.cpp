#include "bers/calculus.hpp"

namespace bers {

CharacteristicCoefficients characteristic_coefficients(const Field2<cplx>& F, const Field2<cplx>& G,
                                                       double tol) {
    if (!(F.grid == G.grid)) throw GridMismatch("characteristic_coefficients: F and G on different grids");
    const auto dF = dbar_elliptic(F);
    const auto dG = dbar_elliptic(G);
    CharacteristicCoefficients out{Field2<cplx>(F.grid), Field2<cplx>(F.grid)};
    for (std::size_t i = 0; i < F.values.size(); ++i) {
        const cplx f = F.values[i];
        const cplx g = G.values[i];
        const double scale = std::norm(f) + std::norm(g);
        const cplx fbar = std::conj(f);
        const cplx gbar = std::conj(g);
        // F Gbar - Fbar G = -2i Im(Fbar G)
        if (std::imag(fbar * g) <= tol * scale)
            throw DegeneratePair("characteristic_coefficients: Im(conj(F) G) not positive at a node");
        const cplx den = f * gbar - fbar * g;
        out.a.values[i] = -(fbar * dG.values[i] - gbar * dF.values[i]) / den;
        out.b.values[i] = (f * dG.values[i] - g * dF.values[i]) / den;
    }
    return out;
}

Field2<cplx> vekua_residual_field(const Field2<cplx>& W, const Field2<cplx>& a, const Field2<cplx>& b) {
    if (!(W.grid == a.grid) || !(W.grid == b.grid))
        throw GridMismatch("vekua_residual: coefficient grids differ from W");
    auto r = dbar_elliptic(W);
    for (std::size_t i = 0; i < r.values.size(); ++i)
        r.values[i] -= a.values[i] * W.values[i] + b.values[i] * std::conj(W.values[i]);
    return r;
}

Field2<cplx> intertwine_residual_elliptic_field(const Field2<cplx>& f, const Field2<double>& phi,
                                                const Field2<cplx>& a, const Field2<cplx>& b) {
    if (!(f.grid == phi.grid) || !(f.grid == a.grid) || !(f.grid == b.grid))
        throw GridMismatch("intertwine_residual_elliptic: mismatched grids");
    Field2<cplx> prod(f.grid);
    for (std::size_t i = 0; i < prod.values.size(); ++i)
        prod.values[i] = f.values[i] * phi.values[i];
    auto lhs = dbar_elliptic(prod);
    Field2<cplx> phic(phi.grid);
    for (std::size_t i = 0; i < phic.values.size(); ++i) phic.values[i] = phi.values[i];
    const auto dphi = dbar_elliptic(phic);
    for (std::size_t i = 0; i < lhs.values.size(); ++i) {
        lhs.values[i] -= a.values[i] * prod.values[i] + b.values[i] * std::conj(prod.values[i]);
        lhs.values[i] -= f.values[i] * dphi.values[i];
    }
    return lhs;
}

ResidualReport vekua_residual(const Field2<cplx>& W, const Field2<cplx>& a, const Field2<cplx>& b) {
    ResidualReport rep;
    rep.op = "vekua";
    const auto r = vekua_residual_field(W, a, b);
    rep.append_level(std::max(W.grid.spacing[0], W.grid.spacing[1]), interior_norms(r));
    return rep;
}

ResidualReport intertwine_residual_elliptic(const Field2<cplx>& f, const Field2<double>& phi,
                                            const Field2<cplx>& a, const Field2<cplx>& b) {
    ResidualReport rep;
    rep.op = "intertwine-elliptic";
    const auto r = intertwine_residual_elliptic_field(f, phi, a, b);
    rep.append_level(std::max(f.grid.spacing[0], f.grid.spacing[1]), interior_norms(r));
    return rep;
}

}  // namespace bers
