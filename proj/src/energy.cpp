#include "neelsim/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "neelsim/grid_ops.hpp"

namespace neelsim {

void ModelParams::validate() const {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("ModelParams: delta must lie in (0, 1/2)");
    if (!(eps > 0.0)) throw std::invalid_argument("ModelParams: eps must be positive");
    if (!(nu > 0.0)) throw std::invalid_argument("ModelParams: nu must be positive");
    if (!(lambda >= 0.0)) throw std::invalid_argument("ModelParams: lambda must be >= 0");
    if (!(m1inf >= 0.0 && m1inf < 1.0))
        throw std::invalid_argument("ModelParams: m1inf must lie in [0, 1)");
}

namespace {

PlanarField planar_part(const MagnetizationField& m) {
    PlanarField mp(m.grid);
    const std::size_t np = m.grid.npoints();
    std::copy(m.comp(0), m.comp(0) + np, mp.comp(0));
    std::copy(m.comp(1), m.comp(1) + np, mp.comp(1));
    return mp;
}

}  // namespace

EnergyBreakdown energy(const MagnetizationField& m, const ModelParams& p,
                       const SpectralWorkspace& ws) {
    EnergyBreakdown e;
    MagnetizationField g1 = d1h(m);
    MagnetizationField g2 = d2h(m);
    e.exchange = norm_h_sq(g1) + norm_h_sq(g2);

    ScalarField m3(m.grid);
    std::copy(m.comp(2), m.comp(2) + m.grid.npoints(), m3.comp(0));
    e.anisotropy = norm_h_sq(m3) / (p.eps * p.eps);

    ScalarField q = div_h(planar_part(m));
    e.nonlocal = hminus_half_sq(ws, q) / (2.0 * p.delta);

    e.total = e.exchange + e.anisotropy + e.nonlocal;
    return e;
}

MagnetizationField energy_grad(const MagnetizationField& m, const ModelParams& p,
                               const SpectralWorkspace& ws) {
    MagnetizationField g = laplacian_h(m);
    PlanarField P = nonlocal_P(ws, planar_part(m));
    const std::size_t np = m.grid.npoints();
    const double inv_delta = 1.0 / p.delta;
    const double aniso = 2.0 / (p.eps * p.eps);
    double* g1 = g.comp(0);
    double* g2 = g.comp(1);
    double* g3 = g.comp(2);
    const double* P1 = P.comp(0);
    const double* P2 = P.comp(1);
    const double* m3 = m.comp(2);
#pragma omp parallel for schedule(static)
    for (std::size_t q = 0; q < np; ++q) {
        g1[q] = -2.0 * g1[q] + inv_delta * P1[q];
        g2[q] = -2.0 * g2[q] + inv_delta * P2[q];
        g3[q] = -2.0 * g3[q] + aniso * m3[q];
    }
    return g;
}

ScalarField energy_density(const MagnetizationField& m, const ModelParams& p,
                           const SpectralWorkspace& ws) {
    const GridSpec& g = m.grid;
    MagnetizationField g1 = d1h(m);
    MagnetizationField g2 = d2h(m);
    ScalarField q = div_h(planar_part(m));
    ScalarField u = apply_fractional(ws, q, -0.5);  // |grad|^{-1/2} div m'
    ScalarField dens(g);
    const std::size_t np = g.npoints();
    const double scale = 2.0 / M_PI * p.delta * p.log_delta();
    const double inv_eps2 = 1.0 / (p.eps * p.eps);
    const double inv_2delta = 1.0 / (2.0 * p.delta);
    double* out = dens.comp(0);
    const double* m3 = m.comp(2);
    const double* uf = u.comp(0);
#pragma omp parallel for schedule(static)
    for (std::size_t s = 0; s < np; ++s) {
        double ex = 0.0;
        for (int c = 0; c < 3; ++c)
            ex += g1.comp(c)[s] * g1.comp(c)[s] + g2.comp(c)[s] * g2.comp(c)[s];
        out[s] = scale * (ex + m3[s] * m3[s] * inv_eps2 + uf[s] * uf[s] * inv_2delta);
    }
    return dens;
}

double gronwall_ceiling(double E0, double alpha, double beta, double int_sup_v_sq) {
    if (int_sup_v_sq == 0.0) return E0;
    if (alpha * beta <= 0.0)
        throw std::invalid_argument("gronwall_ceiling: alpha*beta must be positive for v != 0");
    return E0 * std::exp(4.0 / (alpha * beta) * int_sup_v_sq);
}

}  // namespace neelsim
