/// @file energy.hpp
/// Reduced thin-film energy on the strip and its gradient.
///
///   E(m) = ||grad_h m||^2 + (1/eps^2)||m3||^2
///        + (1/(2 delta)) || |grad|^{-1/2} div_h m' ||^2
///
/// defined for arbitrary (not necessarily unit) fields. The variational
/// gradient with respect to the h^2-weighted inner product, exact for
/// interior perturbations, is
///
///   grad E(m) = -2 laplacian_h m + ( (1/delta) P(m'), (2/eps^2) m3 )
///
/// with P the stray-field operator from spectral.hpp. Model parameters follow
/// the thin-film scaling alpha = nu*eps (damping), beta = lambda*eps
/// (precession); |log delta| always means ln(1/delta).

#pragma once

#include <cmath>

#include "neelsim/grid.hpp"
#include "neelsim/spectral.hpp"

namespace neelsim {

struct ModelParams {
    double delta = 0.1;   ///< stray-field strength scale, in (0, 1/2)
    double eps = 0.05;    ///< out-of-plane penalty scale (vortex core size)
    double nu = 1.0;      ///< damping prefactor, alpha = nu*eps
    double lambda = 0.0;  ///< precession prefactor, beta = lambda*eps
    double m1inf = 0.0;   ///< boundary trace parameter, in [0, 1)

    [[nodiscard]] double alpha() const { return nu * eps; }
    [[nodiscard]] double beta() const { return lambda * eps; }
    [[nodiscard]] double log_delta() const { return std::log(1.0 / delta); }

    void validate() const;

    /// vortex-exclusion regime indicator: 1/(delta|log delta|) small vs |log eps|
    [[nodiscard]] bool regime_ok() const {
        return 1.0 / (delta * log_delta()) <= std::log(1.0 / eps);
    }
    /// drift-scaling indicator: lambda below sqrt(delta |log delta|)
    [[nodiscard]] bool lambda_ok() const {
        return lambda <= std::sqrt(delta * log_delta());
    }
};

struct EnergyBreakdown {
    double exchange = 0.0;
    double anisotropy = 0.0;
    double nonlocal = 0.0;
    double total = 0.0;
};

EnergyBreakdown energy(const MagnetizationField& m, const ModelParams& p,
                       const SpectralWorkspace& ws);

MagnetizationField energy_grad(const MagnetizationField& m, const ModelParams& p,
                               const SpectralWorkspace& ws);

/// pointwise rescaled energy density
///   (2/pi) delta |log delta| [ |grad_h m|^2 + m3^2/eps^2
///                              + (1/(2 delta)) (|grad|^{-1/2} div_h m')^2 ]
/// whose h^2-weighted sum equals (2/pi) delta |log delta| E(m) exactly.
ScalarField energy_density(const MagnetizationField& m, const ModelParams& p,
                           const SpectralWorkspace& ws);

/// energy ceiling E0 * exp((4/(alpha beta)) * int_0^t ||v(s)||_inf^2 ds);
/// the caller supplies the accumulated integral. Throws if alpha*beta == 0
/// while the integral is positive (the bound degenerates).
double gronwall_ceiling(double E0, double alpha, double beta, double int_sup_v_sq);

}  // namespace neelsim
