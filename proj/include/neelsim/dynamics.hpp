/// @file dynamics.hpp
/// Damped-precession dynamics with spin drift on the pinned-boundary strip:
///
///   dm/dt + m x ( alpha dm/dt + beta grad E(m) - (v.grad_h)m - m x (v.grad_h)m ) = 0
///
/// solved pointwise for dm/dt through the invertible map A(m): u -> u + alpha m x u,
///   dm/dt = -A(m)^{-1} [ m x ( beta grad E(m) - (v.grad_h)m - m x (v.grad_h)m ) ].
/// The right side is tangent to the sphere and vanishes identically on the two
/// boundary columns, which are never written to (the trace is pinned exactly).
///
/// Time stepping: classical RK4 (or explicit midpoint) with unprojected stages
/// and pointwise renormalization of the combined update; the pre-renormalization
/// deviation max||m|-1| is tracked as a scheme-quality diagnostic.

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "neelsim/energy.hpp"

namespace neelsim {

/// closed-form inverse of A(m): u -> u + alpha m x u on the unit sphere:
///   A^{-1} w = ( w - alpha m x w + alpha^2 (m.w) m ) / (1 + alpha^2)
inline std::array<double, 3> a_inv(const std::array<double, 3>& m,
                                   const std::array<double, 3>& w, double alpha) {
    const double mw = m[0] * w[0] + m[1] * w[1] + m[2] * w[2];
    const std::array<double, 3> mxw{m[1] * w[2] - m[2] * w[1], m[2] * w[0] - m[0] * w[2],
                                    m[0] * w[1] - m[1] * w[0]};
    const double s = 1.0 / (1.0 + alpha * alpha);
    return {(w[0] - alpha * mxw[0] + alpha * alpha * mw * m[0]) * s,
            (w[1] - alpha * mxw[1] + alpha * alpha * mw * m[1]) * s,
            (w[2] - alpha * mxw[2] + alpha * alpha * mw * m[2]) * s};
}

/// applied spin-polarized current v(t,x) with a sup-norm hook for the energy
/// ceiling bookkeeping
struct SpinCurrent {
    bool zero = true;
    std::function<std::array<double, 2>(double t, double x1, double x2)> eval;
    std::function<double(double t)> sup_sq;  ///< ||v(t)||_inf^2

    static SpinCurrent none() { return SpinCurrent{}; }
    static SpinCurrent constant(double v1, double v2) {
        SpinCurrent v;
        v.zero = (v1 == 0.0 && v2 == 0.0);
        v.eval = [v1, v2](double, double, double) { return std::array<double, 2>{v1, v2}; };
        v.sup_sq = [v1, v2](double) { return v1 * v1 + v2 * v2; };
        return v;
    }
    /// drift-vs-dissipation admissibility ||v||^2_inf <= alpha*beta at t
    [[nodiscard]] bool admissible(double t, const ModelParams& p) const {
        return zero || sup_sq(t) <= p.alpha() * p.beta() * (1.0 + 1e-12);
    }
};

enum class Scheme { rk4, midpoint };

struct IntegratorConfig {
    Scheme scheme = Scheme::rk4;
    double dt = 0.0;          ///< 0 = use the stability ceiling
    double cfl_safety = 0.2;  ///< fraction of the stability ceiling
    int renorm_every = 1;
    int sample_every = 0;     ///< trace sampling stride; 0 = ~64 samples per run
};

/// dt ceiling cfl * min(eps^2, h^2/4, delta*h^2); configs requesting more are
/// rejected by simulate
double stability_ceiling(const ModelParams& p, const GridSpec& g, double cfl);

/// dm/dt into out (boundary columns zeroed)
void rhs(const MagnetizationField& m, double t, const ModelParams& p,
         const SpectralWorkspace& ws, const SpinCurrent& v, MagnetizationField& out);

/// one step in place; returns the pre-renormalization deviation max||m|-1|
double step(MagnetizationField& m, double t, double dt, const IntegratorConfig& cfg,
            const ModelParams& p, const SpectralWorkspace& ws, const SpinCurrent& v,
            bool renormalize);

struct TraceRow {
    double t = 0.0;
    double exchange = 0.0, anisotropy = 0.0, nonlocal = 0.0, total = 0.0;
    double ceiling = 0.0;        ///< Gronwall ceiling at this time
    double max_norm_dev = 0.0;   ///< max pre-renorm ||m|-1| since previous row
    double hminus1_rate = 0.0;   ///< ||dm/dt||_{H^-1} over the previous sample window
};

enum class SimStatus { ok, diverged, ceiling_violation };

struct SimResult {
    MagnetizationField m;
    std::vector<TraceRow> trace;
    SimStatus status = SimStatus::ok;
    double max_norm_dev = 0.0;
    double l2_rate_sq_integral = 0.0;       ///< int ||dm/dt||_{L2}^2 dt (sampled)
    double hminus1_rate_sq_integral = 0.0;  ///< int ||dm/dt||_{H^-1}^2 dt (sampled)
    long steps = 0;
    double dt = 0.0;
};

SimResult simulate(const MagnetizationField& m0, double T, const IntegratorConfig& cfg,
                   const ModelParams& p, const SpectralWorkspace& ws, const SpinCurrent& v);

/// sampled-trajectory time-derivative norms: returns
/// { sqrt(int ||dm/dt||_{L2}^2 dt), sqrt(int ||dm/dt||_{H^-1}^2 dt) }
std::pair<double, double> time_derivative_norms(const std::vector<MagnetizationField>& samples,
                                                double dt_sample, const SpectralWorkspace& ws);

}  // namespace neelsim
