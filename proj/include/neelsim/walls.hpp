/// @file walls.hpp
/// Wall construction, relaxation, and concentration diagnostics.
///
/// The one-dimensional transition m = (m1, m2): [-1,1] -> S^1 carries the
/// reduced energy
///
///   E(m) = int |dm/dx|^2 + (1/2 delta) int | |d/dx|^{1/2} m1 |^2
///
/// with endpoints pinned to m_{+-} = (m1inf, +-sqrt(1-m1inf^2)). The
/// half-derivative acts on m1 - m1inf through the 1D Dirichlet sine calculus,
/// so the far-field value sits in the operator's natural class and the
/// logarithmic tails are confined by the edges at x = +-1. The asymptotic
/// cost per unit length is pi (1-m1inf)^2 / (2 delta log(1/delta)); at desk
/// scale the rescaled energy approaches it from above, logarithmically slowly.

#pragma once

#include <vector>

#include "neelsim/energy.hpp"
#include "neelsim/spectral.hpp"

namespace neelsim {

/// in-plane unit profile on the 2n+1 nodes of [-1,1]
struct WallProfile1D {
    int n = 0;
    double h = 0.0;
    double m1inf = 0.0;
    std::vector<double> m1, m2;

    WallProfile1D() = default;
    WallProfile1D(int n_, double m1inf_);
    [[nodiscard]] int npts() const { return 2 * n + 1; }
    [[nodiscard]] double x(int i) const { return -1.0 + h * i; }
    /// clamp endpoints to m_{+-} and renormalize every node
    void enforce_constraints();
};

struct WallEnergy {
    double exchange = 0.0;
    double nonlocal = 0.0;
    double total = 0.0;
};

struct RelaxReport1D {
    WallProfile1D profile;
    WallEnergy energy;
    long iterations = 0;
    bool converged = false;
};

struct ConcentrationReport {
    double x1_star = 0.0;
    double width = 0.0;
    double fraction = 0.0;  ///< mass fraction within |x1 - x1_star| <= width
    double rescaled_energy = 0.0;
};

/// piecewise-constant competitor: m_{-} strictly left of x1_star, m_{+} at
/// and right of it, m3 = 0
MagnetizationField straight_wall(double x1_star, double m1inf, const GridSpec& g);

/// two-scale initializer: odd phase with a tanh core of width delta blended
/// (weight gamma on the tail part) with logarithmic tails matched at
/// x = delta log(1/delta); endpoints exact by construction
WallProfile1D neel_ansatz(double delta, double m1inf, int n, double gamma = 0.5);

/// single-scale competitor initializer: smoothstep phase ramp of the given
/// half-width, endpoints exact
WallProfile1D smoothed_step(double m1inf, int n, double width = 0.25);

WallEnergy wall_energy(const WallProfile1D& w, double delta, const Spectral1D& sp);

/// pointwise 1D energy density (h-weighted sum recovers wall_energy total)
std::vector<double> wall_density(const WallProfile1D& w, double delta, const Spectral1D& sp);

/// projected Barzilai-Borwein descent with monotone backtracking; endpoints
/// pinned; stops when the relative energy decrease stays below tol
RelaxReport1D relax_profile(const WallProfile1D& init, double delta, const Spectral1D& sp,
                            double tol = 1e-10, long max_iter = 200000);

/// pi (1 - m1inf)^2 / (2 delta log(1/delta))
double wall_energy_asymptotic(double delta, double m1inf);

/// median of the x1-marginal of a nonnegative density; the median interval's
/// midpoint (so a symmetric two-bump density reports the center between the
/// bumps). Throws if the density has no mass.
double detect_wall_center(const ScalarField& density);
double detect_wall_center_1d(const std::vector<double>& density, int n);

/// (mass within |x1 - x1_star| <= w) / total mass; throws on zero total
double concentration_fraction(const ScalarField& density, double x1_star, double w);
double concentration_fraction_1d(const std::vector<double>& density, int n, double x1_star,
                                 double w);

/// y-uniform in-plane extension of a profile onto the strip grid (same n)
MagnetizationField extend_profile_2d(const WallProfile1D& w, const GridSpec& g);

/// add a Gaussian out-of-plane bump m3 += A exp(-(|x-c|/w)^2) (periodic
/// distance in x2) and shrink m' pointwise so |m| = 1 again; boundary
/// columns are left untouched
MagnetizationField with_out_of_plane_bump(const MagnetizationField& m, double amplitude,
                                          double width, double x1c, double x2c);

struct RelaxReport2D {
    MagnetizationField m;
    EnergyBreakdown energy;
    long iterations = 0;
    bool converged = false;
};

/// full-field projected BB descent on the strip energy (boundary columns
/// pinned, values renormalized after every trial step)
RelaxReport2D relax_field(const MagnetizationField& init, const ModelParams& p,
                          const SpectralWorkspace& ws, double tol = 1e-10,
                          long max_iter = 50000);

struct VortexProbe {
    std::vector<double> eps;
    std::vector<double> energy;  ///< GL energy over the unit disk
    double slope = 0.0;          ///< least-squares slope of energy vs log(1/eps)
};

/// core-regularized vortex u = x_perp / max(|x|, eps) on [-1,1]^2 with node
/// spacing 1/n, Ginzburg-Landau energy summed over the unit disk, slope
/// fitted against log(1/eps). The continuum law is 2 pi log(1/eps) + O(1).
VortexProbe vortex_probe(const std::vector<double>& eps_list, int n);

}  // namespace neelsim
