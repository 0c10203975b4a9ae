/// @file spectral.hpp
/// Functional calculus of the grid Laplacian with zero boundary values in x1
/// and periodicity in x2.
///
/// Eigenbasis: sine modes sin(k*pi*(x1+1)/2), k = 1..n1-2, on the interior
/// columns, tensored with Fourier modes in x2. Eigenvalues of the compact
/// 3-point Laplacian:
///     lambda(k,q) = (4/h^2) sin^2(k*pi*h/4) + (4/h^2) sin^2(pi*q*h).
/// |grad|^p acts as the multiplier lambda^{p/2} (so |grad| is the square root
/// of the Laplacian; p = -1 gives the inverse half-Laplacian used by the
/// stray-field operator, p = -1/2 the H^{-1/2} norm weight).
///
/// Fields enter through their interior columns only; the two boundary columns
/// are zero-padded out of the sine class, and operator outputs carry zeros
/// there (the Dirichlet trace of the potential).
///
/// Transforms are FFTW DST-I along x1 and a real halfcomplex FFT along x2;
/// the multiplier is symmetric under q -> n2-q, so it acts diagonally on the
/// halfcomplex layout. Plans are created with FFTW_ESTIMATE (heuristic, no
/// timing) so planning is deterministic; execution on distinct buffers is
/// thread-safe and a built workspace may be shared read-only.

#pragma once

#include <memory>
#include <vector>

#include "neelsim/grid.hpp"

struct fftw_plan_s;

namespace neelsim {

class SpectralWorkspace {
  public:
    explicit SpectralWorkspace(const GridSpec& g);
    ~SpectralWorkspace();
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    [[nodiscard]] const GridSpec& grid() const { return grid_; }
    [[nodiscard]] int interior_cols() const { return N1_; }
    [[nodiscard]] int rows() const { return N2_; }
    /// eigenvalue for DST index k0 (0-based, mode k = k0+1) and halfcomplex slot j
    [[nodiscard]] double lambda(int k0, int j) const {
        const int q = j <= N2_ / 2 ? j : N2_ - j;
        return lam1_[k0] + lam2_[q];
    }
    /// Parseval weight of a halfcomplex slot (1 for the real-only slots, 2 else)
    [[nodiscard]] double slot_weight(int j) const {
        return (j == 0 || 2 * j == N2_) ? 1.0 : 2.0;
    }
    /// forward/inverse transform of an interior buffer (size N1*N2, row-major,
    /// x2 fastest); unnormalized, round trip multiplies by round_trip_scale()
    void forward(double* data) const;
    void inverse(double* data) const;
    [[nodiscard]] double round_trip_scale() const { return scale_; }

    /// interior column extraction / zero-padded re-embedding
    void gather_interior(const ScalarField& f, double* buf) const;
    void scatter_interior(const double* buf, ScalarField& f) const;

    /// cached multiplier lambda^{-1/2} (the |grad|^{-1} action, hot path)
    [[nodiscard]] const std::vector<double>& inv_half_multiplier() const { return inv_half_; }

  private:
    GridSpec grid_;
    int N1_ = 0, N2_ = 0;
    double scale_ = 0.0;
    std::vector<double> lam1_, lam2_, inv_half_;
    std::vector<double> planbuf_;
    fftw_plan_s* fwd_ = nullptr;
    fftw_plan_s* inv_ = nullptr;
};

/// out = |grad|^p applied to q (interior; boundary columns of out are zero)
ScalarField apply_fractional(const SpectralWorkspace& ws, const ScalarField& q, double p);

/// || |grad|^p q ||^2 in the h^2-weighted norm (interior part of q)
double fractional_norm_sq(const SpectralWorkspace& ws, const ScalarField& q, double p);

/// stray-field quadratic form: || |grad|^{-1/2} q ||^2
double hminus_half_sq(const SpectralWorkspace& ws, const ScalarField& q);

/// stray-field operator P(m') = -grad_h |grad|^{-1} div_h m' (full-grid output)
PlanarField nonlocal_P(const SpectralWorkspace& ws, const PlanarField& mp);

/// one-dimensional Dirichlet sine calculus on [-1,1] (2n+1 nodes, 2n-1
/// interior); used by the one-dimensional wall energetics
class Spectral1D {
  public:
    explicit Spectral1D(int n);
    ~Spectral1D();
    Spectral1D(const Spectral1D&) = delete;
    Spectral1D& operator=(const Spectral1D&) = delete;

    int n = 0, N = 0;  ///< N = 2n-1 interior nodes
    double h = 0.0;
    std::vector<double> lam;  ///< lam[k0] = (4/h^2) sin^2((k0+1) pi h / 4)

    /// in-place DST-I (unnormalized; applying twice multiplies by 2(N+1))
    void dst(double* data) const;
    [[nodiscard]] double round_trip_scale() const { return 2.0 * (N + 1); }

  private:
    std::vector<double> planbuf_;
    fftw_plan_s* plan_ = nullptr;
};

}  // namespace neelsim
