#include "neelsim/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

#include "neelsim/grid_ops.hpp"

namespace neelsim {

SpectralWorkspace::SpectralWorkspace(const GridSpec& g) : grid_(g) {
    N1_ = g.n1 - 2;
    N2_ = g.n2;
    scale_ = 2.0 * (N1_ + 1) * N2_;
    lam1_.resize(N1_);
    for (int k0 = 0; k0 < N1_; ++k0) {
        const double s = std::sin((k0 + 1) * M_PI * g.h / 4.0);
        lam1_[k0] = 4.0 / (g.h * g.h) * s * s;
    }
    lam2_.resize(N2_ / 2 + 1);
    for (int q = 0; q <= N2_ / 2; ++q) {
        const double s = std::sin(M_PI * q * g.h);
        lam2_[q] = 4.0 / (g.h * g.h) * s * s;
    }
    inv_half_.resize(static_cast<std::size_t>(N1_) * N2_);
    for (int k0 = 0; k0 < N1_; ++k0)
        for (int j = 0; j < N2_; ++j)
            inv_half_[static_cast<std::size_t>(k0) * N2_ + j] = 1.0 / std::sqrt(lambda(k0, j));

    planbuf_.resize(static_cast<std::size_t>(N1_) * N2_);
    fwd_ = fftw_plan_r2r_2d(N1_, N2_, planbuf_.data(), planbuf_.data(), FFTW_RODFT00,
                            FFTW_R2HC, FFTW_ESTIMATE | FFTW_UNALIGNED);
    inv_ = fftw_plan_r2r_2d(N1_, N2_, planbuf_.data(), planbuf_.data(), FFTW_RODFT00,
                            FFTW_HC2R, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!fwd_ || !inv_) throw std::runtime_error("SpectralWorkspace: fftw planning failed");
}

SpectralWorkspace::~SpectralWorkspace() {
    if (fwd_) fftw_destroy_plan(fwd_);
    if (inv_) fftw_destroy_plan(inv_);
}

void SpectralWorkspace::forward(double* data) const { fftw_execute_r2r(fwd_, data, data); }
void SpectralWorkspace::inverse(double* data) const { fftw_execute_r2r(inv_, data, data); }

void SpectralWorkspace::gather_interior(const ScalarField& f, double* buf) const {
    const double* src = f.comp(0);
#pragma omp parallel for schedule(static)
    for (int i = 1; i <= N1_; ++i)
        for (int j = 0; j < N2_; ++j)
            buf[static_cast<std::size_t>(i - 1) * N2_ + j] = src[grid_.idx(i, j)];
}

void SpectralWorkspace::scatter_interior(const double* buf, ScalarField& f) const {
    double* dst = f.comp(0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid_.n1; ++i)
        for (int j = 0; j < N2_; ++j)
            dst[grid_.idx(i, j)] =
                (i >= 1 && i <= N1_) ? buf[static_cast<std::size_t>(i - 1) * N2_ + j] : 0.0;
}

ScalarField apply_fractional(const SpectralWorkspace& ws, const ScalarField& q, double p) {
    require_same_grid(ws.grid(), q.grid, "apply_fractional");
    const int N1 = ws.interior_cols(), N2 = ws.rows();
    std::vector<double> buf(static_cast<std::size_t>(N1) * N2);
    ws.gather_interior(q, buf.data());
    ws.forward(buf.data());
    const double half_p = 0.5 * p;
#pragma omp parallel for schedule(static)
    for (int k0 = 0; k0 < N1; ++k0)
        for (int j = 0; j < N2; ++j)
            buf[static_cast<std::size_t>(k0) * N2 + j] *= std::pow(ws.lambda(k0, j), half_p);
    ws.inverse(buf.data());
    const double s = 1.0 / ws.round_trip_scale();
    for (auto& x : buf) x *= s;
    ScalarField out(q.grid);
    ws.scatter_interior(buf.data(), out);
    return out;
}

double fractional_norm_sq(const SpectralWorkspace& ws, const ScalarField& q, double p) {
    require_same_grid(ws.grid(), q.grid, "fractional_norm_sq");
    const int N1 = ws.interior_cols(), N2 = ws.rows();
    std::vector<double> buf(static_cast<std::size_t>(N1) * N2);
    ws.gather_interior(q, buf.data());
    ws.forward(buf.data());
    // Parseval: sum_interior f^2 = (1/scale) * sum_slots w * chat^2, so the
    // h^2-weighted squared norm of |grad|^p q is (h^2/scale) sum w chat^2 lam^p
#pragma omp parallel for schedule(static)
    for (int k0 = 0; k0 < N1; ++k0)
        for (int j = 0; j < N2; ++j) {
            const std::size_t s = static_cast<std::size_t>(k0) * N2 + j;
            buf[s] = ws.slot_weight(j) * buf[s] * buf[s] * std::pow(ws.lambda(k0, j), p);
        }
    const double h = ws.grid().h;
    return h * h / ws.round_trip_scale() * pairwise_sum(buf.data(), buf.size());
}

double hminus_half_sq(const SpectralWorkspace& ws, const ScalarField& q) {
    return fractional_norm_sq(ws, q, -0.5);
}

PlanarField nonlocal_P(const SpectralWorkspace& ws, const PlanarField& mp) {
    require_same_grid(ws.grid(), mp.grid, "nonlocal_P");
    ScalarField q = div_h(mp);
    const int N1 = ws.interior_cols(), N2 = ws.rows();
    std::vector<double> buf(static_cast<std::size_t>(N1) * N2);
    ws.gather_interior(q, buf.data());
    ws.forward(buf.data());
    const std::vector<double>& mult = ws.inv_half_multiplier();
    const double s = 1.0 / ws.round_trip_scale();
#pragma omp parallel for schedule(static)
    for (std::size_t p = 0; p < buf.size(); ++p) buf[p] *= mult[p] * s;
    ws.inverse(buf.data());
    ScalarField w(mp.grid);
    ws.scatter_interior(buf.data(), w);
    PlanarField out(mp.grid);
    d1h_comp(mp.grid, w.comp(0), out.comp(0));
    d2h_comp(mp.grid, w.comp(0), out.comp(1));
    for (auto& x : out.v) x = -x;
    return out;
}

Spectral1D::Spectral1D(int n_) {
    if (n_ < 4) throw std::invalid_argument("Spectral1D: need n >= 4");
    n = n_;
    N = 2 * n - 1;
    h = 1.0 / n;
    lam.resize(N);
    for (int k0 = 0; k0 < N; ++k0) {
        const double s = std::sin((k0 + 1) * M_PI * h / 4.0);
        lam[k0] = 4.0 / (h * h) * s * s;
    }
    planbuf_.resize(N);
    plan_ = fftw_plan_r2r_1d(N, planbuf_.data(), planbuf_.data(), FFTW_RODFT00,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw std::runtime_error("Spectral1D: fftw planning failed");
}

Spectral1D::~Spectral1D() {
    if (plan_) fftw_destroy_plan(plan_);
}

void Spectral1D::dst(double* data) const { fftw_execute_r2r(plan_, data, data); }

}  // namespace neelsim
