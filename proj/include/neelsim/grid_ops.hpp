/// @file grid_ops.hpp
/// Finite-difference calculus on the strip.
///
/// d1h: centered (f(x1+h)-f(x1-h))/(2h) at interior columns; at x1=+1 the
///      one-sided half (f(x1)-f(x1-h))/(2h), at x1=-1 (f(x1+h)-f(x1))/(2h).
///      (The boundary stencil is half of a one-sided difference, so d1h of
///      f=x1 is 1 inside and 1/2 on the edge columns.)
/// d2h: centered periodic differences in x2.
/// laplacian_h: composition d1h(d1h f) + d2h(d2h f) -- the wide (2h) stencil,
///      which is the square of the first-order operators, not the compact
///      3-point Laplacian. Summation by parts is exact for this pairing.
/// inner_h: h^2-weighted sum over ALL nodes (both edge columns included),
///      accumulated with a fixed-shape pairwise tree (see reduce.hpp).

#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "neelsim/grid.hpp"
#include "neelsim/reduce.hpp"

namespace neelsim {

// single-component kernels (OpenMP-parallel)
void d1h_comp(const GridSpec& g, const double* f, double* out);
void d2h_comp(const GridSpec& g, const double* f, double* out);
void laplacian_comp(const GridSpec& g, const double* f, double* out);

// deterministic h^2-weighted dot product of raw arrays of length len
double dot_h(const GridSpec& g, const double* a, const double* b, std::size_t len);

template <int NC>
Field<NC> d1h(const Field<NC>& f) {
    Field<NC> out(f.grid);
    for (int c = 0; c < NC; ++c) d1h_comp(f.grid, f.comp(c), out.comp(c));
    return out;
}

template <int NC>
Field<NC> d2h(const Field<NC>& f) {
    Field<NC> out(f.grid);
    for (int c = 0; c < NC; ++c) d2h_comp(f.grid, f.comp(c), out.comp(c));
    return out;
}

template <int NC>
Field<NC> laplacian_h(const Field<NC>& f) {
    Field<NC> out(f.grid);
    for (int c = 0; c < NC; ++c) laplacian_comp(f.grid, f.comp(c), out.comp(c));
    return out;
}

ScalarField div_h(const PlanarField& p);

template <int NC>
double inner_h(const Field<NC>& a, const Field<NC>& b) {
    require_same_grid(a.grid, b.grid, "inner_h");
    return dot_h(a.grid, a.v.data(), b.v.data(), a.v.size());
}

template <int NC>
double norm_h_sq(const Field<NC>& a) {
    return inner_h(a, a);
}

/// cell average of an analytic function: tensor 2x2 Gauss-Legendre per cell
/// [x1, x1+h) x [x2, x2+h); the x1=1 column has no cell and is sampled
/// pointwise. Exact for bilinear integrands.
template <int NC, class F>
Field<NC> sample_cells(const GridSpec& g, F&& f) {
    Field<NC> out(g);
    const double off = g.h * 0.5 / std::sqrt(3.0);
    for (int i = 0; i < g.n1; ++i) {
        for (int j = 0; j < g.n2; ++j) {
            std::array<double, NC> val{};
            if (i == g.n1 - 1) {
                val = f(g.x1(i), g.x2(j));
            } else {
                const double c1 = g.x1(i) + g.h * 0.5, c2 = g.x2(j) + g.h * 0.5;
                for (int a = -1; a <= 1; a += 2)
                    for (int b = -1; b <= 1; b += 2) {
                        auto q = f(c1 + a * off, c2 + b * off);
                        for (int c = 0; c < NC; ++c) val[c] += 0.25 * q[c];
                    }
            }
            for (int c = 0; c < NC; ++c) out.at(c, i, j) = val[c];
        }
    }
    return out;
}

/// cell average of a finer grid field (fine.grid.n = ratio * coarse n),
/// treating the fine field as piecewise constant on its own cells; pointwise
/// at the x1=1 column. An L-infinity contraction by construction.
template <int NC>
Field<NC> sample_cells(const Field<NC>& fine, int ratio) {
    const GridSpec& fg = fine.grid;
    if (ratio < 1 || fg.n % ratio != 0)
        throw std::invalid_argument("sample_cells: fine resolution not a multiple of ratio");
    GridSpec g = GridSpec::make(fg.n / ratio);
    Field<NC> out(g);
    const double w = 1.0 / (ratio * ratio);
    for (int c = 0; c < NC; ++c)
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.n2; ++j) {
                if (i == g.n1 - 1) {
                    out.at(c, i, j) = fine.at(c, fg.n1 - 1, ratio * j);
                    continue;
                }
                double s = 0.0;
                for (int a = 0; a < ratio; ++a)
                    for (int b = 0; b < ratio; ++b)
                        s += fine.at(c, ratio * i + a, fg.wrap2(ratio * j + b));
                out.at(c, i, j) = s * w;
            }
    return out;
}

/// bilinear interpolant anchored at the lower-left node of the cell holding x:
///   f(y) + f_1(y)(x1-y1) + f_2(y)(x2-y2) + f_12(y)(x1-y1)(x2-y2)
/// with forward difference quotients f_k; the x1-slopes are defined 0 on the
/// last column, so the interpolant extends constant in x1 across [1-h, 1].
/// Exact at nodes; sup norm equals the max node value (multilinear).
template <int NC>
std::array<double, NC> interpolate_Ih(const Field<NC>& f, double x1, double x2) {
    const GridSpec& g = f.grid;
    if (x1 < -1.0 - 1e-12 || x1 > 1.0 + 1e-12)
        throw std::domain_error("interpolate_Ih: x1 outside [-1,1]");
    x1 = std::min(1.0, std::max(-1.0, x1));
    x2 -= std::floor(x2);  // wrap onto [0,1)
    int i = std::min(g.n1 - 1, static_cast<int>(std::floor((x1 + 1.0) / g.h)));
    int j = std::min(g.n2 - 1, static_cast<int>(std::floor(x2 / g.h)));
    const double t1 = x1 - g.x1(i);
    const double t2 = x2 - g.x2(j);
    const int jp = g.wrap2(j + 1);
    std::array<double, NC> out{};
    for (int c = 0; c < NC; ++c) {
        const double f00 = f.at(c, i, j);
        const double f01 = f.at(c, i, jp);
        double d1 = 0.0, d12 = 0.0;
        if (i < g.n1 - 1) {
            d1 = (f.at(c, i + 1, j) - f00) / g.h;
            d12 = (f.at(c, i + 1, jp) - f.at(c, i + 1, j) - f01 + f00) / (g.h * g.h);
        }
        const double d2 = (f01 - f00) / g.h;
        out[c] = f00 + d1 * t1 + d2 * t2 + d12 * t1 * t2;
    }
    return out;
}

/// pointwise renormalization onto the unit sphere. Boundary columns are left
/// untouched (bit-identical) so the pinned trace survives; returns the max
/// deviation max||m|-1| seen before normalization (interior columns).
double normalize_sphere(MagnetizationField& m);

}  // namespace neelsim
