/// @file grid.hpp
/// Node layout and field storage for the strip [-1,1] x (R/Z).
///
/// x1 carries 2n+1 nodes at -1 + i*h (i = 0..2n, h = 1/n); the two outermost
/// columns are the pinned boundary trace. x2 carries n nodes at j*h
/// (j = 0..n-1) with periodic wraparound. Fields are stored row-major with x2
/// fastest; multi-component fields are component-major (each component is one
/// contiguous block), which keeps stencils and spectral transforms strided-free.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace neelsim {

struct GridSpec {
    int n = 0;      ///< cells per unit length, h = 1/n
    int n1 = 0;     ///< node count along x1 (2n+1)
    int n2 = 0;     ///< node count along x2 (n)
    double h = 0.0;

    static GridSpec make(int n) {
        if (n < 4)
            throw std::invalid_argument("GridSpec: need n >= 4, got " + std::to_string(n));
        GridSpec g;
        g.n = n;
        g.n1 = 2 * n + 1;
        g.n2 = n;
        g.h = 1.0 / n;
        return g;
    }

    [[nodiscard]] std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n2 + j;
    }
    [[nodiscard]] double x1(int i) const { return -1.0 + h * i; }
    [[nodiscard]] double x2(int j) const { return h * j; }
    [[nodiscard]] std::size_t npoints() const {
        return static_cast<std::size_t>(n1) * n2;
    }
    /// wrap an x2 index onto [0, n2)
    [[nodiscard]] int wrap2(int j) const {
        j %= n2;
        return j < 0 ? j + n2 : j;
    }
    bool operator==(const GridSpec&) const = default;
};

template <int NC>
struct Field {
    GridSpec grid;
    std::vector<double> v;  ///< component-major: component c at [c*npoints, (c+1)*npoints)

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), v(g.npoints() * NC, 0.0) {}

    [[nodiscard]] double* comp(int c) { return v.data() + static_cast<std::size_t>(c) * grid.npoints(); }
    [[nodiscard]] const double* comp(int c) const {
        return v.data() + static_cast<std::size_t>(c) * grid.npoints();
    }
    [[nodiscard]] double& at(int c, int i, int j) { return comp(c)[grid.idx(i, j)]; }
    [[nodiscard]] double at(int c, int i, int j) const { return comp(c)[grid.idx(i, j)]; }

    static constexpr int ncomp = NC;
};

using ScalarField = Field<1>;
using PlanarField = Field<2>;
using MagnetizationField = Field<3>;

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* who) {
    if (!(a == b)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

}  // namespace neelsim
