#include "neelsim/grid_ops.hpp"

#include <vector>

namespace neelsim {

void d1h_comp(const GridSpec& g, const double* f, double* out) {
    const int n1 = g.n1, n2 = g.n2;
    const double c = 1.0 / (2.0 * g.h);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n1; ++i) {
        const double* fm = f + g.idx(i > 0 ? i - 1 : 0, 0);
        const double* fp = f + g.idx(i < n1 - 1 ? i + 1 : n1 - 1, 0);
        const double* f0 = f + g.idx(i, 0);
        double* o = out + g.idx(i, 0);
        if (i == 0) {
            for (int j = 0; j < n2; ++j) o[j] = (fp[j] - f0[j]) * c;
        } else if (i == n1 - 1) {
            for (int j = 0; j < n2; ++j) o[j] = (f0[j] - fm[j]) * c;
        } else {
            for (int j = 0; j < n2; ++j) o[j] = (fp[j] - fm[j]) * c;
        }
    }
}

void d2h_comp(const GridSpec& g, const double* f, double* out) {
    const int n1 = g.n1, n2 = g.n2;
    const double c = 1.0 / (2.0 * g.h);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n1; ++i) {
        const double* f0 = f + g.idx(i, 0);
        double* o = out + g.idx(i, 0);
        for (int j = 0; j < n2; ++j) {
            const int jm = j > 0 ? j - 1 : n2 - 1;
            const int jp = j < n2 - 1 ? j + 1 : 0;
            o[j] = (f0[jp] - f0[jm]) * c;
        }
    }
}

void laplacian_comp(const GridSpec& g, const double* f, double* out) {
    std::vector<double> t1(g.npoints()), t2(g.npoints());
    d1h_comp(g, f, t1.data());
    d1h_comp(g, t1.data(), out);
    d2h_comp(g, f, t1.data());
    d2h_comp(g, t1.data(), t2.data());
    const std::size_t n = g.npoints();
#pragma omp parallel for schedule(static)
    for (std::size_t p = 0; p < n; ++p) out[p] += t2[p];
}

ScalarField div_h(const PlanarField& p) {
    ScalarField out(p.grid);
    d1h_comp(p.grid, p.comp(0), out.comp(0));
    std::vector<double> t(p.grid.npoints());
    d2h_comp(p.grid, p.comp(1), t.data());
    const std::size_t n = p.grid.npoints();
    double* o = out.comp(0);
#pragma omp parallel for schedule(static)
    for (std::size_t q = 0; q < n; ++q) o[q] += t[q];
    return out;
}

double dot_h(const GridSpec& g, const double* a, const double* b, std::size_t len) {
    std::vector<double> prod(len);
#pragma omp parallel for schedule(static)
    for (std::size_t p = 0; p < len; ++p) prod[p] = a[p] * b[p];
    return g.h * g.h * pairwise_sum(prod.data(), len);
}

double normalize_sphere(MagnetizationField& m) {
    const GridSpec& g = m.grid;
    const std::size_t np = g.npoints();
    double* m1 = m.comp(0);
    double* m2 = m.comp(1);
    double* m3 = m.comp(2);
    double dev = 0.0;
    // interior columns only: skip i = 0 and i = n1-1
#pragma omp parallel for schedule(static) reduction(max : dev)
    for (int i = 1; i < g.n1 - 1; ++i) {
        for (int j = 0; j < g.n2; ++j) {
            const std::size_t p = g.idx(i, j);
            const double r = std::sqrt(m1[p] * m1[p] + m2[p] * m2[p] + m3[p] * m3[p]);
            dev = std::max(dev, std::abs(r - 1.0));
            const double s = 1.0 / r;
            m1[p] *= s;
            m2[p] *= s;
            m3[p] *= s;
        }
    }
    (void)np;
    return dev;
}

}  // namespace neelsim
