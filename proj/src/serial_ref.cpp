#include "neelsim/serial_ref.hpp"

#include <cmath>
#include <vector>

namespace neelsim::ref {

void d1h_comp(const GridSpec& g, const double* f, double* out) {
    const double c = 1.0 / (2.0 * g.h);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const int im = i > 0 ? i - 1 : 0;
            const int ip = i < g.n1 - 1 ? i + 1 : g.n1 - 1;
            double val;
            if (i == 0)
                val = f[g.idx(ip, j)] - f[g.idx(i, j)];
            else if (i == g.n1 - 1)
                val = f[g.idx(i, j)] - f[g.idx(im, j)];
            else
                val = f[g.idx(ip, j)] - f[g.idx(im, j)];
            out[g.idx(i, j)] = val * c;
        }
}

void d2h_comp(const GridSpec& g, const double* f, double* out) {
    const double c = 1.0 / (2.0 * g.h);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const int jm = j > 0 ? j - 1 : g.n2 - 1;
            const int jp = j < g.n2 - 1 ? j + 1 : 0;
            out[g.idx(i, j)] = (f[g.idx(i, jp)] - f[g.idx(i, jm)]) * c;
        }
}

void laplacian_comp(const GridSpec& g, const double* f, double* out) {
    std::vector<double> t1(g.npoints()), t2(g.npoints());
    d1h_comp(g, f, t1.data());
    d1h_comp(g, t1.data(), out);
    d2h_comp(g, f, t1.data());
    d2h_comp(g, t1.data(), t2.data());
    for (std::size_t p = 0; p < g.npoints(); ++p) out[p] += t2[p];
}

double dot_h(const GridSpec& g, const double* a, const double* b, std::size_t len) {
    double s = 0.0;
    for (std::size_t p = 0; p < len; ++p) s += a[p] * b[p];
    return g.h * g.h * s;
}

double normalize_sphere(MagnetizationField& m) {
    const GridSpec& g = m.grid;
    double* m1 = m.comp(0);
    double* m2 = m.comp(1);
    double* m3 = m.comp(2);
    double dev = 0.0;
    for (int i = 1; i < g.n1 - 1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const std::size_t p = g.idx(i, j);
            const double r = std::sqrt(m1[p] * m1[p] + m2[p] * m2[p] + m3[p] * m3[p]);
            dev = std::max(dev, std::abs(r - 1.0));
            const double s = 1.0 / r;
            m1[p] *= s;
            m2[p] *= s;
            m3[p] *= s;
        }
    return dev;
}

void gl_density(const GridSpec& g, const double* u1, const double* u2, double eps, double* out) {
    std::vector<double> g11(g.npoints()), g12(g.npoints()), g21(g.npoints()), g22(g.npoints());
    d1h_comp(g, u1, g11.data());
    d2h_comp(g, u1, g12.data());
    d1h_comp(g, u2, g21.data());
    d2h_comp(g, u2, g22.data());
    for (std::size_t p = 0; p < g.npoints(); ++p) {
        const double mod2 = u1[p] * u1[p] + u2[p] * u2[p];
        const double pen = (1.0 - mod2) * (1.0 - mod2) / (eps * eps);
        out[p] = g11[p] * g11[p] + g12[p] * g12[p] + g21[p] * g21[p] + g22[p] * g22[p] + pen;
    }
}

}  // namespace neelsim::ref
