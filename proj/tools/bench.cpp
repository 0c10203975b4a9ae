// kernel benchmark: OpenMP implementations against the serial reference.
// The maps must agree bitwise; the reductions differ only through summation
// order (the parallel side uses the fixed pairwise tree, so its value is
// independent of the thread count).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "neelsim/grid_ops.hpp"
#include "neelsim/s1_approx.hpp"
#include "neelsim/serial_ref.hpp"

using namespace neelsim;
using clock_t_ = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
    f();  // warm up
    const auto t0 = clock_t_::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = clock_t_::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = (argc > 1) ? std::atoi(argv[1]) : 512;
    const int reps = (argc > 2) ? std::atoi(argv[2]) : 20;
    GridSpec g = GridSpec::make(n);
    const std::size_t np = g.npoints();

    ScalarField f(g), out_par(g), out_ser(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j)
            f.at(0, i, j) = std::sin(1.7 * g.x1(i)) * std::cos(2.0 * M_PI * g.x2(j)) +
                            0.3 * g.x1(i) * g.x1(i);

    PlanarField u(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const double th = 1.3 * g.x1(i) + 2.0 * M_PI * g.x2(j);
            u.at(0, i, j) = 0.9 * std::cos(th);
            u.at(1, i, j) = 0.9 * std::sin(th);
        }

    std::printf("grid %d x %d (n = %d), %d reps per kernel\n", g.n1, g.n2, n, reps);
    std::printf("%-14s %12s %12s %9s %12s\n", "kernel", "serial ms", "openmp ms", "speedup",
                "max |diff|");

    auto report = [&](const char* name, double ts, double tp, double diff) {
        std::printf("%-14s %12.3f %12.3f %8.2fx %12.3e\n", name, ts, tp, ts / tp, diff);
    };

    {
        const double ts = time_ms([&] { ref::d1h_comp(g, f.comp(0), out_ser.comp(0)); }, reps);
        const double tp = time_ms([&] { d1h_comp(g, f.comp(0), out_par.comp(0)); }, reps);
        report("d1h", ts, tp, max_abs_diff(out_ser.v, out_par.v));
    }
    {
        const double ts = time_ms([&] { ref::d2h_comp(g, f.comp(0), out_ser.comp(0)); }, reps);
        const double tp = time_ms([&] { d2h_comp(g, f.comp(0), out_par.comp(0)); }, reps);
        report("d2h", ts, tp, max_abs_diff(out_ser.v, out_par.v));
    }
    {
        const double ts =
            time_ms([&] { ref::laplacian_comp(g, f.comp(0), out_ser.comp(0)); }, reps);
        const double tp = time_ms([&] { laplacian_comp(g, f.comp(0), out_par.comp(0)); }, reps);
        report("laplacian", ts, tp, max_abs_diff(out_ser.v, out_par.v));
    }
    {
        double rs = 0.0, rp = 0.0;
        const double ts = time_ms([&] { rs = ref::dot_h(g, f.comp(0), f.comp(0), np); }, reps);
        const double tp = time_ms([&] { rp = dot_h(g, f.comp(0), f.comp(0), np); }, reps);
        report("dot_h", ts, tp, std::fabs(rs - rp) / std::fabs(rs));
    }
    {
        ScalarField gs(g), gp(g);
        const double ts = time_ms(
            [&] { ref::gl_density(g, u.comp(0), u.comp(1), 0.05, gs.comp(0)); }, reps);
        const double tp = time_ms([&] { gp = gl_density(u, 0.05); }, reps);
        report("gl_density", ts, tp, max_abs_diff(gs.v, gp.v));
    }
    {
        MagnetizationField ms(g), mp(g);
        for (int i = 0; i < g.n1; ++i)
            for (int j = 0; j < g.n2; ++j) {
                ms.at(0, i, j) = mp.at(0, i, j) = u.at(0, i, j);
                ms.at(1, i, j) = mp.at(1, i, j) = u.at(1, i, j);
                ms.at(2, i, j) = mp.at(2, i, j) = 0.4;
            }
        const double ts = time_ms([&] { ref::normalize_sphere(ms); }, reps);
        const double tp = time_ms([&] { normalize_sphere(mp); }, reps);
        report("normalize", ts, tp, max_abs_diff(ms.v, mp.v));
    }
    std::printf("\nnote: dot_h entries are relative; maps must be exactly 0.\n");
    return 0;
}
