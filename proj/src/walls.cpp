#include "neelsim/walls.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "neelsim/grid_ops.hpp"
#include "neelsim/reduce.hpp"

namespace neelsim {

namespace {

// one-dimensional analogue of d1h: centered inside, one-sided halves at the
// edge nodes
void d1_1d(int P, double h, const double* f, double* out) {
    const double c = 0.5 / h;
    out[0] = c * (f[1] - f[0]);
    for (int i = 1; i < P - 1; ++i) out[i] = c * (f[i + 1] - f[i - 1]);
    out[P - 1] = c * (f[P - 1] - f[P - 2]);
}

// transpose of the matrix behind d1_1d
void d1T_1d(int P, double h, const double* y, double* out) {
    const double c = 0.5 / h;
    out[0] = -c * (y[0] + y[1]);
    out[1] = c * (y[0] - y[2]);
    for (int i = 2; i < P - 2; ++i) out[i] = c * (y[i - 1] - y[i + 1]);
    out[P - 2] = c * (y[P - 3] - y[P - 1]);
    out[P - 1] = c * (y[P - 2] + y[P - 1]);
}

double boundary_m2(double m1inf) { return std::sqrt(std::max(0.0, 1.0 - m1inf * m1inf)); }

// interior DST coefficients of m1 - m1inf
std::vector<double> stray_coeffs(const WallProfile1D& w, const Spectral1D& sp) {
    std::vector<double> u(sp.N);
    for (int i = 0; i < sp.N; ++i) u[i] = w.m1[i + 1] - w.m1inf;
    sp.dst(u.data());
    return u;
}

struct Grad1D {
    std::vector<double> g1, g2;
};

// gradient of the 1D energy in the h-weighted metric, before tangent
// projection
Grad1D wall_grad(const WallProfile1D& w, double delta, const Spectral1D& sp) {
    const int P = w.npts();
    Grad1D g{std::vector<double>(P), std::vector<double>(P)};
    std::vector<double> d(P), dt(P);

    d1_1d(P, w.h, w.m1.data(), d.data());
    d1T_1d(P, w.h, d.data(), dt.data());
    for (int i = 0; i < P; ++i) g.g1[i] = 2.0 * dt[i];
    d1_1d(P, w.h, w.m2.data(), d.data());
    d1T_1d(P, w.h, d.data(), dt.data());
    for (int i = 0; i < P; ++i) g.g2[i] = 2.0 * dt[i];

    std::vector<double> c = stray_coeffs(w, sp);
    for (int k = 0; k < sp.N; ++k) c[k] *= std::sqrt(sp.lam[k]);
    sp.dst(c.data());
    const double f = 1.0 / (2.0 * delta * (sp.N + 1));
    for (int i = 0; i < sp.N; ++i) g.g1[i + 1] += f * c[i];
    return g;
}

void tangent_project(const WallProfile1D& w, Grad1D& g) {
    const int P = w.npts();
    for (int i = 0; i < P; ++i) {
        const double d = g.g1[i] * w.m1[i] + g.g2[i] * w.m2[i];
        g.g1[i] -= d * w.m1[i];
        g.g2[i] -= d * w.m2[i];
    }
    g.g1[0] = g.g2[0] = g.g1[P - 1] = g.g2[P - 1] = 0.0;
}

WallProfile1D take_step_1d(const WallProfile1D& x, const Grad1D& g, double s) {
    WallProfile1D y = x;
    const int P = x.npts();
    for (int i = 1; i < P - 1; ++i) {
        double a = x.m1[i] - s * g.g1[i];
        double b = x.m2[i] - s * g.g2[i];
        const double r = std::sqrt(a * a + b * b);
        if (r > 0.0) {
            a /= r;
            b /= r;
        } else {
            a = 1.0;
            b = 0.0;
        }
        y.m1[i] = a;
        y.m2[i] = b;
    }
    return y;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (x[i] - xm) * (y[i] - ym);
        den += (x[i] - xm) * (x[i] - xm);
    }
    if (den == 0.0) throw std::invalid_argument("vortex_probe: need at least two distinct eps");
    return num / den;
}

// median-interval midpoint of nonnegative masses w_i at positions x(i)
double median_center(const std::vector<double>& mass, const std::function<double(int)>& pos) {
    const int P = static_cast<int>(mass.size());
    double total = 0.0;
    for (double v : mass) total += v;
    if (!(total > 0.0)) throw std::domain_error("detect_wall_center: density has no mass");
    const double half = 0.5 * total;
    const double tiny = total * 1e-13;
    int lo = P - 1;
    double cum = 0.0;
    for (int i = 0; i < P; ++i) {
        cum += mass[i];
        if (cum >= half - tiny) {
            lo = i;
            break;
        }
    }
    int hi = lo;
    cum = 0.0;
    for (int i = 0; i < P; ++i) {
        if (cum <= half + tiny) hi = i;
        cum += mass[i];
    }
    return 0.5 * (pos(lo) + pos(std::max(hi, lo)));
}

}  // namespace

WallProfile1D::WallProfile1D(int n_, double m1inf_)
    : n(n_), h(1.0 / n_), m1inf(m1inf_), m1(2 * n_ + 1, 1.0), m2(2 * n_ + 1, 0.0) {
    if (n_ < 4) throw std::invalid_argument("WallProfile1D: resolution n must be at least 4");
    enforce_constraints();
}

void WallProfile1D::enforce_constraints() {
    const int P = npts();
    const double b2 = boundary_m2(m1inf);
    m1[0] = m1inf;
    m2[0] = -b2;
    m1[P - 1] = m1inf;
    m2[P - 1] = b2;
    for (int i = 1; i < P - 1; ++i) {
        const double r = std::sqrt(m1[i] * m1[i] + m2[i] * m2[i]);
        if (r > 0.0) {
            m1[i] /= r;
            m2[i] /= r;
        } else {
            m1[i] = 1.0;
            m2[i] = 0.0;
        }
    }
}

MagnetizationField straight_wall(double x1_star, double m1inf, const GridSpec& g) {
    if (x1_star < -1.0 || x1_star > 1.0)
        throw std::invalid_argument("straight_wall: x1_star outside [-1,1]");
    const double b2 = boundary_m2(m1inf);
    MagnetizationField m(g);
    for (int i = 0; i < g.n1; ++i) {
        const double m2v = (g.x1(i) < x1_star) ? -b2 : b2;
        for (int j = 0; j < g.n2; ++j) {
            m.at(0, i, j) = m1inf;
            m.at(1, i, j) = m2v;
            m.at(2, i, j) = 0.0;
        }
    }
    return m;
}

WallProfile1D neel_ansatz(double delta, double m1inf, int n, double gamma) {
    if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("neel_ansatz: delta in (0,1/2)");
    WallProfile1D w(n, m1inf);
    const double theta_inf = std::acos(std::min(1.0, std::max(-1.0, m1inf)));
    const double xm = std::min(0.45, delta * std::log(1.0 / delta));
    const double core_cap = std::tanh(1.0 / delta);
    const double log_xm = std::log(1.0 / xm);
    const int P = w.npts();
    for (int i = 0; i < P; ++i) {
        const double x = w.x(i);
        const double ax = std::fabs(x);
        const double core = std::tanh(ax / delta) / core_cap;
        double tail = 0.0;
        if (ax >= xm) tail = 1.0 - std::log(1.0 / std::max(ax, 1e-300)) / log_xm;
        tail = std::min(1.0, std::max(0.0, tail));
        double psi = (1.0 - gamma) * core + gamma * tail;
        if (x < 0.0) psi = -psi;
        const double theta = theta_inf * psi;
        w.m1[i] = std::cos(theta);
        w.m2[i] = std::sin(theta);
    }
    w.enforce_constraints();
    return w;
}

WallProfile1D smoothed_step(double m1inf, int n, double width) {
    WallProfile1D w(n, m1inf);
    const double theta_inf = std::acos(std::min(1.0, std::max(-1.0, m1inf)));
    const int P = w.npts();
    for (int i = 0; i < P; ++i) {
        const double t = std::min(1.0, std::max(-1.0, w.x(i) / width));
        const double psi = 0.5 * t * (3.0 - t * t);
        const double theta = theta_inf * psi;
        w.m1[i] = std::cos(theta);
        w.m2[i] = std::sin(theta);
    }
    w.enforce_constraints();
    return w;
}

WallEnergy wall_energy(const WallProfile1D& w, double delta, const Spectral1D& sp) {
    if (sp.n != w.n) throw std::invalid_argument("wall_energy: spectral workspace resolution");
    const int P = w.npts();
    std::vector<double> d(P);
    WallEnergy e;
    d1_1d(P, w.h, w.m1.data(), d.data());
    for (int i = 0; i < P; ++i) e.exchange += w.h * d[i] * d[i];
    d1_1d(P, w.h, w.m2.data(), d.data());
    for (int i = 0; i < P; ++i) e.exchange += w.h * d[i] * d[i];

    const std::vector<double> c = stray_coeffs(w, sp);
    const double f = w.h / (2.0 * (sp.N + 1)) / (2.0 * delta);
    for (int k = 0; k < sp.N; ++k) e.nonlocal += f * c[k] * c[k] * std::sqrt(sp.lam[k]);
    e.total = e.exchange + e.nonlocal;
    return e;
}

std::vector<double> wall_density(const WallProfile1D& w, double delta, const Spectral1D& sp) {
    if (sp.n != w.n) throw std::invalid_argument("wall_density: spectral workspace resolution");
    const int P = w.npts();
    std::vector<double> out(P, 0.0), d(P);
    d1_1d(P, w.h, w.m1.data(), d.data());
    for (int i = 0; i < P; ++i) out[i] += d[i] * d[i];
    d1_1d(P, w.h, w.m2.data(), d.data());
    for (int i = 0; i < P; ++i) out[i] += d[i] * d[i];

    std::vector<double> c = stray_coeffs(w, sp);
    for (int k = 0; k < sp.N; ++k) c[k] *= std::pow(sp.lam[k], 0.25);
    sp.dst(c.data());
    const double inv_scale = 1.0 / sp.round_trip_scale();
    for (int i = 0; i < sp.N; ++i) {
        const double v = c[i] * inv_scale;
        out[i + 1] += v * v / (2.0 * delta);
    }
    return out;
}

RelaxReport1D relax_profile(const WallProfile1D& init, double delta, const Spectral1D& sp,
                            double tol, long max_iter) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("relax_profile: delta in (0,1/2)");
    WallProfile1D x = init;
    x.enforce_constraints();
    const int P = x.npts();

    double E = wall_energy(x, delta, sp).total;
    Grad1D g = wall_grad(x, delta, sp);
    tangent_project(x, g);

    double s = 1e-3;
    int small_streak = 0;
    RelaxReport1D rep;
    rep.converged = false;

    long it = 0;
    for (; it < max_iter; ++it) {
        double s_try = s;
        WallProfile1D y;
        double Ey = E;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            y = take_step_1d(x, g, s_try);
            Ey = wall_energy(y, delta, sp).total;
            if (Ey <= E) {
                accepted = true;
                break;
            }
            s_try *= 0.5;
        }
        if (!accepted) {
            rep.converged = small_streak > 0;
            break;
        }
        const double rel = (E - Ey) / std::max(std::fabs(E), 1e-300);

        Grad1D gy = wall_grad(y, delta, sp);
        tangent_project(y, gy);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < P; ++i) {
            const double dx1 = y.m1[i] - x.m1[i];
            const double dx2 = y.m2[i] - x.m2[i];
            num += dx1 * dx1 + dx2 * dx2;
            den += dx1 * (gy.g1[i] - g.g1[i]) + dx2 * (gy.g2[i] - g.g2[i]);
        }
        s = (den > 0.0 && num > 0.0) ? std::min(std::max(num / den, 1e-12), 10.0) : s_try;

        x = std::move(y);
        E = Ey;
        g = std::move(gy);

        if (rel < tol) {
            if (++small_streak >= 5) {
                rep.converged = true;
                ++it;
                break;
            }
        } else {
            small_streak = 0;
        }
    }

    rep.profile = std::move(x);
    rep.energy = wall_energy(rep.profile, delta, sp);
    rep.iterations = it;
    return rep;
}

double wall_energy_asymptotic(double delta, double m1inf) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("wall_energy_asymptotic: delta in (0,1/2)");
    const double d = 1.0 - m1inf;
    return M_PI * d * d / (2.0 * delta * std::log(1.0 / delta));
}

double detect_wall_center(const ScalarField& density) {
    const GridSpec& g = density.grid;
    std::vector<double> marg(g.n1, 0.0);
    for (int i = 0; i < g.n1; ++i) {
        double s = 0.0;
        for (int j = 0; j < g.n2; ++j) s += density.at(0, i, j);
        marg[i] = s;
    }
    return median_center(marg, [&g](int i) { return g.x1(i); });
}

double detect_wall_center_1d(const std::vector<double>& density, int n) {
    if (static_cast<int>(density.size()) != 2 * n + 1)
        throw std::invalid_argument("detect_wall_center_1d: length mismatch");
    const double h = 1.0 / n;
    return median_center(density, [h](int i) { return -1.0 + h * i; });
}

double concentration_fraction(const ScalarField& density, double x1_star, double w) {
    if (!(w > 0.0)) throw std::invalid_argument("concentration_fraction: width must be positive");
    const GridSpec& g = density.grid;
    double total = 0.0, inside = 0.0;
    for (int i = 0; i < g.n1; ++i) {
        double s = 0.0;
        for (int j = 0; j < g.n2; ++j) s += density.at(0, i, j);
        total += s;
        if (std::fabs(g.x1(i) - x1_star) <= w) inside += s;
    }
    if (!(total > 0.0)) throw std::domain_error("concentration_fraction: density has no mass");
    return inside / total;
}

double concentration_fraction_1d(const std::vector<double>& density, int n, double x1_star,
                                 double w) {
    if (!(w > 0.0)) throw std::invalid_argument("concentration_fraction: width must be positive");
    const double h = 1.0 / n;
    double total = 0.0, inside = 0.0;
    for (std::size_t i = 0; i < density.size(); ++i) {
        total += density[i];
        if (std::fabs(-1.0 + h * static_cast<double>(i) - x1_star) <= w) inside += density[i];
    }
    if (!(total > 0.0)) throw std::domain_error("concentration_fraction: density has no mass");
    return inside / total;
}

MagnetizationField extend_profile_2d(const WallProfile1D& w, const GridSpec& g) {
    if (g.n != w.n) throw std::invalid_argument("extend_profile_2d: resolution mismatch");
    MagnetizationField m(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            m.at(0, i, j) = w.m1[i];
            m.at(1, i, j) = w.m2[i];
            m.at(2, i, j) = 0.0;
        }
    return m;
}

MagnetizationField with_out_of_plane_bump(const MagnetizationField& m, double amplitude,
                                          double width, double x1c, double x2c) {
    if (!(width > 0.0))
        throw std::invalid_argument("with_out_of_plane_bump: width must be positive");
    if (!(std::fabs(amplitude) < 1.0))
        throw std::invalid_argument("with_out_of_plane_bump: |amplitude| must be below 1");
    const GridSpec& g = m.grid;
    MagnetizationField out = m;
    for (int i = 1; i < g.n1 - 1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const double dx = g.x1(i) - x1c;
            double dy = g.x2(j) - x2c;
            dy -= std::round(dy);  // periodic distance on T
            const std::size_t s = g.idx(i, j);
            double b = out.comp(2)[s] + amplitude * std::exp(-(dx * dx + dy * dy) / (width * width));
            b = std::min(0.999999, std::max(-0.999999, b));
            const double rp = std::hypot(out.comp(0)[s], out.comp(1)[s]);
            const double target = std::sqrt(1.0 - b * b);
            if (rp > 0.0) {
                out.comp(0)[s] *= target / rp;
                out.comp(1)[s] *= target / rp;
            } else {
                out.comp(0)[s] = target;
                out.comp(1)[s] = 0.0;
            }
            out.comp(2)[s] = b;
        }
    return out;
}

RelaxReport2D relax_field(const MagnetizationField& init, const ModelParams& p,
                          const SpectralWorkspace& ws, double tol, long max_iter) {
    p.validate();
    const GridSpec& g = init.grid;
    MagnetizationField x = init;
    normalize_sphere(x);

    auto project = [&g](const MagnetizationField& m, MagnetizationField& grad) {
        for (int i = 0; i < g.n1; ++i) {
            const bool bd = (i == 0 || i == g.n1 - 1);
            for (int j = 0; j < g.n2; ++j) {
                const std::size_t s = g.idx(i, j);
                if (bd) {
                    grad.comp(0)[s] = grad.comp(1)[s] = grad.comp(2)[s] = 0.0;
                    continue;
                }
                double d = 0.0;
                for (int c = 0; c < 3; ++c) d += grad.comp(c)[s] * m.comp(c)[s];
                for (int c = 0; c < 3; ++c) grad.comp(c)[s] -= d * m.comp(c)[s];
            }
        }
    };
    auto take_step = [&g](const MagnetizationField& m, const MagnetizationField& grad, double s) {
        MagnetizationField y = m;
        for (int c = 0; c < 3; ++c) {
            double* yv = y.comp(c);
            const double* gv = grad.comp(c);
#pragma omp parallel for
            for (int i = 1; i < g.n1 - 1; ++i)
                for (int j = 0; j < g.n2; ++j) {
                    const std::size_t q = g.idx(i, j);
                    yv[q] -= s * gv[q];
                }
        }
        normalize_sphere(y);
        return y;
    };

    double E = energy(x, p, ws).total;
    MagnetizationField grad = energy_grad(x, p, ws);
    project(x, grad);

    double s = 1e-3;
    int small_streak = 0;
    RelaxReport2D rep;
    rep.converged = false;

    long it = 0;
    for (; it < max_iter; ++it) {
        double s_try = s;
        MagnetizationField y(g);
        double Ey = E;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            y = take_step(x, grad, s_try);
            Ey = energy(y, p, ws).total;
            if (Ey <= E) {
                accepted = true;
                break;
            }
            s_try *= 0.5;
        }
        if (!accepted) {
            rep.converged = small_streak > 0;
            break;
        }
        const double rel = (E - Ey) / std::max(std::fabs(E), 1e-300);

        MagnetizationField gy = energy_grad(y, p, ws);
        project(y, gy);
        MagnetizationField dx(g), dg(g);
        for (std::size_t q = 0; q < dx.v.size(); ++q) {
            dx.v[q] = y.v[q] - x.v[q];
            dg.v[q] = gy.v[q] - grad.v[q];
        }
        const double num = inner_h(dx, dx);
        const double den = inner_h(dx, dg);
        s = (den > 0.0 && num > 0.0) ? std::min(std::max(num / den, 1e-12), 10.0) : s_try;

        x = std::move(y);
        E = Ey;
        grad = std::move(gy);

        if (rel < tol) {
            if (++small_streak >= 5) {
                rep.converged = true;
                ++it;
                break;
            }
        } else {
            small_streak = 0;
        }
    }

    rep.m = std::move(x);
    rep.energy = energy(rep.m, p, ws);
    rep.iterations = it;
    return rep;
}

VortexProbe vortex_probe(const std::vector<double>& eps_list, int n) {
    if (eps_list.empty()) throw std::invalid_argument("vortex_probe: empty eps list");
    if (n < 8) throw std::invalid_argument("vortex_probe: resolution n must be at least 8");
    const double hv = 1.0 / n;
    for (double e : eps_list) {
        if (!(e > 0.0 && e <= 0.2))
            throw std::invalid_argument("vortex_probe: eps values must lie in (0, 0.2]");
        if (e < 4.0 * hv)
            throw std::invalid_argument("vortex_probe: grid too coarse (eps < 4h)");
    }

    const int P = 2 * n + 1;
    VortexProbe probe;
    probe.eps = eps_list;
    std::vector<double> u1(static_cast<std::size_t>(P) * P), u2(u1.size());
    std::vector<double> rowsum(P - 1);

    for (double eps : eps_list) {
#pragma omp parallel for
        for (int i = 0; i < P; ++i)
            for (int j = 0; j < P; ++j) {
                const double x = -1.0 + hv * i;
                const double y = -1.0 + hv * j;
                const double r = std::max(std::sqrt(x * x + y * y), eps);
                u1[static_cast<std::size_t>(i) * P + j] = -y / r;
                u2[static_cast<std::size_t>(i) * P + j] = x / r;
            }
#pragma omp parallel for
        for (int i = 0; i < P - 1; ++i) {
            double acc = 0.0;
            for (int j = 0; j < P - 1; ++j) {
                const double x = -1.0 + hv * i;
                const double y = -1.0 + hv * j;
                if (x * x + y * y > 1.0) continue;
                const std::size_t s = static_cast<std::size_t>(i) * P + j;
                const double dx1 = (u1[s + P] - u1[s]) / hv;
                const double dx2 = (u2[s + P] - u2[s]) / hv;
                const double dy1 = (u1[s + 1] - u1[s]) / hv;
                const double dy2 = (u2[s + 1] - u2[s]) / hv;
                const double mod = u1[s] * u1[s] + u2[s] * u2[s];
                acc += dx1 * dx1 + dx2 * dx2 + dy1 * dy1 + dy2 * dy2 +
                       (1.0 - mod) * (1.0 - mod) / (eps * eps);
            }
            rowsum[i] = acc;
        }
        probe.energy.push_back(hv * hv * pairwise_sum(rowsum.data(), rowsum.size()));
    }

    if (eps_list.size() >= 2) {
        std::vector<double> lg(eps_list.size());
        for (std::size_t k = 0; k < eps_list.size(); ++k) lg[k] = std::log(1.0 / eps_list[k]);
        probe.slope = fit_slope(lg, probe.energy);
    }
    return probe;
}

}  // namespace neelsim
