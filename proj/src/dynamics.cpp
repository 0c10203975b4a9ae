#include "neelsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "neelsim/grid_ops.hpp"

namespace neelsim {

namespace {

// max ||m|-1| over interior columns without modifying m
double norm_deviation(const MagnetizationField& m) {
    const GridSpec& g = m.grid;
    const double* a = m.comp(0);
    const double* b = m.comp(1);
    const double* c = m.comp(2);
    double dev = 0.0;
#pragma omp parallel for reduction(max : dev)
    for (int i = 1; i < g.n1 - 1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const std::size_t s = g.idx(i, j);
            const double r = std::sqrt(a[s] * a[s] + b[s] * b[s] + c[s] * c[s]);
            dev = std::max(dev, std::fabs(r - 1.0));
        }
    return dev;
}

// out = base + s1*k1 (interior columns only; boundary keeps base values)
void stage_combine(const MagnetizationField& base, double s1, const MagnetizationField& k1,
                   MagnetizationField& out) {
    const GridSpec& g = base.grid;
    for (int c = 0; c < 3; ++c) {
        const double* b = base.comp(c);
        const double* k = k1.comp(c);
        double* o = out.comp(c);
#pragma omp parallel for
        for (int i = 0; i < g.n1; ++i) {
            const bool bd = (i == 0 || i == g.n1 - 1);
            for (int j = 0; j < g.n2; ++j) {
                const std::size_t s = g.idx(i, j);
                o[s] = bd ? b[s] : b[s] + s1 * k[s];
            }
        }
    }
}

}  // namespace

double stability_ceiling(const ModelParams& p, const GridSpec& g, double cfl) {
    const double hh = g.h * g.h;
    return cfl * std::min({p.eps * p.eps, 0.25 * hh, p.delta * hh});
}

void rhs(const MagnetizationField& m, double t, const ModelParams& p,
         const SpectralWorkspace& ws, const SpinCurrent& v, MagnetizationField& out) {
    require_same_grid(m.grid, out.grid, "rhs");
    const GridSpec& g = m.grid;
    MagnetizationField grad = energy_grad(m, p, ws);

    MagnetizationField dm1(g), dm2(g);
    if (!v.zero) {
        dm1 = d1h(m);
        dm2 = d2h(m);
    }

    const double alpha = p.alpha();
    const double beta = p.beta();
    const double* mv[3] = {m.comp(0), m.comp(1), m.comp(2)};
    const double* gv[3] = {grad.comp(0), grad.comp(1), grad.comp(2)};
    const double* p1[3] = {dm1.comp(0), dm1.comp(1), dm1.comp(2)};
    const double* p2[3] = {dm2.comp(0), dm2.comp(1), dm2.comp(2)};
    double* ov[3] = {out.comp(0), out.comp(1), out.comp(2)};

#pragma omp parallel for
    for (int i = 0; i < g.n1; ++i) {
        const bool bd = (i == 0 || i == g.n1 - 1);
        for (int j = 0; j < g.n2; ++j) {
            const std::size_t s = g.idx(i, j);
            if (bd) {
                ov[0][s] = ov[1][s] = ov[2][s] = 0.0;
                continue;
            }
            const std::array<double, 3> mm{mv[0][s], mv[1][s], mv[2][s]};
            // y = beta grad E - (v.grad_h)m - m x (v.grad_h)m
            std::array<double, 3> y{beta * gv[0][s], beta * gv[1][s], beta * gv[2][s]};
            if (!v.zero) {
                const auto vv = v.eval(t, g.x1(i), g.x2(j));
                const std::array<double, 3> w{vv[0] * p1[0][s] + vv[1] * p2[0][s],
                                              vv[0] * p1[1][s] + vv[1] * p2[1][s],
                                              vv[0] * p1[2][s] + vv[1] * p2[2][s]};
                y[0] -= w[0] + (mm[1] * w[2] - mm[2] * w[1]);
                y[1] -= w[1] + (mm[2] * w[0] - mm[0] * w[2]);
                y[2] -= w[2] + (mm[0] * w[1] - mm[1] * w[0]);
            }
            const std::array<double, 3> phi{mm[1] * y[2] - mm[2] * y[1],
                                            mm[2] * y[0] - mm[0] * y[2],
                                            mm[0] * y[1] - mm[1] * y[0]};
            const auto r = a_inv(mm, phi, alpha);
            ov[0][s] = -r[0];
            ov[1][s] = -r[1];
            ov[2][s] = -r[2];
        }
    }
}

double step(MagnetizationField& m, double t, double dt, const IntegratorConfig& cfg,
            const ModelParams& p, const SpectralWorkspace& ws, const SpinCurrent& v,
            bool renormalize) {
    const GridSpec& g = m.grid;
    MagnetizationField k1(g), k2(g), stage(g);

    if (cfg.scheme == Scheme::midpoint) {
        rhs(m, t, p, ws, v, k1);
        stage_combine(m, 0.5 * dt, k1, stage);
        rhs(stage, t + 0.5 * dt, p, ws, v, k2);
        stage_combine(m, dt, k2, m);
    } else {
        MagnetizationField k3(g), k4(g);
        rhs(m, t, p, ws, v, k1);
        stage_combine(m, 0.5 * dt, k1, stage);
        rhs(stage, t + 0.5 * dt, p, ws, v, k2);
        stage_combine(m, 0.5 * dt, k2, stage);
        rhs(stage, t + 0.5 * dt, p, ws, v, k3);
        stage_combine(m, dt, k3, stage);
        rhs(stage, t + dt, p, ws, v, k4);
        const double c = dt / 6.0;
        for (int cc = 0; cc < 3; ++cc) {
            double* mm = m.comp(cc);
            const double* a = k1.comp(cc);
            const double* b = k2.comp(cc);
            const double* d = k3.comp(cc);
            const double* e = k4.comp(cc);
#pragma omp parallel for
            for (int i = 1; i < g.n1 - 1; ++i)
                for (int j = 0; j < g.n2; ++j) {
                    const std::size_t s = g.idx(i, j);
                    mm[s] += c * (a[s] + 2.0 * b[s] + 2.0 * d[s] + e[s]);
                }
        }
    }

    if (renormalize) return normalize_sphere(m);
    return norm_deviation(m);
}

SimResult simulate(const MagnetizationField& m0, double T, const IntegratorConfig& cfg,
                   const ModelParams& p, const SpectralWorkspace& ws, const SpinCurrent& v) {
    p.validate();
    if (!(T > 0.0)) throw std::invalid_argument("simulate: horizon T must be positive");
    const GridSpec& g = m0.grid;
    const double ceiling_dt = stability_ceiling(p, g, cfg.cfl_safety);
    double dt = (cfg.dt > 0.0) ? cfg.dt : ceiling_dt;
    if (dt > ceiling_dt * (1.0 + 1e-12))
        throw std::invalid_argument("simulate: dt exceeds the stability ceiling");

    const long nsteps = std::max<long>(1, static_cast<long>(std::ceil(T / dt - 1e-9)));
    dt = T / static_cast<double>(nsteps);
    const long stride =
        (cfg.sample_every > 0) ? cfg.sample_every : std::max<long>(1, nsteps / 64);

    SimResult res;
    res.m = m0;
    res.dt = dt;
    res.steps = nsteps;

    const double E0 = energy(m0, p, ws).total;
    double v_integral = 0.0;  // int_0^t ||v||_inf^2
    double sup_prev = v.zero ? 0.0 : v.sup_sq(0.0);

    auto push_row = [&](double t, double window, const MagnetizationField* prev,
                        double dev_window) {
        EnergyBreakdown e = energy(res.m, p, ws);
        TraceRow row;
        row.t = t;
        row.exchange = e.exchange;
        row.anisotropy = e.anisotropy;
        row.nonlocal = e.nonlocal;
        row.total = e.total;
        row.ceiling = gronwall_ceiling(E0, p.alpha(), p.beta(), v_integral);
        row.max_norm_dev = dev_window;
        if (prev != nullptr && window > 0.0) {
            MagnetizationField diff(g);
            for (std::size_t s = 0; s < diff.v.size(); ++s)
                diff.v[s] = res.m.v[s] - prev->v[s];
            double l2 = norm_h_sq(diff);
            double hm1 = 0.0;
            ScalarField dc(g);
            for (int c = 0; c < 3; ++c) {
                std::copy(diff.comp(c), diff.comp(c) + g.npoints(), dc.v.begin());
                hm1 += fractional_norm_sq(ws, dc, -1.0);
            }
            res.l2_rate_sq_integral += l2 / window;
            res.hminus1_rate_sq_integral += hm1 / window;
            row.hminus1_rate = std::sqrt(hm1) / window;
        }
        res.trace.push_back(row);
        return e.total;
    };

    double prev_total = push_row(0.0, 0.0, nullptr, 0.0);
    MagnetizationField prev = res.m;
    double t_prev_sample = 0.0;
    double dev_window = 0.0;

    for (long k = 0; k < nsteps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const bool renorm = (cfg.renorm_every <= 1) || ((k + 1) % cfg.renorm_every == 0);
        const double dev = step(res.m, t, dt, cfg, p, ws, v, renorm);
        dev_window = std::max(dev_window, dev);
        res.max_norm_dev = std::max(res.max_norm_dev, dev);

        if (!v.zero) {
            const double sup_next = v.sup_sq(t + dt);
            v_integral += 0.5 * (sup_prev + sup_next) * dt;
            sup_prev = sup_next;
        }

        if ((k + 1) % stride == 0 || k + 1 == nsteps) {
            const double t_now = static_cast<double>(k + 1) * dt;
            if (t_now == t_prev_sample) continue;
            const double Et = push_row(t_now, t_now - t_prev_sample, &prev, dev_window);
            if (!std::isfinite(Et)) {
                res.status = SimStatus::diverged;
                return res;
            }
            const double cap = res.trace.back().ceiling;
            if (Et > cap * 1.02 + 1e-12) {
                res.status = SimStatus::ceiling_violation;
                return res;
            }
            // without a current the flow is dissipative: each sample window
            // must also be non-increasing within the same slack
            if (v.zero && Et > prev_total * 1.02 + 1e-12) {
                res.status = SimStatus::ceiling_violation;
                return res;
            }
            prev_total = Et;
            prev = res.m;
            t_prev_sample = t_now;
            dev_window = 0.0;
        }
    }
    return res;
}

std::pair<double, double> time_derivative_norms(const std::vector<MagnetizationField>& samples,
                                                double dt_sample, const SpectralWorkspace& ws) {
    if (samples.size() < 2)
        throw std::invalid_argument("time_derivative_norms: need at least 2 samples");
    if (dt_sample <= 0.0)
        throw std::invalid_argument("time_derivative_norms: sample spacing must be positive");
    const GridSpec& g = samples.front().grid;
    double l2_int = 0.0, hm1_int = 0.0;
    MagnetizationField diff(g);
    ScalarField dc(g);
    for (std::size_t s = 1; s < samples.size(); ++s) {
        require_same_grid(g, samples[s].grid, "time_derivative_norms");
        for (std::size_t q = 0; q < diff.v.size(); ++q)
            diff.v[q] = samples[s].v[q] - samples[s - 1].v[q];
        l2_int += norm_h_sq(diff) / dt_sample;
        for (int c = 0; c < 3; ++c) {
            std::copy(diff.comp(c), diff.comp(c) + g.npoints(), dc.v.begin());
            hm1_int += fractional_norm_sq(ws, dc, -1.0) / dt_sample;
        }
    }
    return {std::sqrt(l2_int), std::sqrt(hm1_int)};
}

}  // namespace neelsim
