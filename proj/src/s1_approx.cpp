#include "neelsim/s1_approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "neelsim/grid_ops.hpp"
#include "neelsim/reduce.hpp"

namespace neelsim {

namespace {

PlanarField planar_part(const MagnetizationField& m) {
    PlanarField p(m.grid);
    const std::size_t np = m.grid.npoints();
    std::memcpy(p.comp(0), m.comp(0), np * sizeof(double));
    std::memcpy(p.comp(1), m.comp(1), np * sizeof(double));
    return p;
}

inline std::size_t cid(int ii, int jj, int ny) {
    return static_cast<std::size_t>(ii) * (ny + 1) + jj;
}

// tensor trapezoid weight of a local cell node
inline double trap_w(int ii, int jj, int nx, int ny) {
    const double wx = (ii == 0 || ii == nx) ? 0.5 : 1.0;
    const double wy = (jj == 0 || jj == ny) ? 0.5 : 1.0;
    return wx * wy;
}

// gradient of the cell energy at interior nodes (ring entries left 0)
void cell_grad(const std::vector<double>& u1, const std::vector<double>& u2, int nx, int ny,
               double hcell, double eps, std::vector<double>& g1, std::vector<double>& g2) {
    std::fill(g1.begin(), g1.end(), 0.0);
    std::fill(g2.begin(), g2.end(), 0.0);
    const double pf = 4.0 * hcell * hcell / (eps * eps);
    for (int ii = 1; ii < nx; ++ii)
        for (int jj = 1; jj < ny; ++jj) {
            const std::size_t s = cid(ii, jj, ny);
            const double a = u1[s], b = u2[s];
            double acc1 = 0.0, acc2 = 0.0;
            const std::size_t nb[4] = {cid(ii - 1, jj, ny), cid(ii + 1, jj, ny),
                                       cid(ii, jj - 1, ny), cid(ii, jj + 1, ny)};
            for (const std::size_t q : nb) {
                acc1 += a - u1[q];
                acc2 += b - u2[q];
            }
            const double mod = a * a + b * b;
            g1[s] = 2.0 * acc1 - pf * a * (1.0 - mod);
            g2[s] = 2.0 * acc2 - pf * b * (1.0 - mod);
        }
}

}  // namespace

ScalarField gl_density(const PlanarField& u, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("gl_density: eps must be positive");
    const GridSpec& g = u.grid;
    PlanarField d1 = d1h(u);
    PlanarField d2 = d2h(u);
    ScalarField out(g);
    const double inv_e2 = 1.0 / (eps * eps);
    const double* u1 = u.comp(0);
    const double* u2 = u.comp(1);
#pragma omp parallel for
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const std::size_t s = g.idx(i, j);
            const double mod = u1[s] * u1[s] + u2[s] * u2[s];
            out.v[s] = d1.comp(0)[s] * d1.comp(0)[s] + d1.comp(1)[s] * d1.comp(1)[s] +
                       d2.comp(0)[s] * d2.comp(0)[s] + d2.comp(1)[s] * d2.comp(1)[s] +
                       (1.0 - mod) * (1.0 - mod) * inv_e2;
        }
    return out;
}

std::vector<CellRef> CellGrid::cells() const {
    std::vector<CellRef> out;
    const int nr = static_cast<int>(rows.size());
    for (std::size_t a = 0; a + 1 < cols.size(); ++a)
        for (int b = 0; b < nr; ++b) {
            CellRef c;
            c.i0 = cols[a];
            c.nx = cols[a + 1] - cols[a];
            c.j0 = rows[b];
            c.ny = (b + 1 < nr) ? rows[b + 1] - rows[b] : grid.n2 - rows[b] + rows[0];
            out.push_back(c);
        }
    return out;
}

CellGrid select_shifts(const PlanarField& mp, double eps, double beta_grid) {
    if (!(eps > 0.0)) throw std::invalid_argument("select_shifts: eps must be positive");
    if (!(beta_grid > 0.0 && beta_grid < 1.0))
        throw std::invalid_argument("select_shifts: beta_grid in (0,1)");
    const GridSpec& g = mp.grid;

    CellGrid cg;
    cg.grid = g;
    cg.beta_grid = beta_grid;
    cg.eps_grid = std::pow(eps, beta_grid);
    cg.s_cells = static_cast<int>(std::ceil(cg.eps_grid / g.h));
    const int s = cg.s_cells;
    if (s < 8)
        throw std::invalid_argument(
            "select_shifts: cells under-resolved (need at least 8 nodes per side)");
    if (2 * s > g.n2 || 4 * s > g.n1 - 1)
        throw std::invalid_argument("select_shifts: grid too small for the cell spacing");

    ScalarField gl = gl_density(mp, eps);

    // line-integrated energies: one per row and per column
    std::vector<double> lrow(g.n2, 0.0), lcol(g.n1, 0.0);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const double v = g.h * gl.v[g.idx(i, j)];
            lrow[j] += v;
            lcol[i] += v;
        }

    // horizontal family: rows congruent to t modulo s, truncated to floor(n2/s)
    // members so the wraparound band also keeps between s and 2s-1 rows
    const int krows = g.n2 / s;
    double best_h = 0.0;
    for (int t = 0; t < s; ++t) {
        double e = 0.0;
        for (int k = 0; k < krows; ++k) e += lrow[t + k * s];
        if (t == 0 || e < best_h) {
            best_h = e;
            cg.shift_t = t;
        }
    }
    for (int k = 0; k < krows; ++k) cg.rows.push_back(cg.shift_t + k * s);

    // vertical family: margin columns congruent to the shift modulo s
    double best_v = 0.0;
    bool have_v = false;
    for (int t = 0; t < s; ++t) {
        double e = 0.0;
        bool any = false;
        for (int i = s + ((t - s) % s + s) % s; i <= g.n1 - 1 - s; i += s) {
            e += lcol[i];
            any = true;
        }
        if (!any) continue;
        if (!have_v || e < best_v) {
            best_v = e;
            cg.shift_s = t;
            have_v = true;
        }
    }
    if (!have_v) throw std::invalid_argument("select_shifts: no admissible vertical lines");
    cg.cols.push_back(0);
    for (int i = s + ((cg.shift_s - s) % s + s) % s; i <= g.n1 - 1 - s; i += s)
        cg.cols.push_back(i);
    cg.cols.push_back(g.n1 - 1);

    cg.line_energy = best_h + best_v;
    double total = 0.0;
    for (double v : gl.v) total += v;
    total *= g.h * g.h;
    cg.bound = 2.0 / cg.eps_grid * total;
    return cg;
}

double cell_energy(const std::vector<double>& u1, const std::vector<double>& u2, int nx, int ny,
                   double hcell, double eps) {
    const double pf = hcell * hcell / (eps * eps);
    double e = 0.0;
    for (int ii = 0; ii <= nx; ++ii)
        for (int jj = 0; jj <= ny; ++jj) {
            const std::size_t p = cid(ii, jj, ny);
            if (ii < nx) {
                const std::size_t q = cid(ii + 1, jj, ny);
                const double a = u1[p] - u1[q], b = u2[p] - u2[q];
                e += a * a + b * b;
            }
            if (jj < ny) {
                const std::size_t q = cid(ii, jj + 1, ny);
                const double a = u1[p] - u1[q], b = u2[p] - u2[q];
                e += a * a + b * b;
            }
            const double mod = u1[p] * u1[p] + u2[p] * u2[p];
            e += pf * trap_w(ii, jj, nx, ny) * (1.0 - mod) * (1.0 - mod);
        }
    return e;
}

GLCellSolution cell_minimize(std::vector<double> u1, std::vector<double> u2, int nx, int ny,
                             double hcell, double eps, double tol, long max_iter) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("cell_minimize: cell too small");
    if (!(eps > 0.0 && hcell > 0.0))
        throw std::invalid_argument("cell_minimize: eps and hcell must be positive");
    const std::size_t nn = static_cast<std::size_t>(nx + 1) * (ny + 1);
    if (u1.size() != nn || u2.size() != nn)
        throw std::invalid_argument("cell_minimize: field size mismatch");

    // Dirichlet data must sit in the closed unit ball (clip fp residue)
    for (std::size_t s = 0; s < nn; ++s) {
        const double r = std::sqrt(u1[s] * u1[s] + u2[s] * u2[s]);
        if (r > 1.0 + 1e-9)
            throw std::invalid_argument("cell_minimize: trace outside the unit ball");
        if (r > 1.0) {
            u1[s] /= r;
            u2[s] /= r;
        }
    }

    GLCellSolution sol;
    sol.nx = nx;
    sol.ny = ny;
    sol.hcell = hcell;
    sol.eps = eps;

    std::vector<double> g1(nn), g2(nn), t1(nn), t2(nn), y1(nn), y2(nn), h1(nn), h2(nn);
    double E = cell_energy(u1, u2, nx, ny, hcell, eps);
    cell_grad(u1, u2, nx, ny, hcell, eps, g1, g2);

    auto take = [&](double s, std::vector<double>& o1, std::vector<double>& o2) {
        o1 = u1;
        o2 = u2;
        for (int ii = 1; ii < nx; ++ii)
            for (int jj = 1; jj < ny; ++jj) {
                const std::size_t p = cid(ii, jj, ny);
                double a = u1[p] - s * g1[p];
                double b = u2[p] - s * g2[p];
                const double r = std::sqrt(a * a + b * b);
                if (r > 1.0) {
                    a /= r;
                    b /= r;
                }
                o1[p] = a;
                o2[p] = b;
            }
    };

    double step = 0.25;
    int small_streak = 0;
    long it = 0;
    for (; it < max_iter; ++it) {
        double s_try = step;
        double Ey = E;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            take(s_try, y1, y2);
            Ey = cell_energy(y1, y2, nx, ny, hcell, eps);
            if (Ey <= E) {
                accepted = true;
                break;
            }
            s_try *= 0.5;
        }
        if (!accepted) {
            sol.converged = small_streak > 0;
            break;
        }
        const double rel = (E - Ey) / std::max(std::fabs(E), 1e-300);

        cell_grad(y1, y2, nx, ny, hcell, eps, h1, h2);
        double num = 0.0, den = 0.0;
        for (std::size_t p = 0; p < nn; ++p) {
            const double dx1 = y1[p] - u1[p], dx2 = y2[p] - u2[p];
            num += dx1 * dx1 + dx2 * dx2;
            den += dx1 * (h1[p] - g1[p]) + dx2 * (h2[p] - g2[p]);
        }
        step = (den > 0.0 && num > 0.0) ? std::min(std::max(num / den, 1e-14), 1e6) : s_try;

        u1.swap(y1);
        u2.swap(y2);
        g1.swap(h1);
        g2.swap(h2);
        E = Ey;

        if (rel < tol) {
            if (++small_streak >= 5) {
                sol.converged = true;
                ++it;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    if (it == max_iter) sol.converged = false;

    sol.iterations = it;
    sol.energy = E;
    double eta = 0.0, res = 0.0;
    cell_grad(u1, u2, nx, ny, hcell, eps, g1, g2);
    const double inv = 1.0 / (2.0 * hcell * hcell);
    for (int ii = 0; ii <= nx; ++ii)
        for (int jj = 0; jj <= ny; ++jj) {
            const std::size_t p = cid(ii, jj, ny);
            eta = std::max(eta, std::fabs(u1[p] * u1[p] + u2[p] * u2[p] - 1.0));
            if (ii > 0 && ii < nx && jj > 0 && jj < ny)
                res = std::max(res, std::hypot(g1[p], g2[p]) * inv);
        }
    sol.eta = eta;
    sol.el_residual = res;
    sol.u1 = std::move(u1);
    sol.u2 = std::move(u2);
    return sol;
}

int degree_of_loop(const std::vector<double>& w1, const std::vector<double>& w2) {
    const std::size_t L = w1.size();
    if (L < 4 || w2.size() != L) throw std::invalid_argument("degree_of_loop: bad loop");
    for (std::size_t k = 0; k < L; ++k)
        if (std::hypot(w1[k], w2[k]) < 0.5)
            throw std::domain_error("degree_of_loop: modulus below 1/2, degree ill-defined");
    double total = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        const std::size_t kn = (k + 1) % L;
        double d = std::atan2(w2[kn], w1[kn]) - std::atan2(w2[k], w1[k]);
        d = std::remainder(d, 2.0 * M_PI);
        if (d <= -M_PI) d += 2.0 * M_PI;
        total += d;
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

int cell_degree(const PlanarField& mp, const CellRef& c) {
    const GridSpec& g = mp.grid;
    std::vector<double> w1, w2;
    auto push = [&](int i, int j) {
        const std::size_t s = g.idx(i, g.wrap2(j));
        w1.push_back(mp.comp(0)[s]);
        w2.push_back(mp.comp(1)[s]);
    };
    for (int ii = 0; ii < c.nx; ++ii) push(c.i0 + ii, c.j0);
    for (int jj = 0; jj < c.ny; ++jj) push(c.i0 + c.nx, c.j0 + jj);
    for (int ii = c.nx; ii > 0; --ii) push(c.i0 + ii, c.j0 + c.ny);
    for (int jj = c.ny; jj > 0; --jj) push(c.i0, c.j0 + jj);
    return degree_of_loop(w1, w2);
}

std::vector<double> extract_cell(const PlanarField& mp, const CellRef& c, int comp) {
    const GridSpec& g = mp.grid;
    std::vector<double> out(static_cast<std::size_t>(c.nx + 1) * (c.ny + 1));
    for (int ii = 0; ii <= c.nx; ++ii)
        for (int jj = 0; jj <= c.ny; ++jj)
            out[cid(ii, jj, c.ny)] = mp.comp(comp)[g.idx(c.i0 + ii, g.wrap2(c.j0 + jj))];
    return out;
}

void deposit_cell(PlanarField& u, const CellRef& c, const GLCellSolution& sol) {
    const GridSpec& g = u.grid;
    for (int ii = 0; ii <= c.nx; ++ii)
        for (int jj = 0; jj <= c.ny; ++jj) {
            const std::size_t s = g.idx(c.i0 + ii, g.wrap2(c.j0 + jj));
            u.comp(0)[s] = sol.u1[cid(ii, jj, c.ny)];
            u.comp(1)[s] = sol.u2[cid(ii, jj, c.ny)];
        }
}

PlanarField project_s1(const PlanarField& u) {
    const GridSpec& g = u.grid;
    PlanarField M(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            const std::size_t s = g.idx(i, j);
            const double a = u.comp(0)[s], b = u.comp(1)[s];
            const double r = std::sqrt(a * a + b * b);
            if (r < 1e-300) {
                std::ostringstream msg;
                msg << "project_s1: vanishing modulus at node (" << i << ", " << j << ")";
                throw std::domain_error(msg.str());
            }
            M.comp(0)[s] = a / r;
            M.comp(1)[s] = b / r;
        }
    return M;
}

double pohozaev_residual(const GLCellSolution& sol) {
    const int nx = sol.nx, ny = sol.ny;
    const double h = sol.hcell, eps = sol.eps;
    const std::vector<double>& u1 = sol.u1;
    const std::vector<double>& u2 = sol.u2;
    const double cx = 0.5 * nx * h, cy = 0.5 * ny * h;

    double A = 0.0;
    for (int ii = 0; ii <= nx; ++ii)
        for (int jj = 0; jj <= ny; ++jj) {
            const std::size_t p = cid(ii, jj, ny);
            const double mod = u1[p] * u1[p] + u2[p] * u2[p];
            A += trap_w(ii, jj, nx, ny) * (1.0 - mod) * (1.0 - mod);
        }
    A *= h * h / (eps * eps);

    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    // side loop: start node, tangent step (di,dj), length, outward normal
    struct Side {
        int i0, j0, di, dj, len;
        double nu1, nu2;
    };
    const Side sides[4] = {{0, 0, 1, 0, nx, 0.0, -1.0},
                           {nx, 0, 0, 1, ny, 1.0, 0.0},
                           {0, ny, 1, 0, nx, 0.0, 1.0},
                           {0, 0, 0, 1, ny, -1.0, 0.0}};
    for (const Side& sd : sides) {
        for (int k = 0; k <= sd.len; ++k) {
            const int ii = sd.i0 + k * sd.di;
            const int jj = sd.j0 + k * sd.dj;
            const std::size_t p = cid(ii, jj, ny);
            const double wl = ((k == 0 || k == sd.len) ? 0.5 : 1.0) * h;
            const double vx = ii * h - cx, vy = jj * h - cy;
            const double vnu = vx * sd.nu1 + vy * sd.nu2;
            const double vtau = vx * sd.di + vy * sd.dj;

            // tangential derivative along the side
            double dt1, dt2;
            if (k == 0) {
                const std::size_t q = cid(ii + sd.di, jj + sd.dj, ny);
                dt1 = (u1[q] - u1[p]) / h;
                dt2 = (u2[q] - u2[p]) / h;
            } else if (k == sd.len) {
                const std::size_t q = cid(ii - sd.di, jj - sd.dj, ny);
                dt1 = (u1[p] - u1[q]) / h;
                dt2 = (u2[p] - u2[q]) / h;
            } else {
                const std::size_t qp = cid(ii + sd.di, jj + sd.dj, ny);
                const std::size_t qm = cid(ii - sd.di, jj - sd.dj, ny);
                dt1 = (u1[qp] - u1[qm]) / (2.0 * h);
                dt2 = (u2[qp] - u2[qm]) / (2.0 * h);
            }
            // outward normal derivative: second-order one-sided into the cell
            const int mi = static_cast<int>(-sd.nu1), mj = static_cast<int>(-sd.nu2);
            const std::size_t q1 = cid(ii + mi, jj + mj, ny);
            const std::size_t q2 = cid(ii + 2 * mi, jj + 2 * mj, ny);
            const double dn1 = -(-3.0 * u1[p] + 4.0 * u1[q1] - u1[q2]) / (2.0 * h);
            const double dn2 = -(-3.0 * u2[p] + 4.0 * u2[q1] - u2[q2]) / (2.0 * h);

            const double mod = u1[p] * u1[p] + u2[p] * u2[p];
            b1 += wl * vnu * (1.0 - mod) * (1.0 - mod);
            b2 += wl * 0.5 * vnu * (dn1 * dn1 + dn2 * dn2 + dt1 * dt1 + dt2 * dt2);
            const double dv1 = vnu * dn1 + vtau * dt1;
            const double dv2 = vnu * dn2 + vtau * dt2;
            b3 -= wl * (dn1 * dv1 + dn2 * dv2);
        }
    }
    b1 *= 0.5 / (eps * eps);

    const double denom = std::fabs(A) + std::fabs(b1) + std::fabs(b2) + std::fabs(b3);
    if (denom < 1e-300) return 0.0;
    return std::fabs(A - (b1 + b2 + b3)) / denom;
}

ModulusReport modulus_report(const std::vector<double>& u1, const std::vector<double>& u2) {
    ModulusReport r;
    r.min_mod = 1e300;
    r.max_mod = -1e300;
    for (std::size_t s = 0; s < u1.size(); ++s) {
        const double m = std::hypot(u1[s], u2[s]);
        r.min_mod = std::min(r.min_mod, m);
        r.max_mod = std::max(r.max_mod, m);
        r.sup_dev = std::max(r.sup_dev, std::fabs(m - 1.0));
    }
    if (u1.empty()) r.min_mod = r.max_mod = 0.0;
    return r;
}

ModulusReport modulus_report(const PlanarField& u) {
    return modulus_report(
        std::vector<double>(u.comp(0), u.comp(0) + u.grid.npoints()),
        std::vector<double>(u.comp(1), u.comp(1) + u.grid.npoints()));
}

ApproxReport approx_pipeline(const MagnetizationField& m, const ModelParams& p,
                             const SpectralWorkspace& ws, double beta_grid, double tol) {
    p.validate();
    const GridSpec& g = m.grid;
    PlanarField mp = planar_part(m);

    ApproxReport rep;
    rep.grid = select_shifts(mp, p.eps, beta_grid);
    rep.kappa = 1.0 / (p.delta * p.log_delta());
    const std::vector<CellRef> cells = rep.grid.cells();
    rep.ncells = static_cast<int>(cells.size());

    PlanarField u = mp;
    for (int c = 0; c < rep.ncells; ++c) {
        const CellRef& cr = cells[c];
        const int deg = cell_degree(mp, cr);
        rep.degrees.push_back(deg);
        rep.max_abs_degree = std::max(rep.max_abs_degree, std::abs(deg));

        GLCellSolution sol =
            cell_minimize(extract_cell(mp, cr, 0), extract_cell(mp, cr, 1), cr.nx, cr.ny, g.h,
                          p.eps, tol);
        sol.id = c;
        rep.max_pohozaev = std::max(rep.max_pohozaev, pohozaev_residual(sol));
        deposit_cell(u, cr, sol);
        rep.cell_solutions.push_back(std::move(sol));
    }

    for (std::size_t s = 0; s < g.npoints(); ++s) {
        const double mod = u.comp(0)[s] * u.comp(0)[s] + u.comp(1)[s] * u.comp(1)[s];
        rep.eta = std::max(rep.eta, std::fabs(mod - 1.0));
    }

    PlanarField M = project_s1(u);
    {
        PlanarField du1 = d1h(u), du2 = d2h(u);
        rep.grad_u_sq = norm_h_sq(du1) + norm_h_sq(du2);
        PlanarField dM1 = d1h(M), dM2 = d2h(M);
        rep.grad_M_sq = norm_h_sq(dM1) + norm_h_sq(dM2);
    }

    MagnetizationField Mf(g);
    std::memcpy(Mf.comp(0), M.comp(0), g.npoints() * sizeof(double));
    std::memcpy(Mf.comp(1), M.comp(1), g.npoints() * sizeof(double));
    std::fill(Mf.comp(2), Mf.comp(2) + g.npoints(), 0.0);

    rep.e_m = energy(m, p, ws).total;
    rep.e_M = energy(Mf, p, ws).total;

    PlanarField diff(g);
    for (std::size_t s = 0; s < diff.v.size(); ++s) diff.v[s] = M.v[s] - mp.v[s];
    rep.l2_diff = norm_h_sq(diff);
    {
        PlanarField dd1 = d1h(diff), dd2 = d2h(diff);
        rep.h1_diff = norm_h_sq(dd1) + norm_h_sq(dd2);
    }

    if (rep.e_m > 0.0) {
        rep.energy_ratio = rep.e_M / rep.e_m;
        rep.l2_ratio = rep.l2_diff / (std::pow(p.eps, 2.0 * beta_grid) * rep.e_m);
        rep.h1_ratio = rep.h1_diff / rep.e_m;
    } else {
        rep.energy_ratio = 1.0;
        rep.l2_ratio = 0.0;
        rep.h1_ratio = 0.0;
    }
    rep.energy_flag = rep.e_M <= 1.05 * rep.e_m + 1e-12;
    rep.M = std::move(Mf);
    return rep;
}

CellStudy gl_cell_study(const std::vector<double>& eps_list, double kappa, double beta_grid,
                        int n_cell, double tol) {
    if (eps_list.empty()) throw std::invalid_argument("gl_cell_study: empty eps list");
    if (!(kappa > 0.0)) throw std::invalid_argument("gl_cell_study: kappa must be positive");
    if (n_cell < 8) throw std::invalid_argument("gl_cell_study: need at least 8 nodes per side");

    CellStudy st;
    st.kappa = kappa;
    st.eps = eps_list;
    for (double eps : eps_list) {
        if (!(eps > 0.0)) throw std::invalid_argument("gl_cell_study: eps must be positive");
        const double ell = std::pow(eps, beta_grid);
        const double hc = ell / n_cell;
        const double q = std::sqrt(kappa) / (2.0 * ell);
        const std::size_t nn = static_cast<std::size_t>(n_cell + 1) * (n_cell + 1);
        std::vector<double> u1(nn), u2(nn);
        for (int ii = 0; ii <= n_cell; ++ii)
            for (int jj = 0; jj <= n_cell; ++jj) {
                const double x1 = ii * hc;
                u1[cid(ii, jj, n_cell)] = std::cos(q * x1);
                u2[cid(ii, jj, n_cell)] = std::sin(q * x1);
            }
        GLCellSolution sol =
            cell_minimize(std::move(u1), std::move(u2), n_cell, n_cell, hc, eps, tol);
        const ModulusReport mr = modulus_report(sol.u1, sol.u2);
        st.sup_dev.push_back(mr.sup_dev);
        st.max_mod.push_back(mr.max_mod);
        st.pohozaev.push_back(pohozaev_residual(sol));
        st.energy.push_back(sol.energy);
        st.iterations.push_back(sol.iterations);
    }
    return st;
}

}  // namespace neelsim
