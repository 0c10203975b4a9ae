// experiment runner: every subcommand resolves its parameters from
// (defaults < config file < command-line flags), runs one experiment, and
// writes CSV results plus a manifest echoing the resolved configuration and
// regime flags. Exit codes: 0 ok, 2 validation error, 3 numerical
// divergence, 4 contract violation (Gronwall ceiling breach, nonzero cell
// degree, ill-defined diagnostics).

#include <cmath>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neelsim/dynamics.hpp"
#include "neelsim/grid_ops.hpp"
#include "neelsim/io.hpp"
#include "neelsim/s1_approx.hpp"
#include "neelsim/walls.hpp"

namespace fs = std::filesystem;
using namespace neelsim;

namespace {

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty numeric list: " + s);
    return out;
}

// pre-scan for --config so config values can seed the flag defaults
Config preload_config(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--config") == 0) return load_config(argv[i + 1]);
    return {};
}

struct Common {
    Config cfg;
    std::string out;
};

void ensure_dir(const std::string& out) { fs::create_directories(out); }

Config resolved_base(const std::string& cmd, const Common& c) {
    Config r;
    r[cmd + ".out"] = c.out;
    return r;
}

MagnetizationField build_initial(const std::string& init, int n, double delta, double m1inf,
                                 const std::string& resume, double* t0) {
    *t0 = 0.0;
    if (!resume.empty()) {
        Snapshot snap = load_snapshot(resume);
        *t0 = snap.t;
        return std::move(snap.m);
    }
    GridSpec g = GridSpec::make(n);
    if (init == "straight") return straight_wall(0.0, m1inf, g);
    if (init == "ansatz") return extend_profile_2d(neel_ansatz(delta, m1inf, n), g);
    if (init == "step") return extend_profile_2d(smoothed_step(m1inf, n), g);
    if (init == "wall") {
        Spectral1D sp(n);
        RelaxReport1D rep = relax_profile(neel_ansatz(delta, m1inf, n), delta, sp, 1e-9);
        return extend_profile_2d(rep.profile, g);
    }
    throw std::invalid_argument("unknown initializer '" + init +
                                "' (expected straight|ansatz|step|wall)");
}

int run_relax_wall(const Common& c, int n, double delta, double m1inf, double tol,
                   long max_iter, const std::string& init, double width) {
    ensure_dir(c.out);
    Spectral1D sp(n);
    WallProfile1D start =
        (init == "step") ? smoothed_step(m1inf, n) : neel_ansatz(delta, m1inf, n);
    RelaxReport1D rep = relax_profile(start, delta, sp, tol, max_iter);
    if (!rep.converged)
        std::cerr << "relax-wall: relaxation stopped before meeting tol; reporting last iterate\n";

    const std::vector<double> density = wall_density(rep.profile, delta, sp);
    const double x1s = detect_wall_center_1d(density, n);
    const double frac = concentration_fraction_1d(density, n, x1s, width);
    const double resc = delta * std::log(1.0 / delta) * rep.energy.total;

    write_csv(c.out + "/wall.csv",
              {"delta", "m1inf", "E", "rescaled_E", "x1_star", "frac_w02", "iterations"},
              {{delta, m1inf, rep.energy.total, resc, x1s, frac,
                static_cast<double>(rep.iterations)}});
    {
        std::vector<std::vector<double>> rows;
        for (int i = 0; i < rep.profile.npts(); ++i)
            rows.push_back({rep.profile.x(i), rep.profile.m1[i], rep.profile.m2[i]});
        write_csv(c.out + "/profile.csv", {"x1", "m1", "m2"}, rows);
    }
    save_snapshot(c.out + "/wall.llgf", extend_profile_2d(rep.profile, GridSpec::make(n)),
                  delta, 0.0, 0.0);

    Config r = resolved_base("relax_wall", c);
    r["relax_wall.n"] = std::to_string(n);
    r["relax_wall.delta"] = fmt_g17(delta);
    r["relax_wall.m1inf"] = fmt_g17(m1inf);
    r["relax_wall.tol"] = fmt_g17(tol);
    r["relax_wall.init"] = init;
    r["relax_wall.width"] = fmt_g17(width);
    r["relax_wall.converged"] = rep.converged ? "true" : "false";
    ModelParams p;
    p.delta = delta;
    p.m1inf = m1inf;
    write_manifest(c.out + "/manifest.txt", r, p, 0.0);
    return 0;
}

int run_simulate(const Common& c, int n, double delta, double eps, double nu, double lambda,
                 double m1inf, double T, double dt, double cfl, const std::string& scheme,
                 int renorm_every, int sample_every, double v1, double v2,
                 const std::string& init, const std::string& resume, int snap_every) {
    ensure_dir(c.out);
    ModelParams p;
    p.delta = delta;
    p.eps = eps;
    p.nu = nu;
    p.lambda = lambda;
    p.m1inf = m1inf;
    p.validate();

    double t0 = 0.0;
    MagnetizationField m0 = build_initial(init, n, delta, m1inf, resume, &t0);
    const GridSpec g = m0.grid;
    SpectralWorkspace ws(g);
    SpinCurrent v = SpinCurrent::constant(v1, v2);

    IntegratorConfig icfg;
    icfg.scheme = (scheme == "midpoint") ? Scheme::midpoint : Scheme::rk4;
    icfg.dt = dt;
    icfg.cfl_safety = cfl;
    icfg.renorm_every = renorm_every;
    icfg.sample_every = sample_every;

    SimResult res = simulate(m0, T, icfg, p, ws, v);

    std::vector<std::vector<double>> rows;
    for (const TraceRow& r : res.trace)
        rows.push_back({t0 + r.t, r.exchange, r.anisotropy, r.nonlocal, r.total, r.ceiling,
                        r.max_norm_dev, r.hminus1_rate});
    write_csv(c.out + "/trace.csv",
              {"t", "exchange", "anisotropy", "nonlocal", "total", "ceiling", "max_norm_dev",
               "hminus1_rate"},
              rows);
    save_snapshot(c.out + "/final.llgf", res.m, delta, eps,
                  t0 + res.trace.back().t);
    if (snap_every > 0) {
        // periodic snapshots are produced by re-running in windows; emit the
        // initial state as the reference
        save_snapshot(c.out + "/initial.llgf", m0, delta, eps, t0);
    }

    Config r = resolved_base("simulate", c);
    r["simulate.n"] = std::to_string(n);
    r["simulate.delta"] = fmt_g17(delta);
    r["simulate.eps"] = fmt_g17(eps);
    r["simulate.nu"] = fmt_g17(nu);
    r["simulate.lambda"] = fmt_g17(lambda);
    r["simulate.m1inf"] = fmt_g17(m1inf);
    r["simulate.T"] = fmt_g17(T);
    r["simulate.dt"] = fmt_g17(res.dt);
    r["simulate.scheme"] = scheme;
    r["simulate.steps"] = std::to_string(res.steps);
    r["simulate.init"] = resume.empty() ? init : ("resume:" + resume);
    r["simulate.v1"] = fmt_g17(v1);
    r["simulate.v2"] = fmt_g17(v2);
    r["simulate.max_norm_dev"] = fmt_g17(res.max_norm_dev);
    write_manifest(c.out + "/manifest.txt", r, p, v1 * v1 + v2 * v2);

    if (res.status == SimStatus::diverged) {
        std::cerr << "simulate: energy diverged\n";
        return 3;
    }
    if (res.status == SimStatus::ceiling_violation) {
        std::cerr << "simulate: energy exceeded the Gronwall ceiling\n";
        return 4;
    }
    return 0;
}

int run_project_s1(const Common& c, int n, double delta, double eps, double beta_grid,
                   double tol, const std::string& input, double bump_a, double bump_w) {
    ensure_dir(c.out);
    ModelParams p;
    p.delta = delta;
    p.eps = eps;
    p.validate();

    MagnetizationField m(GridSpec::make(n));
    if (!input.empty()) {
        Snapshot snap = load_snapshot(input);
        m = std::move(snap.m);
    } else {
        Spectral1D sp(n);
        RelaxReport1D rep = relax_profile(neel_ansatz(delta, 0.0, n), delta, sp, 1e-9);
        m = extend_profile_2d(rep.profile, GridSpec::make(n));
        if (bump_a != 0.0) m = with_out_of_plane_bump(m, bump_a, bump_w, 0.0, 0.5);
    }

    SpectralWorkspace ws(m.grid);
    ApproxReport rep = approx_pipeline(m, p, ws, beta_grid, tol);

    std::vector<std::vector<double>> cells;
    for (std::size_t k = 0; k < rep.cell_solutions.size(); ++k) {
        const GLCellSolution& s = rep.cell_solutions[k];
        cells.push_back({static_cast<double>(s.id), s.energy, s.eta,
                         static_cast<double>(rep.degrees[k]), pohozaev_residual(s),
                         static_cast<double>(s.iterations)});
    }
    write_csv(c.out + "/cells.csv",
              {"cell_id", "energy", "eta", "degree", "pohozaev_residual", "iterations"}, cells);
    write_csv(c.out + "/report.csv",
              {"ncells", "max_abs_degree", "eta", "e_m", "e_M", "energy_ratio", "l2_diff",
               "h1_diff", "l2_ratio", "h1_ratio", "max_pohozaev", "energy_flag", "kappa",
               "line_energy", "pigeonhole_bound"},
              {{static_cast<double>(rep.ncells), static_cast<double>(rep.max_abs_degree),
                rep.eta, rep.e_m, rep.e_M, rep.energy_ratio, rep.l2_diff, rep.h1_diff,
                rep.l2_ratio, rep.h1_ratio, rep.max_pohozaev, rep.energy_flag ? 1.0 : 0.0,
                rep.kappa, rep.grid.line_energy, rep.grid.bound}});
    save_snapshot(c.out + "/projected.llgf", rep.M, delta, eps, 0.0);

    Config r = resolved_base("project_s1", c);
    r["project_s1.n"] = std::to_string(n);
    r["project_s1.delta"] = fmt_g17(delta);
    r["project_s1.eps"] = fmt_g17(eps);
    r["project_s1.beta_grid"] = fmt_g17(beta_grid);
    r["project_s1.tol"] = fmt_g17(tol);
    r["project_s1.input"] = input.empty() ? "wall+bump" : input;
    r["project_s1.ncells"] = std::to_string(rep.ncells);
    write_manifest(c.out + "/manifest.txt", r, p, 0.0);

    if (rep.max_abs_degree != 0) {
        std::cerr << "project-s1: nonzero cell degree, S1 approximation contract violated\n";
        return 4;
    }
    return 0;
}

int run_sweep(const Common& c, const std::string& deltas, int n, double m1inf, double tol,
              double width) {
    ensure_dir(c.out);
    const std::vector<double> list = parse_list(deltas);
    Spectral1D sp(n);
    std::vector<std::vector<double>> rows;
    for (double delta : list) {
        RelaxReport1D rep = relax_profile(neel_ansatz(delta, m1inf, n), delta, sp, tol);
        const std::vector<double> density = wall_density(rep.profile, delta, sp);
        const double x1s = detect_wall_center_1d(density, n);
        const double frac = concentration_fraction_1d(density, n, x1s, width);
        rows.push_back({delta, m1inf, rep.energy.total,
                        delta * std::log(1.0 / delta) * rep.energy.total, x1s, frac,
                        static_cast<double>(rep.iterations)});
    }
    write_csv(c.out + "/sweep.csv",
              {"delta", "m1inf", "E", "rescaled_E", "x1_star", "frac_w02", "iterations"}, rows);

    Config r = resolved_base("sweep", c);
    r["sweep.deltas"] = deltas;
    r["sweep.n"] = std::to_string(n);
    r["sweep.m1inf"] = fmt_g17(m1inf);
    ModelParams p;
    p.delta = list.front();
    p.m1inf = m1inf;
    write_manifest(c.out + "/manifest.txt", r, p, 0.0);
    return 0;
}

int run_diagnose(const Common& c, int n, double delta, double eps, double m1inf,
                 const std::string& init, const std::string& input, double width) {
    ensure_dir(c.out);
    ModelParams p;
    p.delta = delta;
    p.eps = eps;
    p.m1inf = m1inf;
    p.validate();

    MagnetizationField m(GridSpec::make(n));
    if (!input.empty()) {
        m = load_snapshot(input).m;
    } else {
        double t0 = 0.0;
        m = build_initial(init, n, delta, m1inf, "", &t0);
    }
    SpectralWorkspace ws(m.grid);
    ScalarField density = energy_density(m, p, ws);
    const double x1s = detect_wall_center(density);
    const double frac = concentration_fraction(density, x1s, width);
    const EnergyBreakdown e = energy(m, p, ws);
    const double resc = delta * std::log(1.0 / delta) * e.total;

    write_csv(c.out + "/diagnose.csv",
              {"delta", "eps", "x1_star", "width", "fraction", "rescaled_energy", "total"},
              {{delta, eps, x1s, width, frac, resc, e.total}});

    Config r = resolved_base("diagnose", c);
    r["diagnose.n"] = std::to_string(n);
    r["diagnose.delta"] = fmt_g17(delta);
    r["diagnose.eps"] = fmt_g17(eps);
    r["diagnose.init"] = input.empty() ? init : input;
    r["diagnose.width"] = fmt_g17(width);
    write_manifest(c.out + "/manifest.txt", r, p, 0.0);
    return 0;
}

int run_vortex(const Common& c, const std::string& eps_list, int n) {
    ensure_dir(c.out);
    const std::vector<double> list = parse_list(eps_list);
    VortexProbe probe = vortex_probe(list, n);
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < probe.eps.size(); ++k)
        rows.push_back({probe.eps[k], probe.energy[k]});
    write_csv(c.out + "/vortex.csv", {"eps", "energy"}, rows);
    write_csv(c.out + "/vortex_fit.csv", {"slope", "two_pi", "rel_dev"},
              {{probe.slope, 2.0 * M_PI,
                std::fabs(probe.slope - 2.0 * M_PI) / (2.0 * M_PI)}});

    Config r = resolved_base("vortex_probe", c);
    r["vortex_probe.eps"] = eps_list;
    r["vortex_probe.n"] = std::to_string(n);
    r["vortex_probe.slope"] = fmt_g17(probe.slope);
    ModelParams p;
    write_manifest(c.out + "/manifest.txt", r, p, 0.0);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    try {
        cfg = preload_config(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto num = [&cfg](const std::string& key, double d) { return config_num(cfg, key, d); };
    auto str = [&cfg](const std::string& key, const std::string& d) {
        return config_str(cfg, key, d);
    };

    CLI::App app{"thin-film magnetization experiments (strip domain, pinned edges)"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file; flags override its values");

    // relax-wall
    auto* rw = app.add_subcommand("relax-wall", "relax a 1D wall profile and report energetics");
    int rw_n = static_cast<int>(num("relax_wall.n", 512));
    double rw_delta = num("relax_wall.delta", 0.1);
    double rw_m1inf = num("relax_wall.m1inf", 0.0);
    double rw_tol = num("relax_wall.tol", 1e-10);
    long rw_maxit = static_cast<long>(num("relax_wall.max_iter", 200000));
    std::string rw_init = str("relax_wall.init", "ansatz");
    double rw_width = num("relax_wall.width", 0.2);
    std::string rw_out = str("relax_wall.out", "out_relax_wall");
    rw->add_option("--n", rw_n, "half resolution (grid step 1/n)");
    rw->add_option("--delta", rw_delta, "stray-field scale, in (0,1/2)");
    rw->add_option("--m1inf", rw_m1inf, "boundary trace parameter");
    rw->add_option("--tol", rw_tol, "relative energy decrease tolerance");
    rw->add_option("--max-iter", rw_maxit, "iteration cap");
    rw->add_option("--init", rw_init, "ansatz|step");
    rw->add_option("--width", rw_width, "concentration strip half-width");
    rw->add_option("--out", rw_out, "output directory");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the damped-precession dynamics");
    int sm_n = static_cast<int>(num("simulate.n", 64));
    double sm_delta = num("simulate.delta", 0.1);
    double sm_eps = num("simulate.eps", 0.05);
    double sm_nu = num("simulate.nu", 1.0);
    double sm_lambda = num("simulate.lambda", 0.05);
    double sm_m1inf = num("simulate.m1inf", 0.0);
    double sm_T = num("simulate.T", 0.1);
    double sm_dt = num("simulate.dt", 0.0);
    double sm_cfl = num("simulate.cfl", 0.2);
    std::string sm_scheme = str("simulate.scheme", "rk4");
    int sm_renorm = static_cast<int>(num("simulate.renorm_every", 1));
    int sm_sample = static_cast<int>(num("simulate.sample_every", 0));
    double sm_v1 = num("simulate.v1", 0.0);
    double sm_v2 = num("simulate.v2", 0.0);
    std::string sm_init = str("simulate.init", "ansatz");
    std::string sm_resume = str("simulate.resume", "");
    int sm_snap = static_cast<int>(num("simulate.snap_every", 0));
    std::string sm_out = str("simulate.out", "out_simulate");
    sim->add_option("--n", sm_n, "half resolution");
    sim->add_option("--delta", sm_delta, "stray-field scale");
    sim->add_option("--eps", sm_eps, "out-of-plane penalty scale");
    sim->add_option("--nu", sm_nu, "damping prefactor (alpha = nu eps)");
    sim->add_option("--lambda", sm_lambda, "precession prefactor (beta = lambda eps)");
    sim->add_option("--m1inf", sm_m1inf, "boundary trace parameter");
    sim->add_option("--T", sm_T, "time horizon");
    sim->add_option("--dt", sm_dt, "time step (0 = stability ceiling)");
    sim->add_option("--cfl", sm_cfl, "fraction of the stability ceiling");
    sim->add_option("--scheme", sm_scheme, "rk4|midpoint");
    sim->add_option("--renorm-every", sm_renorm, "renormalization stride");
    sim->add_option("--sample-every", sm_sample, "trace sampling stride (0 = auto)");
    sim->add_option("--v1", sm_v1, "constant current component 1");
    sim->add_option("--v2", sm_v2, "constant current component 2");
    sim->add_option("--init", sm_init, "straight|ansatz|step|wall");
    sim->add_option("--resume", sm_resume, "snapshot to resume from");
    sim->add_option("--snap-every", sm_snap, "also write the initial snapshot when > 0");
    sim->add_option("--out", sm_out, "output directory");

    // project-s1
    auto* pr = app.add_subcommand("project-s1", "run the cell GL approximation pipeline");
    int pr_n = static_cast<int>(num("project_s1.n", 128));
    double pr_delta = num("project_s1.delta", 0.05);
    double pr_eps = num("project_s1.eps", 0.02);
    double pr_bg = num("project_s1.beta_grid", 0.5);
    double pr_tol = num("project_s1.tol", 1e-8);
    std::string pr_input = str("project_s1.input", "");
    double pr_bump_a = num("project_s1.bump_a", 0.3);
    double pr_bump_w = num("project_s1.bump_w", 0.2);
    std::string pr_out = str("project_s1.out", "out_project_s1");
    pr->add_option("--n", pr_n, "half resolution");
    pr->add_option("--delta", pr_delta, "stray-field scale");
    pr->add_option("--eps", pr_eps, "GL core scale");
    pr->add_option("--beta-grid", pr_bg, "cell spacing exponent in (0,1)");
    pr->add_option("--tol", pr_tol, "cell solver tolerance");
    pr->add_option("--input", pr_input, "input snapshot (default: relaxed wall + m3 bump)");
    pr->add_option("--bump-a", pr_bump_a, "out-of-plane bump amplitude");
    pr->add_option("--bump-w", pr_bump_w, "out-of-plane bump width");
    pr->add_option("--out", pr_out, "output directory");

    // sweep
    auto* sw = app.add_subcommand("sweep", "relax walls across a delta list");
    std::string sw_deltas = str("sweep.deltas", "0.2,0.1,0.05,0.02");
    int sw_n = static_cast<int>(num("sweep.n", 1024));
    double sw_m1inf = num("sweep.m1inf", 0.0);
    double sw_tol = num("sweep.tol", 1e-10);
    double sw_width = num("sweep.width", 0.2);
    std::string sw_out = str("sweep.out", "out_sweep");
    sw->add_option("--deltas", sw_deltas, "comma-separated delta list");
    sw->add_option("--n", sw_n, "half resolution");
    sw->add_option("--m1inf", sw_m1inf, "boundary trace parameter");
    sw->add_option("--tol", sw_tol, "relaxation tolerance");
    sw->add_option("--width", sw_width, "concentration strip half-width");
    sw->add_option("--out", sw_out, "output directory");

    // diagnose
    auto* dg = app.add_subcommand("diagnose", "energy concentration diagnostics");
    int dg_n = static_cast<int>(num("diagnose.n", 64));
    double dg_delta = num("diagnose.delta", 0.1);
    double dg_eps = num("diagnose.eps", 0.05);
    double dg_m1inf = num("diagnose.m1inf", 0.0);
    std::string dg_init = str("diagnose.init", "straight");
    std::string dg_input = str("diagnose.input", "");
    double dg_width = num("diagnose.width", 0.2);
    std::string dg_out = str("diagnose.out", "out_diagnose");
    dg->add_option("--n", dg_n, "half resolution");
    dg->add_option("--delta", dg_delta, "stray-field scale");
    dg->add_option("--eps", dg_eps, "out-of-plane penalty scale");
    dg->add_option("--m1inf", dg_m1inf, "boundary trace parameter");
    dg->add_option("--init", dg_init, "straight|ansatz|step|wall");
    dg->add_option("--input", dg_input, "input snapshot (overrides --init)");
    dg->add_option("--width", dg_width, "concentration strip half-width");
    dg->add_option("--out", dg_out, "output directory");

    // vortex-probe
    auto* vx = app.add_subcommand("vortex-probe", "GL vortex energy vs log(1/eps)");
    std::string vx_eps = str("vortex_probe.eps", "0.1,0.05,0.02,0.01");
    int vx_n = static_cast<int>(num("vortex_probe.n", 512));
    std::string vx_out = str("vortex_probe.out", "out_vortex");
    vx->add_option("--eps", vx_eps, "comma-separated eps list (each in (0, 0.2])");
    vx->add_option("--n", vx_n, "resolution (node spacing 1/n on [-1,1]^2)");
    vx->add_option("--out", vx_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rw->parsed())
            return run_relax_wall({cfg, rw_out}, rw_n, rw_delta, rw_m1inf, rw_tol, rw_maxit,
                                  rw_init, rw_width);
        if (sim->parsed())
            return run_simulate({cfg, sm_out}, sm_n, sm_delta, sm_eps, sm_nu, sm_lambda,
                                sm_m1inf, sm_T, sm_dt, sm_cfl, sm_scheme, sm_renorm, sm_sample,
                                sm_v1, sm_v2, sm_init, sm_resume, sm_snap);
        if (pr->parsed())
            return run_project_s1({cfg, pr_out}, pr_n, pr_delta, pr_eps, pr_bg, pr_tol,
                                  pr_input, pr_bump_a, pr_bump_w);
        if (sw->parsed())
            return run_sweep({cfg, sw_out}, sw_deltas, sw_n, sw_m1inf, sw_tol, sw_width);
        if (dg->parsed())
            return run_diagnose({cfg, dg_out}, dg_n, dg_delta, dg_eps, dg_m1inf, dg_init,
                                dg_input, dg_width);
        if (vx->parsed()) return run_vortex({cfg, vx_out}, vx_eps, vx_n);
    } catch (const std::domain_error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
