#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "neelsim/energy.hpp"
#include "neelsim/grid_ops.hpp"
#include "neelsim/walls.hpp"
#include "test_util.hpp"

using namespace neelsim;
using testutil::fill_random;
using testutil::make_rng;
using testutil::rel_diff;

namespace {

// fully independent energy recomputation: naive stencils, naive summation,
// dense eigendecomposition for the half-inverse quadratic form
double naive_energy(const MagnetizationField& m, const ModelParams& p) {
    const GridSpec& g = m.grid;
    const int N1 = g.n1 - 2, N2 = g.n2;

    auto d1 = [&](const double* f, int i, int j) {
        if (i == 0) return (f[g.idx(1, j)] - f[g.idx(0, j)]) / (2.0 * g.h);
        if (i == g.n1 - 1) return (f[g.idx(i, j)] - f[g.idx(i - 1, j)]) / (2.0 * g.h);
        return (f[g.idx(i + 1, j)] - f[g.idx(i - 1, j)]) / (2.0 * g.h);
    };
    auto d2 = [&](const double* f, int i, int j) {
        return (f[g.idx(i, g.wrap2(j + 1))] - f[g.idx(i, g.wrap2(j - 1))]) / (2.0 * g.h);
    };

    double exchange = 0.0, aniso = 0.0;
    Eigen::VectorXd divv(N1 * N2);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            for (int c = 0; c < 3; ++c) {
                const double a = d1(m.comp(c), i, j), b = d2(m.comp(c), i, j);
                exchange += a * a + b * b;
            }
            const double m3 = m.at(2, i, j);
            aniso += m3 * m3;
            if (i >= 1 && i <= g.n1 - 2)
                divv((i - 1) * N2 + j) = d1(m.comp(0), i, j) + d2(m.comp(1), i, j);
        }
    exchange *= g.h * g.h;
    aniso *= g.h * g.h / (p.eps * p.eps);

    // dense L^{-1/2} on the interior (Dirichlet x1, periodic x2)
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N1 * N2, N1 * N2);
    const double w = 1.0 / (g.h * g.h);
    for (int i = 1; i <= N1; ++i)
        for (int j = 0; j < N2; ++j) {
            const int r = (i - 1) * N2 + j;
            L(r, r) = 4.0 * w;
            if (i > 1) L(r, r - N2) -= w;
            if (i < N1) L(r, r + N2) -= w;
            L(r, (i - 1) * N2 + g.wrap2(j + 1)) -= w;
            L(r, (i - 1) * N2 + g.wrap2(j - 1)) -= w;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    Eigen::VectorXd lam = es.eigenvalues();
    for (int k = 0; k < lam.size(); ++k) lam(k) = 1.0 / std::sqrt(lam(k));
    const Eigen::VectorXd c = es.eigenvectors().transpose() * divv;
    const double nonlocal =
        g.h * g.h * (c.array().square() * lam.array()).sum() / (2.0 * p.delta);

    return exchange + aniso + nonlocal;
}

}  // namespace

TEST_CASE("energy of constant in-plane fields is exactly zero") {
    const GridSpec g = GridSpec::make(16);
    SpectralWorkspace ws(g);
    ModelParams p;
    MagnetizationField m(g);
    const double a = 0.6, b = 0.8;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            m.at(0, i, j) = a;
            m.at(1, i, j) = b;
        }
    EnergyBreakdown e = energy(m, p, ws);
    CHECK(e.exchange == 0.0);
    CHECK(e.anisotropy == 0.0);
    CHECK(e.nonlocal == 0.0);
    CHECK(e.total == 0.0);
}

TEST_CASE("energy of e3: pure anisotropy with the discrete node measure") {
    const GridSpec g = GridSpec::make(16);
    SpectralWorkspace ws(g);
    ModelParams p;
    MagnetizationField m(g);
    for (std::size_t k = 0; k < g.npoints(); ++k) m.comp(2)[k] = 1.0;
    EnergyBreakdown e = energy(m, p, ws);
    CHECK(e.exchange == 0.0);
    CHECK(e.nonlocal == 0.0);
    // h^2 * (2n+1) * n = 2 + h: the uniformly weighted node set carries the
    // strip area plus one extra column width; tends to the area 2 as h -> 0
    CHECK(rel_diff(e.anisotropy, (2.0 + g.h) / (p.eps * p.eps)) <= 1e-14);
    CHECK(e.total == e.exchange + e.anisotropy + e.nonlocal);
}

TEST_CASE("straight wall energy matches the independent direct-summation oracle") {
    const GridSpec g = GridSpec::make(16);
    SpectralWorkspace ws(g);
    ModelParams p;
    MagnetizationField m = straight_wall(0.0, 0.0, g);
    EnergyBreakdown e = energy(m, p, ws);
    CHECK(rel_diff(e.total, naive_energy(m, p)) <= 1e-12);
    // the jump is uniform in x2 and m1 = 0, so the divergence and m3 vanish:
    // the whole energy is the exchange across the two jump-adjacent columns,
    // h^2 * n2 * 2 * (1/h)^2 = 2n
    CHECK(e.nonlocal == 0.0);
    CHECK(e.anisotropy == 0.0);
    CHECK(rel_diff(e.exchange, 2.0 * g.n) <= 1e-13);
}

TEST_CASE("random-field energy matches the dense oracle") {
    auto rng = make_rng(911);
    const GridSpec g = GridSpec::make(8);
    SpectralWorkspace ws(g);
    ModelParams p;
    p.delta = 0.2;
    for (int trial = 0; trial < 3; ++trial) {
        MagnetizationField m(g);
        fill_random(m, rng);
        EnergyBreakdown e = energy(m, p, ws);
        CHECK(rel_diff(e.total, naive_energy(m, p)) <= 1e-12);
    }
}

TEST_CASE("energy gradient against the central finite-difference oracle") {
    auto rng = make_rng(912);
    const GridSpec g = GridSpec::make(32);
    SpectralWorkspace ws(g);
    ModelParams p;  // delta = 0.1, eps = 0.05
    const double s = 1e-5;
    for (int trial = 0; trial < 20; ++trial) {
        MagnetizationField m(g), phi(g);
        fill_random(m, rng);
        fill_random(phi, rng);
        // interior perturbations only: the reported gradient is the exact
        // variational gradient for fields vanishing on the boundary columns
        for (int j = 0; j < g.n2; ++j)
            for (int c = 0; c < 3; ++c) {
                phi.at(c, 0, j) = 0.0;
                phi.at(c, g.n1 - 1, j) = 0.0;
            }
        MagnetizationField mp(g), mm(g);
        for (std::size_t k = 0; k < m.v.size(); ++k) {
            mp.v[k] = m.v[k] + s * phi.v[k];
            mm.v[k] = m.v[k] - s * phi.v[k];
        }
        const double fd =
            (energy(mp, p, ws).total - energy(mm, p, ws).total) / (2.0 * s);
        const double ip = inner_h(energy_grad(m, p, ws), phi);
        CHECK(rel_diff(fd, ip) <= 1e-6);
    }
}

TEST_CASE("energy_grad closed forms on constant fields") {
    const GridSpec g = GridSpec::make(12);
    SpectralWorkspace ws(g);
    ModelParams p;

    MagnetizationField c(g);
    for (std::size_t k = 0; k < g.npoints(); ++k) {
        c.comp(0)[k] = 1.0;
    }
    MagnetizationField gc = energy_grad(c, p, ws);
    for (double x : gc.v) CHECK(x == 0.0);

    MagnetizationField e3(g);
    for (std::size_t k = 0; k < g.npoints(); ++k) e3.comp(2)[k] = 1.0;
    MagnetizationField ge = energy_grad(e3, p, ws);
    const double want = 2.0 / (p.eps * p.eps);
    for (std::size_t k = 0; k < g.npoints(); ++k) {
        CHECK(ge.comp(0)[k] == 0.0);
        CHECK(ge.comp(1)[k] == 0.0);
        CHECK(ge.comp(2)[k] == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("energy density sums to the rescaled total") {
    auto rng = make_rng(913);
    const GridSpec g = GridSpec::make(24);
    SpectralWorkspace ws(g);
    ModelParams p;
    MagnetizationField m(g);
    fill_random(m, rng);
    EnergyBreakdown e = energy(m, p, ws);
    ScalarField dens = energy_density(m, p, ws);
    for (double x : dens.v) CHECK(x >= 0.0);
    double total = 0.0;
    for (double x : dens.v) total += x;
    total *= g.h * g.h;
    const double scale = 2.0 / M_PI * p.delta * p.log_delta();
    CHECK(rel_diff(total, scale * e.total) <= 1e-10);
}

TEST_CASE("straight-wall density is supported within two columns of the jump") {
    const GridSpec g = GridSpec::make(32);
    SpectralWorkspace ws(g);
    ModelParams p;
    MagnetizationField m = straight_wall(0.0, 0.0, g);
    ScalarField dens = energy_density(m, p, ws);
    const int ic = g.n;  // node at x1 = 0
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
            if (std::abs(i - ic) >= 2)
                CHECK(dens.at(0, i, j) == 0.0);
        }
    CHECK(dens.at(0, ic, 0) > 0.0);
    CHECK(dens.at(0, ic - 1, 0) > 0.0);
}

TEST_CASE("exact parameter scalings of the energy parts") {
    auto rng = make_rng(914);
    const GridSpec g = GridSpec::make(16);
    SpectralWorkspace ws(g);
    MagnetizationField m(g);
    fill_random(m, rng);

    ModelParams p;
    p.delta = 0.11;
    p.eps = 0.07;
    EnergyBreakdown e1 = energy(m, p, ws);

    ModelParams p2 = p;
    p2.delta = 2.0 * p.delta;
    EnergyBreakdown e2 = energy(m, p2, ws);
    CHECK(e2.nonlocal == 0.5 * e1.nonlocal);
    CHECK(e2.exchange == e1.exchange);
    CHECK(e2.anisotropy == e1.anisotropy);

    ModelParams p3 = p;
    p3.eps = 2.0 * p.eps;
    EnergyBreakdown e3 = energy(m, p3, ws);
    CHECK(e3.anisotropy == 0.25 * e1.anisotropy);
    CHECK(e3.nonlocal == e1.nonlocal);
}

TEST_CASE("gronwall ceiling closed forms and guards") {
    CHECK(gronwall_ceiling(3.5, 0.0, 0.0, 0.0) == 3.5);
    CHECK(gronwall_ceiling(2.0, 0.1, 0.1, 0.01) ==
          doctest::Approx(2.0 * std::exp(4.0)).epsilon(1e-14));
    // ||v||^2 = alpha*beta held for time t gives E0 e^{4t}
    const double alpha = 0.05, beta = 0.002, t = 0.7;
    CHECK(gronwall_ceiling(1.0, alpha, beta, alpha * beta * t) ==
          doctest::Approx(std::exp(4.0 * t)).epsilon(1e-14));
    CHECK_THROWS_AS(gronwall_ceiling(1.0, 0.0, 0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(gronwall_ceiling(1.0, -0.1, 0.1, 0.5), std::invalid_argument);
}

TEST_CASE("ModelParams validation and regime flags") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.alpha() == p.nu * p.eps);
    CHECK(p.beta() == p.lambda * p.eps);

    auto expect_throw = [](auto mod) {
        ModelParams q;
        mod(q);
        CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    };
    expect_throw([](ModelParams& q) { q.delta = 0.0; });
    expect_throw([](ModelParams& q) { q.delta = 0.5; });
    expect_throw([](ModelParams& q) { q.delta = -0.1; });
    expect_throw([](ModelParams& q) { q.eps = 0.0; });
    expect_throw([](ModelParams& q) { q.nu = 0.0; });
    expect_throw([](ModelParams& q) { q.lambda = -1e-3; });
    expect_throw([](ModelParams& q) { q.m1inf = 1.0; });
    expect_throw([](ModelParams& q) { q.m1inf = -0.2; });

    // regime flag: 1/(delta log(1/delta)) <= log(1/eps)
    ModelParams a;
    a.delta = 0.1;
    a.eps = 0.05;
    CHECK_FALSE(a.regime_ok());  // 4.343 > 2.996
    ModelParams b;
    b.delta = 0.2;
    b.eps = 0.04;
    CHECK(b.regime_ok());  // 3.107 <= 3.219

    ModelParams c;
    c.delta = 0.1;
    c.lambda = 0.4;
    CHECK(c.lambda_ok());  // bound sqrt(0.1 ln 10) = 0.4799
    c.lambda = 0.5;
    CHECK_FALSE(c.lambda_ok());
}
