/// @file s1_approx.hpp
/// S^1 approximation pipeline: shifted cell grid, per-cell Ginzburg-Landau
/// minimization with Dirichlet trace, degree checks, and projection M = u/|u|.
///
/// The grid is chosen among discrete shift candidates (all grid lines inside
/// one spacing period), so the mean-value argument becomes an exact
/// pigeonhole: the selected family's line-integrated GL energy is at most the
/// candidate average, hence at most (2/eps^bg) times the area integral. The
/// two boundary columns are always part of the vertical net; the horizontal
/// net is one shifted family on the periodic direction (relabeling the torus
/// so a line passes through x2 = 0 is immaterial here because cells may wrap).
///
/// Per-cell problems carry the edge-based energy
///   E_C(u) = sum_edges |u_p - u_q|^2 + (h^2/eps^2) sum_nodes w (1-|u|^2)^2
/// with trapezoid node weights w. Descent steps are truncated onto the unit
/// ball; truncation shrinks every edge difference and the potential, so the
/// constrained minimizer coincides with the unconstrained one and the
/// maximum principle |u| <= 1 holds exactly.

#pragma once

#include <vector>

#include "neelsim/energy.hpp"
#include "neelsim/spectral.hpp"

namespace neelsim {

/// pointwise GL density |grad_h u|^2 + (1-|u|^2)^2/eps^2 on the strip grid
ScalarField gl_density(const PlanarField& u, double eps);

/// one cell of the shifted grid: columns [i0, i0+nx], rows [j0, j0+ny] with
/// the row range taken modulo n2 (cells may wrap through the periodic seam)
struct CellRef {
    int i0 = 0, j0 = 0;
    int nx = 0, ny = 0;
};

struct CellGrid {
    GridSpec grid;
    double beta_grid = 0.5;
    double eps_grid = 0.0;  ///< eps^beta_grid
    int s_cells = 0;        ///< nominal cell side in grid units
    int shift_t = 0;        ///< chosen horizontal-family shift (rows)
    int shift_s = 0;        ///< chosen vertical-family shift (columns)
    std::vector<int> rows;  ///< horizontal line rows, ascending in [0, n2)
    std::vector<int> cols;  ///< vertical line columns; first 0, last n1-1
    double line_energy = 0.0;  ///< GL energy integrated over the chosen families
    double bound = 0.0;        ///< pigeonhole bound (2/eps_grid) * area integral

    [[nodiscard]] std::vector<CellRef> cells() const;
};

/// pick the horizontal then vertical shift minimizing the line-integrated GL
/// density of the candidate family; throws if cells would be under-resolved
/// (fewer than 8 nodes per side or the strip too small for margins)
CellGrid select_shifts(const PlanarField& mp, double eps, double beta_grid);

struct GLCellSolution {
    int id = 0;
    int nx = 0, ny = 0;     ///< (nx+1) x (ny+1) local nodes, row-major i*(ny+1)+j
    double hcell = 0.0;
    double eps = 0.0;
    std::vector<double> u1, u2;
    double energy = 0.0;       ///< edge-based cell GL energy
    double eta = 0.0;          ///< sup ||u|^2 - 1|
    double el_residual = 0.0;  ///< max norm of -lap u - (2/eps^2) u (1-|u|^2)
    long iterations = 0;
    bool converged = false;
};

/// minimize the cell GL energy over interior nodes with the ring held fixed;
/// the passed arrays are the initial guess, ring values are the Dirichlet
/// data (required inside the closed unit ball)
GLCellSolution cell_minimize(std::vector<double> u1, std::vector<double> u2, int nx, int ny,
                             double hcell, double eps, double tol = 1e-8,
                             long max_iter = 100000);

/// edge-based cell GL energy of the given local field (competitor evaluation)
double cell_energy(const std::vector<double>& u1, const std::vector<double>& u2, int nx, int ny,
                   double hcell, double eps);

/// winding number of a closed loop of planar values (consecutive angle
/// increments, each in (-pi, pi]); throws if the modulus drops below 1/2
int degree_of_loop(const std::vector<double>& w1, const std::vector<double>& w2);

/// counterclockwise boundary loop of a cell, then degree_of_loop
int cell_degree(const PlanarField& mp, const CellRef& c);

/// extract component comp of mp on the cell's local node set
std::vector<double> extract_cell(const PlanarField& mp, const CellRef& c, int comp);

/// write a cell solution back onto the global planar field
void deposit_cell(PlanarField& u, const CellRef& c, const GLCellSolution& sol);

/// pointwise normalization u/|u|; throws naming the first node where the
/// modulus vanishes
PlanarField project_s1(const PlanarField& u);

/// relative defect of the Pohozaev identity for the cell solution, centered
/// at the cell midpoint; 0/0 is reported as 0
double pohozaev_residual(const GLCellSolution& sol);

struct ModulusReport {
    double sup_dev = 0.0;  ///< sup ||u| - 1|
    double min_mod = 0.0;
    double max_mod = 0.0;
};
ModulusReport modulus_report(const std::vector<double>& u1, const std::vector<double>& u2);
ModulusReport modulus_report(const PlanarField& u);

struct ApproxReport {
    CellGrid grid;
    int ncells = 0;
    int max_abs_degree = 0;
    double kappa = 0.0;  ///< 1/(delta log(1/delta))
    double eta = 0.0;    ///< sup ||u|^2 - 1| over the assembled field
    double e_m = 0.0;    ///< strip energy of the input m
    double e_M = 0.0;    ///< strip energy of M (embedded with m3 = 0)
    double energy_ratio = 1.0;
    double l2_diff = 0.0;      ///< ||M - m'||_h^2
    double h1_diff = 0.0;      ///< ||grad_h(M - m')||_h^2
    double l2_ratio = 0.0;     ///< l2_diff / (eps^{2 bg} E(m)), the measured C
    double h1_ratio = 0.0;     ///< h1_diff / E(m)
    double grad_u_sq = 0.0;    ///< ||grad_h u||_h^2 of the assembled field
    double grad_M_sq = 0.0;
    double max_pohozaev = 0.0;
    bool energy_flag = false;  ///< E(M) <= 1.05 E(m)
    std::vector<int> degrees;
    std::vector<GLCellSolution> cell_solutions;
    MagnetizationField M;  ///< projected field embedded with m3 = 0
};

/// full comparison pipeline from a magnetization: decompose, minimize each
/// cell on its planar trace, check degrees vanish, project and compare
ApproxReport approx_pipeline(const MagnetizationField& m, const ModelParams& p,
                             const SpectralWorkspace& ws, double beta_grid,
                             double tol = 1e-8);

/// standalone fixed-kappa cell study: square cell of side eps^bg, trace
/// g(x) = (cos(q x1), sin(q x1)) with q = sqrt(kappa)/(2 eps^bg) so the
/// boundary energy matches the admissible budget kappa/eps^bg
struct CellStudy {
    std::vector<double> eps;
    std::vector<double> sup_dev;  ///< sup ||u| - 1| per eps
    std::vector<double> max_mod;
    std::vector<double> pohozaev;
    std::vector<double> energy;
    std::vector<long> iterations;
    double kappa = 0.0;
};
CellStudy gl_cell_study(const std::vector<double>& eps_list, double kappa, double beta_grid,
                        int n_cell, double tol = 1e-10);

}  // namespace neelsim
