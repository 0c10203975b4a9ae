/// @file serial_ref.hpp
/// Straight-line serial implementations of the hot kernels. These are the
/// reference the OpenMP versions are tested against (bit-identical for the
/// pure maps; tolerance-checked for the reductions, whose summation order
/// differs by design) and the baseline the benchmark compares to.

#pragma once

#include "neelsim/grid.hpp"

namespace neelsim::ref {

void d1h_comp(const GridSpec& g, const double* f, double* out);
void d2h_comp(const GridSpec& g, const double* f, double* out);
void laplacian_comp(const GridSpec& g, const double* f, double* out);
double dot_h(const GridSpec& g, const double* a, const double* b, std::size_t len);
double normalize_sphere(MagnetizationField& m);
void gl_density(const GridSpec& g, const double* u1, const double* u2, double eps, double* out);

}  // namespace neelsim::ref
