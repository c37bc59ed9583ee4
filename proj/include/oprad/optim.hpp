// Shared derivative-free optimizers: Nelder-Mead simplex minimization and
// certified periodic grid+golden maximization.

#pragma once

#include <functional>
#include <vector>

namespace oprad::detail {

struct NmResult {
  std::vector<double> x;
  double value = 0.0;
};

// Deterministic Nelder-Mead; stops when the simplex diameter falls below
// diam_tol. Robust at the kinks of norm objectives.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, double step,
                     double diam_tol, int max_iter);

struct PeriodicMax {
  double arg = 0.0;    // in [0, 2pi)
  double value = 0.0;
};

// Maximize a 2pi-periodic objective: uniform grid, then golden-section
// refinement of every grid point that could still hide the maximum given
// `margin`, a certified bound on how far a peak can sit above its nearest
// grid sample. Plateaus short-circuit; at most `cap` refinements.
PeriodicMax periodic_grid_max(const std::function<double(double)>& f,
                              int grid_points, double margin, int cap = 16);

}  // namespace oprad::detail
