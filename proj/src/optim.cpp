#include "oprad/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oprad::detail {

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, double step,
                     double diam_tol, int max_iter) {
  const std::size_t d = x0.size();
  std::vector<std::vector<double>> xs(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) xs[i + 1][i] += step;
  std::vector<double> fs(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fs[i] = f(xs[i]);

  auto diameter = [&]() {
    double m = 0.0;
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = i + 1; j <= d; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
          const double t = xs[i][k] - xs[j][k];
          s += t * t;
        }
        m = std::max(m, s);
      }
    return std::sqrt(m);
  };

  for (int it = 0; it < max_iter; ++it) {
    std::vector<std::size_t> ord(d + 1);
    for (std::size_t i = 0; i <= d; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    {
      std::vector<std::vector<double>> nx(d + 1);
      std::vector<double> nf(d + 1);
      for (std::size_t i = 0; i <= d; ++i) {
        nx[i] = xs[ord[i]];
        nf[i] = fs[ord[i]];
      }
      xs = std::move(nx);
      fs = std::move(nf);
    }
    if (diameter() < diam_tol) break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) centroid[k] += xs[i][k] / d;

    auto blend = [&](double coef) {
      std::vector<double> p(d);
      for (std::size_t k = 0; k < d; ++k)
        p[k] = centroid[k] + coef * (xs[d][k] - centroid[k]);
      return p;
    };

    const std::vector<double> xr = blend(-1.0);
    const double fr = f(xr);
    if (fr < fs[0]) {
      const std::vector<double> xe = blend(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        xs[d] = xe;
        fs[d] = fe;
      } else {
        xs[d] = xr;
        fs[d] = fr;
      }
    } else if (fr < fs[d - 1]) {
      xs[d] = xr;
      fs[d] = fr;
    } else {
      const bool outside = fr < fs[d];
      const std::vector<double> xc = blend(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fs[d])) {
        xs[d] = xc;
        fs[d] = fc;
      } else {
        for (std::size_t i = 1; i <= d; ++i) {
          for (std::size_t k = 0; k < d; ++k)
            xs[i][k] = 0.5 * (xs[i][k] + xs[0][k]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= d; ++i)
    if (fs[i] < fs[best]) best = i;
  return NmResult{xs[best], fs[best]};
}

PeriodicMax periodic_grid_max(const std::function<double(double)>& f,
                              int grid_points, double margin, int cap) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double step = kTwoPi / grid_points;
  std::vector<double> vals(grid_points);
  double gmax = -1e300, gmin = 1e300;
  int imax = 0;
  for (int i = 0; i < grid_points; ++i) {
    vals[i] = f(i * step);
    if (vals[i] > gmax) {
      gmax = vals[i];
      imax = i;
    }
    gmin = std::min(gmin, vals[i]);
  }
  PeriodicMax best{imax * step, gmax};
  if (gmax - gmin < 1e-13 * std::max(1.0, std::abs(gmax))) return best;

  std::vector<int> order(grid_points);
  for (int i = 0; i < grid_points; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vals[a] > vals[b]; });

  constexpr double kInvPhi = 0.6180339887498949;
  int refined = 0;
  for (int i : order) {
    if (vals[i] + margin <= best.value) break;
    if (++refined > cap) break;
    double lo = i * step - step, hi = i * step + step;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-12) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kInvPhi * (hi - lo);
        f2 = f(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kInvPhi * (hi - lo);
        f1 = f(x1);
      }
    }
    PeriodicMax local = f1 >= f2 ? PeriodicMax{x1, f1} : PeriodicMax{x2, f2};
    if (local.value > best.value) best = local;
  }
  best.arg = std::fmod(best.arg, kTwoPi);
  if (best.arg < 0.0) best.arg += kTwoPi;
  return best;
}

}  // namespace oprad::detail
