#include "oprad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace oprad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kThetaGridPoints = 720;
constexpr double kGoldenWidth = 1e-12;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// Evaluates f(theta) = lambda_max(H_theta(T)) into a reusable workspace.
class ThetaObjective {
 public:
  explicit ThetaObjective(const ComplexMatrix& t)
      : t_(&t), n_(static_cast<int>(t.rows())), work_(t.rows() * t.rows()) {}

  double operator()(double theta) {
    const ComplexMatrix& t = *t_;
    const Complex u = std::polar(1.0, theta);
    for (int i = 0; i < n_; ++i) {
      work_[i * n_ + i] = Complex((u * t(i, i)).real(), 0.0);
      for (int j = i + 1; j < n_; ++j) {
        const Complex hij = 0.5 * (u * t(i, j) + std::conj(u * t(j, i)));
        work_[i * n_ + j] = hij;
        work_[j * n_ + i] = std::conj(hij);
      }
    }
    return detail::jacobi_lambda_max(work_.data(), n_);
  }

 private:
  const ComplexMatrix* t_;
  int n_;
  std::vector<Complex> work_;
};

// Golden-section maximization on [lo, hi]; returns the best evaluated point.
detail::ThetaCandidate golden_max(ThetaObjective& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kGoldenWidth) {
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
  return f1 >= f2 ? detail::ThetaCandidate{x1, f1}
                  : detail::ThetaCandidate{x2, f2};
}

struct ThetaGrid {
  std::vector<double> values;
  double gmax = -1e300;
  double gmin = 1e300;
  int imax = 0;
};

ThetaGrid evaluate_grid(ThetaObjective& f) {
  ThetaGrid g;
  g.values.resize(kThetaGridPoints);
  const double step = kTwoPi / kThetaGridPoints;
  for (int i = 0; i < kThetaGridPoints; ++i) {
    g.values[i] = f(i * step);
    if (g.values[i] > g.gmax) {
      g.gmax = g.values[i];
      g.imax = i;
    }
    g.gmin = std::min(g.gmin, g.values[i]);
  }
  return g;
}

// Certified global maximum of f. Local maxima of a support function are
// smooth with curvature bounded by the function value, so a peak can exceed
// its nearest grid sample by at most gmax * step^2 / 8; grid points below
// the current best by more than that margin cannot hide the maximum.
detail::ThetaCandidate scan_global_max(const ComplexMatrix& t) {
  ThetaObjective f(t);
  const ThetaGrid g = evaluate_grid(f);
  const double step = kTwoPi / kThetaGridPoints;

  detail::ThetaCandidate best{wrap_angle(g.imax * step), g.gmax};
  if (g.gmax - g.gmin < 1e-13 * std::max(1.0, std::abs(g.gmax)))
    return best;  // plateau, nothing to refine

  const double margin =
      std::max(1e-9, std::abs(g.gmax) * step * step * 0.25);

  std::vector<int> order(kThetaGridPoints);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.values[a] > g.values[b]; });

  for (int i : order) {
    if (g.values[i] + margin <= best.value) break;
    const double center = i * step;
    const detail::ThetaCandidate c =
        golden_max(f, center - 0.6 * step, center + 0.6 * step);
    if (c.value > best.value) best = {wrap_angle(c.theta), c.value};
  }
  return best;
}

}  // namespace

RhoParam::RhoParam(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0 || value > 2.0)
    throw rho_error("rho must lie in (0, 2], got " + std::to_string(value));
  if (value < 1e-3)
    throw rho_error("rho below conditioning floor 1e-3: the block scaling "
                    "loses precision as w_rho grows like 1/rho");
}

namespace detail {

ComplexMatrix hermitian_part(const ComplexMatrix& t, double theta) {
  if (!t.square()) throw dimension_error("hermitian_part: matrix not square");
  const std::size_t n = t.rows();
  const Complex u = std::polar(1.0, theta);
  std::vector<Complex> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i * n + i] = Complex((u * t(i, i)).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex hij = 0.5 * (u * t(i, j) + std::conj(u * t(j, i)));
      d[i * n + j] = hij;
      d[j * n + i] = std::conj(hij);
    }
  }
  return ComplexMatrix(n, n, std::move(d));
}

std::vector<ThetaCandidate> scan_theta_maxima(const ComplexMatrix& t,
                                              int cap) {
  if (!t.square()) throw dimension_error("theta scan: matrix not square");
  ThetaObjective f(t);
  const ThetaGrid g = evaluate_grid(f);
  const double step = kTwoPi / kThetaGridPoints;
  const double scale = std::max(1.0, std::abs(g.gmax));

  if (g.gmax - g.gmin < 1e-13 * scale) {
    // Plateau: every angle attains; return an even subsample.
    std::vector<ThetaCandidate> out;
    const int count = std::min(cap, kThetaGridPoints);
    for (int k = 0; k < count; ++k) {
      const int i = static_cast<int>(
          k * (static_cast<double>(kThetaGridPoints) / count));
      out.push_back({wrap_angle(i * step), g.values[i]});
    }
    return out;
  }

  // Admit grid-level local maxima near the global value; the curvature
  // margin covers peaks sitting between grid samples.
  const double margin =
      std::max(1e-9, std::abs(g.gmax) * step * step * 0.25);
  const double band = std::max(1e-6, 3e-4 * std::abs(g.gmax)) + margin;

  std::vector<int> qualifying;
  for (int i = 0; i < kThetaGridPoints; ++i) {
    const double prev = g.values[(i + kThetaGridPoints - 1) % kThetaGridPoints];
    const double next = g.values[(i + 1) % kThetaGridPoints];
    if (g.values[i] >= prev && g.values[i] >= next &&
        g.values[i] >= g.gmax - band)
      qualifying.push_back(i);
  }
  if (qualifying.empty()) qualifying.push_back(g.imax);

  if (static_cast<int>(qualifying.size()) > cap) {
    std::vector<int> sub;
    sub.reserve(cap);
    const double stride =
        static_cast<double>(qualifying.size()) / static_cast<double>(cap);
    for (int k = 0; k < cap; ++k)
      sub.push_back(qualifying[static_cast<std::size_t>(k * stride)]);
    qualifying = std::move(sub);
  }

  std::vector<ThetaCandidate> refined;
  refined.reserve(qualifying.size());
  for (int i : qualifying) {
    const double center = i * step;
    ThetaCandidate c = golden_max(f, center - step, center + step);
    if (g.values[i] > c.value) c = ThetaCandidate{center, g.values[i]};
    c.theta = wrap_angle(c.theta);
    refined.push_back(c);
  }

  std::sort(refined.begin(), refined.end(),
            [](const ThetaCandidate& a, const ThetaCandidate& b) {
              if (a.value != b.value) return a.value > b.value;
              return a.theta < b.theta;
            });

  // Merge candidates that collapsed onto the same angle.
  std::vector<ThetaCandidate> unique;
  for (const ThetaCandidate& c : refined) {
    bool dup = false;
    for (const ThetaCandidate& u : unique) {
      double d = std::abs(c.theta - u.theta);
      d = std::min(d, kTwoPi - d);
      if (d < 1e-7) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(c);
  }
  return unique;
}

}  // namespace detail

RadiusCertificate numerical_radius(const ComplexMatrix& a, double tol) {
  if (!a.square())
    throw dimension_error("numerical_radius: matrix not square");
  if (!(tol > 0.0)) throw value_error("numerical_radius: tol must be > 0");

  const detail::ThetaCandidate best = scan_global_max(a);

  const EigenPair top =
      hermitian_eig_max(detail::hermitian_part(a, best.theta));
  const ComplexVector& z = top.vector;
  const double attained = std::abs(inner(a * z, z));

  RadiusCertificate cert;
  cert.radius = best.value;
  cert.theta_star = best.theta;
  cert.attaining_vector = z;
  cert.residual = std::abs(attained - best.value);
  return cert;
}

ComplexMatrix block_embed(const ComplexMatrix& a, const RhoParam& rho) {
  if (!a.square()) throw dimension_error("block_embed: matrix not square");
  const std::size_t n = a.rows();
  const double r = rho.value();
  const double s = std::sqrt(r * (2.0 - r));
  const double w = 1.0 - r;
  std::vector<Complex> d(4 * n * n, Complex(0.0, 0.0));
  const std::size_t m = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d[i * m + (n + j)] = s * a(i, j);
      d[(n + i) * m + (n + j)] = w * a(i, j);
    }
  return ComplexMatrix(m, m, std::move(d));
}

RadiusCertificate rho_radius(const ComplexMatrix& a, const RhoParam& rho,
                             double tol) {
  const double scale = 2.0 / rho.value();
  RadiusCertificate inner_cert =
      numerical_radius(block_embed(a, rho), tol / scale);
  inner_cert.radius *= scale;
  inner_cert.residual *= scale;
  return inner_cert;
}

std::vector<AttainingSet> attaining_eigenspaces(const ComplexMatrix& t,
                                                double tol) {
  const std::vector<detail::ThetaCandidate> cands =
      detail::scan_theta_maxima(t);
  const double fmax = cands.front().value;

  std::vector<AttainingSet> sets;
  for (const detail::ThetaCandidate& c : cands) {
    if (c.value < fmax - tol) continue;
    const HermitianEigenResult eig =
        hermitian_eigs(detail::hermitian_part(t, c.theta));
    const double lmax = eig.values.back();
    const double degeneracy_band = 1e-8 * std::max(1.0, std::abs(lmax));
    AttainingSet set;
    set.theta = c.theta;
    set.value = c.value;
    for (std::size_t k = 0; k < eig.values.size(); ++k)
      if (eig.values[k] >= lmax - degeneracy_band)
        set.basis.push_back(eig.vectors[k]);
    sets.push_back(std::move(set));
  }
  return sets;
}

std::vector<std::pair<double, ComplexVector>> attaining_vectors(
    const ComplexMatrix& a, const RhoParam& rho, double tol) {
  if (is_zero(a)) throw value_error("attaining_vectors: zero matrix");
  std::vector<std::pair<double, ComplexVector>> out;
  for (AttainingSet& set : attaining_eigenspaces(block_embed(a, rho), tol))
    for (ComplexVector& z : set.basis) out.emplace_back(set.theta, std::move(z));
  return out;
}

double numerical_radius_value(const ComplexMatrix& t) {
  if (!t.square())
    throw dimension_error("numerical_radius_value: matrix not square");
  return scan_global_max(t).value;
}

double rho_radius_value(const ComplexMatrix& a, const RhoParam& rho) {
  // Exact reductions keep the hot paths cheap: w_1 is the operator norm and
  // w_2 is the numerical radius of A itself.
  if (rho.value() == 1.0) return operator_norm(a);
  if (rho.value() == 2.0) return numerical_radius_value(a);
  return (2.0 / rho.value()) * numerical_radius_value(block_embed(a, rho));
}

}  // namespace oprad
