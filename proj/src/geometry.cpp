#include "oprad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "oprad/optim.hpp"

namespace oprad {

namespace {

using detail::nelder_mead;
using detail::NmResult;
using detail::periodic_grid_max;
using detail::PeriodicMax;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWitnessAngleTol = 1e-9;

// ---- generic helpers ----------------------------------------------------

std::pair<ComplexVector, ComplexVector> split_stacked(const ComplexVector& z) {
  const std::size_t n = z.dim() / 2;
  std::vector<Complex> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = z[i];
    y[i] = z[n + i];
  }
  return {ComplexVector(std::move(x)), ComplexVector(std::move(y))};
}

// ---- witness candidate machinery ---------------------------------------

// One attaining candidate [x; y] with its theta-independent sign product
// c = <v, Ay> <By, v>; the orthogonality sign condition at angle theta is
// Re(e^{i theta} c) >= 0.
struct OrthCandidate {
  double theta_a = 0.0;  // attaining angle it came from
  ComplexVector x, y;
  double attainment_residual = 0.0;
  Complex sign_product{0.0, 0.0};
};

struct WitnessContext {
  const ComplexMatrix* a;
  const ComplexMatrix* b;
  double rho;
  double srho;   // sqrt(rho(2-rho))
  double crho;   // 1-rho
  double w_a;    // w_rho(A)
};

OrthCandidate make_candidate(const WitnessContext& ctx, double theta_a,
                             const ComplexVector& z) {
  auto [x, y] = split_stacked(z);
  const ComplexVector ay = (*ctx.a) * y;
  const ComplexVector by = (*ctx.b) * y;
  std::vector<Complex> vd(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    vd[i] = ctx.srho * x[i] + ctx.crho * y[i];
  const ComplexVector v(std::move(vd));

  OrthCandidate c;
  c.theta_a = theta_a;
  c.x = std::move(x);
  c.y = std::move(y);
  const Complex pairing = inner(ay, v);  // <Ay, v> = (rho/2) <Tz, z>
  c.attainment_residual =
      std::abs((2.0 / ctx.rho) * std::abs(pairing) - ctx.w_a);
  c.sign_product = std::conj(pairing) * inner(by, v);
  return c;
}

// Enumerates candidates deterministically: eigenspace basis vectors first,
// then pairwise phase/weight combinations on a 16-point grid.
std::vector<OrthCandidate> enumerate_candidates(
    const WitnessContext& ctx, const std::vector<AttainingSet>& sets) {
  static const double kWeights[4] = {0.1 * std::numbers::pi,
                                     0.2 * std::numbers::pi,
                                     0.3 * std::numbers::pi,
                                     0.4 * std::numbers::pi};
  static const double kPhases[4] = {0.0, 0.5 * std::numbers::pi,
                                    std::numbers::pi,
                                    1.5 * std::numbers::pi};
  std::vector<OrthCandidate> out;
  for (const AttainingSet& set : sets) {
    for (const ComplexVector& z : set.basis)
      out.push_back(make_candidate(ctx, set.theta, z));
    for (std::size_t i = 0; i < set.basis.size(); ++i)
      for (std::size_t j = i + 1; j < set.basis.size(); ++j)
        for (double t : kWeights)
          for (double phi : kPhases) {
            const Complex ci(std::cos(t), 0.0);
            const Complex cj = std::polar(std::sin(t), phi);
            std::vector<Complex> zd(set.basis[i].dim());
            for (std::size_t m = 0; m < zd.size(); ++m)
              zd[m] = ci * set.basis[i][m] + cj * set.basis[j][m];
            out.push_back(make_candidate(ctx, set.theta, ComplexVector(std::move(zd))));
          }
  }
  return out;
}

// Fine within-eigenspace search: maximizes the sign value over the unit
// sphere of one attaining eigenspace, where both inner products are
// sesquilinear forms of the coefficient vector.
struct EigenspaceForms {
  double theta_a = 0.0;
  std::vector<ComplexVector> basis;  // stacked [x; y] vectors
  // p1[m][l] = <v_m, A y_l>, p2[m][l] = <B y_m, v_l>
  std::vector<std::vector<Complex>> p1, p2;
};

EigenspaceForms build_forms(const WitnessContext& ctx,
                            const AttainingSet& set) {
  const std::size_t k = set.basis.size();
  EigenspaceForms forms;
  forms.theta_a = set.theta;
  forms.basis = set.basis;
  std::vector<ComplexVector> vs, ays, bys;
  for (const ComplexVector& z : set.basis) {
    auto [x, y] = split_stacked(z);
    std::vector<Complex> vd(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
      vd[i] = ctx.srho * x[i] + ctx.crho * y[i];
    vs.emplace_back(std::move(vd));
    ays.push_back((*ctx.a) * y);
    bys.push_back((*ctx.b) * y);
  }
  forms.p1.assign(k, std::vector<Complex>(k));
  forms.p2.assign(k, std::vector<Complex>(k));
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t l = 0; l < k; ++l) {
      forms.p1[m][l] = inner(vs[m], ays[l]);
      forms.p2[m][l] = inner(bys[m], vs[l]);
    }
  return forms;
}

Complex form_value(const std::vector<std::vector<Complex>>& p,
                   const std::vector<Complex>& w) {
  Complex s(0.0, 0.0);
  for (std::size_t m = 0; m < w.size(); ++m)
    for (std::size_t l = 0; l < w.size(); ++l)
      s += w[m] * std::conj(w[l]) * p[m][l];
  return s;
}

// Maximize Re(e^{i theta} G1(w) G2(w)) over unit w in C^k. Returns the best
// coefficient vector found; search is a pairwise 2-torus sweep plus a
// Nelder-Mead polish over the full sphere parameterization.
std::vector<Complex> maximize_sign_value(const EigenspaceForms& forms,
                                         double theta) {
  const std::size_t k = forms.basis.size();
  const Complex rot = std::polar(1.0, theta);
  auto value = [&](const std::vector<Complex>& w) {
    return (rot * form_value(forms.p1, w) * form_value(forms.p2, w)).real();
  };

  std::vector<Complex> best_w(k, Complex(0.0, 0.0));
  best_w[0] = Complex(1.0, 0.0);
  double best = value(best_w);

  auto consider = [&](const std::vector<Complex>& w) {
    const double g = value(w);
    if (g > best) {
      best = g;
      best_w = w;
    }
  };

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Complex> w(k, Complex(0.0, 0.0));
    w[i] = Complex(1.0, 0.0);
    consider(w);
  }

  constexpr int kTGrid = 48;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      for (int ti = 1; ti < kTGrid; ++ti)
        for (int pi = 0; pi < kTGrid; ++pi) {
          const double t = 0.5 * std::numbers::pi * ti / kTGrid;
          const double phi = kTwoPi * pi / kTGrid;
          std::vector<Complex> w(k, Complex(0.0, 0.0));
          w[i] = Complex(std::cos(t), 0.0);
          w[j] = std::polar(std::sin(t), phi);
          consider(w);
        }
    }

  // Polish over the full real parameterization w = p / ||p||.
  std::vector<double> p0(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    p0[2 * i] = best_w[i].real();
    p0[2 * i + 1] = best_w[i].imag();
  }
  auto objective = [&](const std::vector<double>& p) {
    double nrm = 0.0;
    for (double t : p) nrm += t * t;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) return 1e300;
    std::vector<Complex> w(k);
    for (std::size_t i = 0; i < k; ++i)
      w[i] = Complex(p[2 * i] / nrm, p[2 * i + 1] / nrm);
    return -value(w);
  };
  const NmResult nm = nelder_mead(objective, p0, 0.05, 1e-11, 300);
  if (-nm.value > best) {
    double nrm = 0.0;
    for (double t : nm.x) nrm += t * t;
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < k; ++i)
      best_w[i] = Complex(nm.x[2 * i] / nrm, nm.x[2 * i + 1] / nrm);
  }
  return best_w;
}

WitnessRecord record_from_candidate(const OrthCandidate& c, double theta) {
  WitnessRecord rec;
  rec.theta = theta;
  rec.x = c.x;
  rec.y = c.y;
  rec.attainment_residual = c.attainment_residual;
  const double sign_value =
      (std::polar(1.0, theta) * c.sign_product).real();
  rec.sign_or_product_residual = std::max(0.0, -sign_value);
  return rec;
}

// Shared witness search over a prebuilt attaining decomposition.
WitnessSearch search_orthogonality_witness(
    const WitnessContext& ctx, const std::vector<AttainingSet>& sets,
    const std::vector<OrthCandidate>& candidates, double theta, double tol) {
  WitnessSearch out;
  bool have_best = false;
  double best_score = std::numeric_limits<double>::infinity();

  for (const OrthCandidate& c : candidates) {
    WitnessRecord rec = record_from_candidate(c, theta);
    const double score =
        std::max(rec.attainment_residual, rec.sign_or_product_residual);
    if (!have_best || score < best_score) {
      have_best = true;
      best_score = score;
      out.record = rec;
    }
    if (rec.attainment_residual <= tol &&
        rec.sign_or_product_residual <= tol) {
      out.found = true;
      out.record = rec;
      return out;
    }
  }

  // Degenerate eigenspaces: optimize the sign value inside each eigenspace.
  for (const AttainingSet& set : sets) {
    if (set.basis.size() < 2) continue;
    const EigenspaceForms forms = build_forms(ctx, set);
    const std::vector<Complex> w = maximize_sign_value(forms, theta);
    std::vector<Complex> zd(set.basis[0].dim(), Complex(0.0, 0.0));
    for (std::size_t m = 0; m < w.size(); ++m)
      for (std::size_t i = 0; i < zd.size(); ++i)
        zd[i] += w[m] * set.basis[m][i];
    const OrthCandidate c =
        make_candidate(ctx, set.theta, ComplexVector(std::move(zd)));
    WitnessRecord rec = record_from_candidate(c, theta);
    const double score =
        std::max(rec.attainment_residual, rec.sign_or_product_residual);
    if (score < best_score) {
      best_score = score;
      out.record = rec;
    }
    if (rec.attainment_residual <= tol &&
        rec.sign_or_product_residual <= tol) {
      out.found = true;
      out.record = rec;
      return out;
    }
  }
  return out;
}

WitnessContext make_context(const ComplexMatrix& a, const ComplexMatrix& b,
                            const RhoParam& rho, double w_a) {
  WitnessContext ctx;
  ctx.a = &a;
  ctx.b = &b;
  ctx.rho = rho.value();
  ctx.srho = std::sqrt(ctx.rho * (2.0 - ctx.rho));
  ctx.crho = 1.0 - ctx.rho;
  ctx.w_a = w_a;
  return ctx;
}

// Parallelism witness scan at a known maximizing lambda; any attaining
// vector of the summed block satisfies the product condition when the pair
// is parallel, so basis vectors usually hit immediately and the combination
// grid only matters for degenerate ties.
WitnessSearch parallelism_witness_at(const ComplexMatrix& a,
                                     const ComplexMatrix& b,
                                     const RhoParam& rho, Complex lambda,
                                     double w_a, double w_b, double tol) {
  const double target = w_a * w_b;
  const ComplexMatrix sum = a + lambda * b;
  const std::vector<AttainingSet> sets =
      attaining_eigenspaces(block_embed(sum, rho), kWitnessAngleTol);

  WitnessSearch out;
  double best_score = std::numeric_limits<double>::infinity();
  bool stop = false;
  auto consider = [&](const ComplexVector& z) {
    auto [x, y] = split_stacked(z);
    const ComplexVector u = scaled_witness_vector(x, y, rho);
    const double product = std::abs(inner(a * y, u) * inner(b * y, u));
    WitnessRecord rec;
    rec.x = std::move(x);
    rec.y = std::move(y);
    rec.sign_or_product_residual = std::abs(product - target);
    rec.attainment_residual =
        std::abs(std::abs(inner(sum * rec.y, u)) - (w_a + w_b));
    if (rec.sign_or_product_residual < best_score) {
      best_score = rec.sign_or_product_residual;
      out.record = rec;
    }
    if (rec.sign_or_product_residual <= tol) {
      out.found = true;
      out.record = rec;
      stop = true;
    }
  };

  static const double kWeights[4] = {0.1 * std::numbers::pi,
                                     0.2 * std::numbers::pi,
                                     0.3 * std::numbers::pi,
                                     0.4 * std::numbers::pi};
  static const double kPhases[4] = {0.0, 0.5 * std::numbers::pi,
                                    std::numbers::pi,
                                    1.5 * std::numbers::pi};
  for (const AttainingSet& set : sets) {
    for (const ComplexVector& z : set.basis) {
      consider(z);
      if (stop) return out;
    }
    for (std::size_t i = 0; i < set.basis.size(); ++i)
      for (std::size_t j = i + 1; j < set.basis.size(); ++j)
        for (double t : kWeights)
          for (double phi : kPhases) {
            std::vector<Complex> zd(set.basis[i].dim());
            const Complex ci(std::cos(t), 0.0);
            const Complex cj = std::polar(std::sin(t), phi);
            for (std::size_t m = 0; m < zd.size(); ++m)
              zd[m] = ci * set.basis[i][m] + cj * set.basis[j][m];
            consider(ComplexVector(std::move(zd)));
            if (stop) return out;
          }
  }
  return out;
}

}  // namespace

ComplexVector scaled_witness_vector(const ComplexVector& x,
                                    const ComplexVector& y,
                                    const RhoParam& rho) {
  if (x.dim() != y.dim())
    throw dimension_error("scaled_witness_vector: dimension mismatch");
  const double r = rho.value();
  const double cx = std::sqrt((8.0 - 4.0 * r) / r);
  const double cy = (2.0 - 2.0 * r) / r;
  std::vector<Complex> d(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) d[i] = cx * x[i] + cy * y[i];
  return ComplexVector(std::move(d));
}

OrthogonalityReport is_orthogonal(const ComplexMatrix& a,
                                  const ComplexMatrix& b, const RhoParam& rho,
                                  double tol, int theta_samples) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw dimension_error("is_orthogonal: operands must be square and of "
                          "equal dimension");
  if (!(tol > 0.0)) throw value_error("is_orthogonal: tol must be > 0");

  OrthogonalityReport rep;
  rep.rho = rho.value();

  const bool a_zero = is_zero(a);
  const bool b_zero = is_zero(b);
  if (a_zero || b_zero) {
    rep.degenerate = true;
    rep.base_radius = a_zero ? 0.0 : rho_radius_value(a, rho);
    rep.min_value = rep.base_radius;
    rep.gamma_star = Complex(0.0, 0.0);
    rep.tolerance = tol * std::max(1.0, rep.base_radius);
    rep.orthogonal = true;
    if (!a_zero) {
      // B = 0: any attaining vector works, the sign term vanishes.
      const WitnessContext ctx = make_context(a, b, rho, rep.base_radius);
      const std::vector<AttainingSet> sets =
          attaining_eigenspaces(block_embed(a, rho), kWitnessAngleTol);
      const std::vector<OrthCandidate> cands = enumerate_candidates(ctx, sets);
      for (int j = 0; j < theta_samples; ++j) {
        const double theta = kTwoPi * j / theta_samples;
        WitnessSearch ws =
            search_orthogonality_witness(ctx, sets, cands, theta, 1e-6);
        if (ws.found)
          rep.witnesses.push_back(ws.record);
        else
          rep.failed_witnesses.push_back(ws.record);
      }
    }
    return rep;
  }

  rep.base_radius = rho_radius_value(a, rho);
  const double w_b = rho_radius_value(b, rho);
  const double radius_bound = 2.0 * rep.base_radius / w_b;

  auto objective_c = [&](Complex gamma) {
    return rho_radius_value(a + gamma * b, rho);
  };
  auto objective = [&](const std::vector<double>& p) {
    return objective_c(Complex(p[0], p[1]));
  };

  // Coarse 5x5 grid over the disk |gamma| <= 2 w_rho(A)/w_rho(B); the
  // objective is a convex norm of an affine family, so grid + local
  // simplex search reaches the global minimum.
  std::vector<std::pair<double, std::vector<double>>> grid;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      std::vector<double> p{radius_bound * (i - 2) / 2.0,
                            radius_bound * (j - 2) / 2.0};
      grid.emplace_back(objective(p), p);
    }
  std::stable_sort(grid.begin(), grid.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });

  NmResult best{grid[0].second, grid[0].first};
  const int restarts = 2;
  for (int s = 0; s < restarts && s < static_cast<int>(grid.size()); ++s) {
    const NmResult r = nelder_mead(objective, grid[s].second,
                                   radius_bound / 4.0, 1e-10, 400);
    if (r.value < best.value) best = r;
  }
  // Chained restart with a fresh small simplex to shake off stagnation.
  {
    const double h = std::max(1e-6 * radius_bound, 1e-9);
    const NmResult r = nelder_mead(objective, best.x, h, 1e-10, 200);
    if (r.value < best.value) best = r;
  }

  rep.min_value = best.value;
  rep.gamma_star = Complex(best.x[0], best.x[1]);
  rep.tolerance = tol * std::max(1.0, rep.base_radius);
  rep.orthogonal = rep.min_value >= rep.base_radius - rep.tolerance;

  if (rep.orthogonal) {
    const WitnessContext ctx = make_context(a, b, rho, rep.base_radius);
    const std::vector<AttainingSet> sets =
        attaining_eigenspaces(block_embed(a, rho), kWitnessAngleTol);
    const std::vector<OrthCandidate> cands = enumerate_candidates(ctx, sets);
    for (int j = 0; j < theta_samples; ++j) {
      const double theta = kTwoPi * j / theta_samples;
      WitnessSearch ws =
          search_orthogonality_witness(ctx, sets, cands, theta, 1e-6);
      if (ws.found)
        rep.witnesses.push_back(ws.record);
      else
        rep.failed_witnesses.push_back(ws.record);
    }
  }
  return rep;
}

ParallelismReport is_parallel(const ComplexMatrix& a, const ComplexMatrix& b,
                              const RhoParam& rho, double tol) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw dimension_error("is_parallel: operands must be square and of equal "
                          "dimension");
  if (!(tol > 0.0)) throw value_error("is_parallel: tol must be > 0");

  ParallelismReport rep;
  rep.rho = rho.value();

  const bool a_zero = is_zero(a);
  const bool b_zero = is_zero(b);
  if (a_zero || b_zero) {
    rep.degenerate = true;
    const double w_a = a_zero ? 0.0 : rho_radius_value(a, rho);
    const double w_b = b_zero ? 0.0 : rho_radius_value(b, rho);
    rep.sum_radius = w_a + w_b;
    rep.max_value = rep.sum_radius;
    rep.lambda_star = Complex(1.0, 0.0);
    rep.tolerance = tol * std::max(1.0, rep.sum_radius);
    rep.parallel = true;
    return rep;
  }

  const double w_a = rho_radius_value(a, rho);
  const double w_b = rho_radius_value(b, rho);
  rep.sum_radius = w_a + w_b;

  // The objective is w_b-Lipschitz in the angle, so a peak can exceed its
  // nearest grid sample by at most w_b * pi / 360.
  const PeriodicMax pm = periodic_grid_max(
      [&](double t) {
        return rho_radius_value(a + std::polar(1.0, t) * b, rho);
      },
      360, w_b * std::numbers::pi / 360.0);
  rep.max_value = pm.value;
  rep.lambda_star = std::polar(1.0, pm.arg);
  rep.tolerance = tol * std::max(1.0, rep.sum_radius);
  rep.parallel = rep.max_value >= rep.sum_radius - rep.tolerance;

  if (rep.parallel) {
    WitnessSearch ws =
        parallelism_witness_at(a, b, rho, rep.lambda_star, w_a, w_b, 1e-6);
    if (ws.found)
      rep.witnesses.push_back(ws.record);
    else
      rep.failed_witnesses.push_back(ws.record);
  }
  return rep;
}

WitnessSearch find_orthogonality_witness(const ComplexMatrix& a,
                                         const ComplexMatrix& b,
                                         const RhoParam& rho, double theta,
                                         double tol) {
  if (is_zero(a)) throw value_error("find_orthogonality_witness: zero A");
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw dimension_error("find_orthogonality_witness: dimension mismatch");
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;

  const double w_a = rho_radius_value(a, rho);
  const WitnessContext ctx = make_context(a, b, rho, w_a);
  const std::vector<AttainingSet> sets =
      attaining_eigenspaces(block_embed(a, rho), kWitnessAngleTol);
  const std::vector<OrthCandidate> cands = enumerate_candidates(ctx, sets);
  return search_orthogonality_witness(ctx, sets, cands, theta, tol);
}

WitnessSearch find_parallelism_witness(const ComplexMatrix& a,
                                       const ComplexMatrix& b,
                                       const RhoParam& rho, double tol) {
  if (is_zero(a) || is_zero(b))
    throw value_error("find_parallelism_witness: zero operand");
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw dimension_error("find_parallelism_witness: dimension mismatch");

  const double w_a = rho_radius_value(a, rho);
  const double w_b = rho_radius_value(b, rho);
  const PeriodicMax pm = periodic_grid_max(
      [&](double t) {
        return rho_radius_value(a + std::polar(1.0, t) * b, rho);
      },
      360, w_b * std::numbers::pi / 360.0);
  return parallelism_witness_at(a, b, rho, std::polar(1.0, pm.arg), w_a, w_b,
                                tol);
}

OrthogonalityReport numerical_radius_orthogonal(const ComplexMatrix& a,
                                                const ComplexMatrix& b,
                                                double tol,
                                                int theta_samples) {
  OrthogonalityReport rep = is_orthogonal(a, b, RhoParam(2.0), tol,
                                          theta_samples);
  // rho = 2 collapses the stacked witness: the attaining eigenspace lives in
  // the y block, so x is zero to machine precision and is dropped.
  for (auto* list : {&rep.witnesses, &rep.failed_witnesses})
    for (WitnessRecord& rec : *list) rec.x = ComplexVector::zero(rec.x.dim());
  return rep;
}

ParallelismReport numerical_radius_parallel(const ComplexMatrix& a,
                                            const ComplexMatrix& b,
                                            double tol) {
  ParallelismReport rep = is_parallel(a, b, RhoParam(2.0), tol);
  for (auto* list : {&rep.witnesses, &rep.failed_witnesses})
    for (WitnessRecord& rec : *list) rec.x = ComplexVector::zero(rec.x.dim());
  return rep;
}

// ---- operator-norm special cases ----------------------------------------

namespace {

// q(w) = sum_{m,l} w_m conj(w_l) F[m][l] as inner(N w, w) with N = F^T.
ComplexMatrix form_matrix(const std::vector<std::vector<Complex>>& f) {
  const std::size_t k = f.size();
  std::vector<Complex> d(k * k);
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t m = 0; m < k; ++m) d[l * k + m] = f[m][l];
  return ComplexMatrix(k, k, std::move(d));
}

double lambda_max_rotated(const ComplexMatrix& n, double theta) {
  const ComplexMatrix h = detail::hermitian_part(n, theta);
  std::vector<Complex> w(h.data());
  return detail::jacobi_lambda_max(w.data(), static_cast<int>(h.rows()));
}

// min over theta of lambda_max(H_theta(N)): its negative part is the
// distance from 0 to the numerical range of N (a convex set), which equals
// min |q(w)| over the unit sphere. Minima of lambda_max can be kinks, so
// the pruning margin is the plain Lipschitz bound.
PeriodicMax min_theta_lambda_max(const ComplexMatrix& n) {
  const double margin =
      frobenius_norm(n) * std::numbers::pi / 720.0;
  const PeriodicMax neg = periodic_grid_max(
      [&](double t) { return -lambda_max_rotated(n, t); }, 720, margin, 64);
  return PeriodicMax{neg.arg, -neg.value};
}

Complex form_q(const ComplexMatrix& n, const ComplexVector& w) {
  return inner(n * w, w);
}

// 2-torus minimization of |q| over the unit sphere of a 2-dim compression.
ComplexVector torus_min_q(const ComplexMatrix& n2) {
  auto wvec = [](double t, double phi) {
    return ComplexVector{Complex(std::cos(t), 0.0),
                         std::polar(std::sin(t), phi)};
  };
  double best_t = 0.0, best_phi = 0.0;
  double best = std::numeric_limits<double>::infinity();
  constexpr int kG = 64;
  for (int ti = 0; ti <= kG; ++ti)
    for (int pi = 0; pi < kG; ++pi) {
      const double t = 0.5 * std::numbers::pi * ti / kG;
      const double phi = kTwoPi * pi / kG;
      const double v = std::abs(form_q(n2, wvec(t, phi)));
      if (v < best) {
        best = v;
        best_t = t;
        best_phi = phi;
      }
    }
  const NmResult nm = nelder_mead(
      [&](const std::vector<double>& p) {
        return std::abs(form_q(n2, wvec(p[0], p[1])));
      },
      {best_t, best_phi}, 0.02, 1e-12, 250);
  return wvec(nm.x[0], nm.x[1]);
}

// Finds a unit w with q(w) ~ 0 given that 0 lies in the numerical range of
// N (certified by min_theta_lambda_max <= 0 within tolerance). Boundary
// construction through the touching eigenspace, with an iterative 2-dim
// compression reduction as fallback for interior zeros.
ComplexVector solve_zero_form(const ComplexMatrix& n, double theta_star) {
  const std::size_t k = n.rows();
  const HermitianEigenResult eig =
      hermitian_eigs(detail::hermitian_part(n, theta_star));
  const double lmax = eig.values.back();
  const double band = 1e-9 * std::max(1.0, frobenius_norm(n));
  std::vector<ComplexVector> space;
  for (std::size_t i = 0; i < eig.values.size(); ++i)
    if (eig.values[i] >= lmax - band) space.push_back(eig.vectors[i]);

  ComplexVector w = space.back();
  if (space.size() >= 2) {
    // Restrict Im(e^{i theta*} q) to the touching eigenspace and null it:
    // K[a][b] is the compression of (e^{i th} N - (e^{i th} N)*) / 2i.
    const std::size_t r = space.size();
    const Complex rot = std::polar(1.0, theta_star);
    std::vector<Complex> kd(r * r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        const Complex nab = inner(n * space[b], space[a]);  // e_a^H N e_b
        const Complex nba = inner(n * space[a], space[b]);
        kd[a * r + b] =
            (rot * nab - std::conj(rot * nba)) / Complex(0.0, 2.0);
      }
    const HermitianEigenResult keig =
        hermitian_eigs(ComplexMatrix(r, r, std::move(kd)));
    const double lo = keig.values.front();
    const double hi = keig.values.back();
    std::vector<Complex> coeff(r, Complex(0.0, 0.0));
    if (lo <= 0.0 && hi >= 0.0 && hi - lo > 0.0) {
      const double a_hi = std::sqrt(-lo / (hi - lo));
      const double a_lo = std::sqrt(hi / (hi - lo));
      for (std::size_t i = 0; i < r; ++i)
        coeff[i] = a_hi * keig.vectors.back()[i] + a_lo * keig.vectors.front()[i];
    } else {
      // 0 outside the touching segment: take the least-|eigenvalue| end.
      const bool take_lo = std::abs(lo) < std::abs(hi);
      for (std::size_t i = 0; i < r; ++i)
        coeff[i] =
            (take_lo ? keig.vectors.front() : keig.vectors.back())[i];
    }
    std::vector<Complex> wd(k, Complex(0.0, 0.0));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t i = 0; i < k; ++i) wd[i] += coeff[a] * space[a][i];
    w = normalize(ComplexVector(std::move(wd)));
  }

  // Iterative reduction for interior zeros: pair the current point with the
  // boundary point whose chord passes closest to 0 and minimize |q| on the
  // 2-dim compression, repeating while it improves.
  const double scale = std::max(1.0, frobenius_norm(n));
  for (int round = 0; round < 12; ++round) {
    const double cur = std::abs(form_q(n, w));
    if (cur <= 1e-12 * scale) break;

    const Complex zc = form_q(n, w);
    double best_dist = std::numeric_limits<double>::infinity();
    ComplexVector partner = w;
    for (int i = 0; i < 64; ++i) {
      const double th = kTwoPi * i / 64;
      const EigenPair top = hermitian_eig_max(detail::hermitian_part(n, th));
      const Complex zt = form_q(n, top.vector);
      // distance from 0 to segment [zc, zt]
      const Complex dseg = zt - zc;
      double dist;
      const double len2 = std::norm(dseg);
      if (len2 < 1e-300) {
        dist = std::abs(zc);
      } else {
        double tproj = -(zc.real() * dseg.real() + zc.imag() * dseg.imag()) / len2;
        tproj = std::clamp(tproj, 0.0, 1.0);
        dist = std::abs(zc + tproj * dseg);
      }
      if (dist < best_dist) {
        best_dist = dist;
        partner = top.vector;
      }
    }

    // Orthonormalize {w, partner} and compress.
    const Complex ovl = inner(partner, w);
    std::vector<Complex> pd(k);
    for (std::size_t i = 0; i < k; ++i) pd[i] = partner[i] - ovl * w[i];
    ComplexVector p2(std::move(pd));
    if (p2.norm() < 1e-10) break;
    p2 = normalize(p2);
    std::vector<Complex> nd(4);
    const std::vector<ComplexVector> basis{w, p2};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        nd[a * 2 + b] = inner(n * basis[b], basis[a]);
    const ComplexVector c2 = torus_min_q(ComplexMatrix(2, 2, std::move(nd)));
    std::vector<Complex> nw(k);
    for (std::size_t i = 0; i < k; ++i)
      nw[i] = c2[0] * w[i] + c2[1] * p2[i];
    const ComplexVector wn = normalize(ComplexVector(std::move(nw)));
    if (std::abs(form_q(n, wn)) < cur)
      w = wn;
    else
      break;
  }
  return w;
}

}  // namespace

SubspaceSearch bhatia_semrl_check(const ComplexMatrix& a,
                                  const ComplexMatrix& b, double tol) {
  if (is_zero(a)) throw value_error("bhatia_semrl_check: zero A");
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw dimension_error("bhatia_semrl_check: dimension mismatch");

  const std::vector<ComplexVector> basis = max_singular_subspace(a);
  const std::size_t k = basis.size();
  const double threshold = tol * operator_norm(a) * operator_norm(b);

  std::vector<std::vector<Complex>> f(k, std::vector<Complex>(k));
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t l = 0; l < k; ++l)
      f[m][l] = inner(a * basis[m], b * basis[l]);
  const ComplexMatrix n = form_matrix(f);

  auto lift = [&](const ComplexVector& w) {
    std::vector<Complex> zd(a.rows(), Complex(0.0, 0.0));
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t i = 0; i < a.rows(); ++i) zd[i] += w[m] * basis[m][i];
    return normalize(ComplexVector(std::move(zd)));
  };

  SubspaceSearch out;
  if (k == 1) {
    const ComplexVector z = basis[0];
    out.residual = std::abs(inner(a * z, b * z));
    out.found = out.residual <= threshold;
    if (out.found) out.z = z;
    return out;
  }

  const PeriodicMax mt = min_theta_lambda_max(n);
  const double certified_min = std::max(0.0, -mt.value);
  if (certified_min > threshold) {
    out.found = false;
    out.residual = certified_min;
    return out;
  }

  const ComplexVector w = solve_zero_form(n, mt.arg);
  const ComplexVector z = lift(w);
  out.residual = std::abs(inner(a * z, b * z));
  out.found = out.residual <= threshold;
  if (out.found) out.z = z;
  return out;
}

SubspaceSearch norm_parallel_check(const ComplexMatrix& a,
                                   const ComplexMatrix& b, double tol) {
  if (is_zero(a) || is_zero(b))
    throw value_error("norm_parallel_check: zero operand");
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw dimension_error("norm_parallel_check: dimension mismatch");

  // max over unit z of |<Az, Bz>| is the numerical radius of B* A; its
  // attaining vector is the candidate witness.
  const ComplexMatrix c = adjoint(b) * a;
  const RadiusCertificate cert = numerical_radius(c);
  const double product = operator_norm(a) * operator_norm(b);
  const ComplexVector& z = cert.attaining_vector;

  SubspaceSearch out;
  out.residual = std::abs(std::abs(inner(a * z, b * z)) - product);
  out.found = out.residual <= tol * std::max(1.0, product);
  if (out.found) out.z = z;
  return out;
}

}  // namespace oprad
