#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fatigue/error.hpp"

namespace fatigue {

// ---------------------------------------------------------------------------
// Global adaptive quadrature (Gauss-Kronrod 7-15)
// ---------------------------------------------------------------------------

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
};

struct PanelResult {
  double kronrod = 0.0;  // 15-point estimate
  double gauss = 0.0;    // embedded 7-point estimate
  double error = 0.0;    // scaled error estimate for the panel
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15KronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGk15GaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

}  // namespace detail

// One Gauss-Kronrod 7-15 application on [a, b]. The error field follows the
// QUADPACK scaling (|K15 - G7| sharpened by the panel's variation), floored
// near machine precision.
template <class F>
PanelResult gauss_kronrod_15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = detail::kGk15GaussWeights[3] * fc;
  double result_kronrod = detail::kGk15KronrodWeights[7] * fc;
  double resabs = std::abs(result_kronrod);
  double fv[15];
  fv[14] = fc;

  for (int j = 0; j < 7; ++j) {
    const double dx = half * detail::kGk15Nodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[2 * j] = f1;
    fv[2 * j + 1] = f2;
    result_kronrod += detail::kGk15KronrodWeights[j] * (f1 + f2);
    resabs += detail::kGk15KronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) {
      result_gauss += detail::kGk15GaussWeights[j / 2] * (f1 + f2);
    }
  }

  const double mean = 0.5 * result_kronrod;
  double resasc = detail::kGk15KronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += detail::kGk15KronrodWeights[j] *
              (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  }

  PanelResult out;
  out.kronrod = result_kronrod * half;
  out.gauss = result_gauss * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs(out.kronrod - out.gauss);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  if (resabs > tiny / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  out.error = err;
  return out;
}

// Globally adaptive integration of f over [lo, hi]: the panel with the
// largest error estimate is bisected until the summed estimate satisfies
// max(abs_tol, rel_tol * |value|). Optional break_points pre-split the
// interval, which lets callers bracket known sharp features so they cannot
// hide inside a single coarse panel. An integrable singularity at an
// endpoint is tolerated because the rule never evaluates endpoints.
//
// Throws QuadratureError (carrying the best estimate and its error bound)
// when the subdivision budget is exhausted.
template <class F>
QuadratureResult adaptive_quad(F&& f, double lo, double hi, double rel_tol = 1e-10,
                               double abs_tol = 1e-12, int max_subdivisions = 2000,
                               std::span<const double> break_points = {}) {
  if (!(lo < hi)) throw ParamError("adaptive_quad: requires lo < hi");

  struct Panel {
    double a, b, value, error;
  };
  std::vector<Panel> panels;
  panels.reserve(64);

  std::vector<double> edges;
  edges.reserve(break_points.size() + 2);
  edges.push_back(lo);
  for (double p : break_points) {
    if (p > lo && p < hi) edges.push_back(p);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const PanelResult r = gauss_kronrod_15(f, edges[i], edges[i + 1]);
    panels.push_back({edges[i], edges[i + 1], r.kronrod, r.error});
    total += r.kronrod;
    total_err += r.error;
  }

  int subdivisions = 0;
  const auto tolerance_met = [&] {
    return total_err <= std::max(abs_tol, rel_tol * std::abs(total));
  };

  while (!tolerance_met()) {
    if (subdivisions >= max_subdivisions) {
      throw QuadratureError("adaptive_quad: subdivision budget exhausted (estimate " +
                                std::to_string(total) + ", error bound " +
                                std::to_string(total_err) + ")",
                            total, total_err);
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(p.a < mid && mid < p.b)) {
      // Interval no longer splittable in floating point; accept its estimate.
      panels[worst].error = 0.0;
      total_err = 0.0;
      for (const auto& q : panels) total_err += q.error;
      continue;
    }
    const PanelResult left = gauss_kronrod_15(f, p.a, mid);
    const PanelResult right = gauss_kronrod_15(f, mid, p.b);
    panels[worst] = {p.a, mid, left.kronrod, left.error};
    panels.push_back({mid, p.b, right.kronrod, right.error});
    ++subdivisions;

    total = 0.0;
    total_err = 0.0;
    for (const auto& q : panels) {
      total += q.value;
      total_err += q.error;
    }
  }

  return {total, total_err, subdivisions};
}

// ---------------------------------------------------------------------------
// Unconstrained minimization (Nelder-Mead polish + BFGS refinement)
// ---------------------------------------------------------------------------

enum class StopReason { gradient, step, ftol, max_iterations };

struct OptimResult {
  std::vector<double> argmin;
  double fmin = std::numeric_limits<double>::infinity();
  bool converged = false;
  int iterations = 0;
  StopReason reason = StopReason::max_iterations;
};

struct MinimizeOptions {
  double ftol = 1e-12;
  double gtol = 1e-8;
  double xtol = 1e-10;
  int max_iter_simplex = 0;  // 0 -> 250 * dim
  int max_iter_bfgs = 300;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

// Two-stage strategy: a derivative-free simplex pass to escape the rough
// neighbourhood of x0, then quasi-Newton refinement with finite-difference
// gradients. Non-finite objective values during the search reject the step;
// a non-finite value at x0 is an immediate error. Never returns an fmin
// above f(x0).
OptimResult minimize(const ObjectiveFn& f, std::span<const double> x0,
                     const MinimizeOptions& options = {});

// Central-difference Hessian with per-coordinate step
// h_i = cbrt(machine epsilon) * (1 + |x_i|), symmetrized as (H + H^T)/2.
// Returns a row-major n x n matrix. Throws NumericError naming the
// coordinate pair if a stencil evaluation is non-finite.
std::vector<double> fd_hessian(const ObjectiveFn& f, std::span<const double> x,
                               double h_rel = 0.0);

// Bracketed bisection; requires f(lo) and f(hi) of opposite sign. Returns the
// midpoint of the final bracket whose width is <= tol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-12);

// ln(sum exp(v_i)) with max-shift stabilization; -inf entries are tolerated
// and an all -inf input yields -inf.
double log_sum_exp(std::span<const double> values);

// ---------------------------------------------------------------------------
// Small dense symmetric linear algebra (row-major, n <= ~10 in practice)
// ---------------------------------------------------------------------------

// Cholesky factor L (lower, row-major) of a symmetric positive definite
// matrix; empty vector if the factorization fails.
std::vector<double> cholesky(std::span<const double> a, std::size_t n);

// log(det A) from a Cholesky factor.
double cholesky_log_det(std::span<const double> lower, std::size_t n);

// Inverse of an SPD matrix via its Cholesky factorization; throws
// NumericError when the matrix is not positive definite.
std::vector<double> spd_inverse(std::span<const double> a, std::size_t n);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> sym_eigenvalues(std::span<const double> a, std::size_t n);

}  // namespace fatigue
