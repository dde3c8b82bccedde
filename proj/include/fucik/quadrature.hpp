#pragma once

// Adaptive piecewise Gauss-Legendre quadrature.
//
// Each smooth piece between consecutive breakpoints is integrated with a
// 20-point Gauss-Legendre rule; a panel is accepted when the one-panel and the
// two-half-panel results agree within the panel's share of the tolerance,
// otherwise it is bisected. Panels never straddle a breakpoint, and partial
// results are summed left to right so that results are bit-stable.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fucik/error.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

inline constexpr double default_quadrature_tolerance = 1e-12;
inline constexpr std::size_t quadrature_panel_budget = std::size_t{1} << 20;

using Evaluator = std::function<double(double)>;

struct PiecewiseIntegrand {
  Evaluator evaluator;
  std::vector<double> breakpoints;  // sorted, from 0 to pi
};

namespace detail {

inline constexpr int gauss_order = 20;

struct GaussRule {
  std::array<double, gauss_order> nodes{};
  std::array<double, gauss_order> weights{};
};

// Newton iteration on P_n from the Chebyshev-like initial guesses.
inline GaussRule make_gauss_rule() {
  GaussRule rule;
  constexpr int n = gauss_order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

inline const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

template <class F>
double gauss_panel(const F& f, double a, double b) {
  const auto& rule = gauss_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < gauss_order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

template <class F>
struct Refiner {
  const F& f;
  std::size_t panels = 0;

  // Returns the accepted estimate on [a, b] given the coarse estimate.
  double run(double a, double b, double coarse, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid);
    const double right = gauss_panel(f, mid, b);
    const double fine = left + right;
    panels += 2;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(left) + std::abs(right));
    if (std::abs(fine - coarse) <= std::max(tol, floor) || depth >= 60 || mid <= a || mid >= b) {
      return fine;
    }
    if (panels >= quadrature_panel_budget) {
      throw Error(ErrorCode::no_convergence, "quadrature panel budget exhausted");
    }
    const double l = run(a, mid, left, 0.5 * tol, depth + 1);
    const double r = run(mid, b, right, 0.5 * tol, depth + 1);
    return l + r;
  }
};

}  // namespace detail

/// Integral of f over [breakpoints.front(), breakpoints.back()], piece by piece.
template <class F>
double integrate_pieces(const F& f, std::span<const double> breakpoints,
                        double tol = default_quadrature_tolerance) {
  if (!(tol >= 1e-14)) {
    throw Error(ErrorCode::invalid_argument, "quadrature tolerance must be >= 1e-14");
  }
  if (breakpoints.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "need at least two breakpoints");
  }
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) {
    throw Error(ErrorCode::invalid_argument, "breakpoints must be sorted");
  }
  const double total = breakpoints.back() - breakpoints.front();
  if (!(total > 0.0)) return 0.0;
  detail::Refiner<F> refiner{f};
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    const double coarse = detail::gauss_panel(f, a, b);
    ++refiner.panels;
    sum += refiner.run(a, b, coarse, tol * (b - a) / total, 0);
  }
  return sum;
}

/// Integral over [0, pi] of a piecewise-smooth integrand.
inline double integrate(const PiecewiseIntegrand& g, double tol = default_quadrature_tolerance) {
  const auto& bp = g.breakpoints;
  if (bp.size() < 2 || bp.front() != 0.0 || std::abs(bp.back() - pi) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "breakpoints must start at 0 and end at pi");
  }
  return integrate_pieces(g.evaluator, std::span<const double>(bp), tol);
}

/// Sorted union of breakpoint lists with near-duplicates (within 1e-14) removed.
inline std::vector<double> merge_breakpoints(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  std::vector<double> unique;
  unique.reserve(out.size());
  for (double x : out) {
    if (unique.empty() || x - unique.back() > 1e-14) {
      unique.push_back(x);
    } else {
      unique.back() = std::max(unique.back(), x);
    }
  }
  return unique;
}

/// L2(0, pi) inner product; `breakpoints` must contain the junctions of both factors.
template <class A, class B>
double inner_numeric(const A& a, const B& b, std::span<const double> breakpoints,
                     double tol = default_quadrature_tolerance) {
  const auto product = [&](double x) { return a(x) * b(x); };
  return integrate_pieces(product, breakpoints, tol);
}

/// The trivial partition {0, pi} for functions analytic on the whole interval.
inline std::vector<double> whole_interval() { return {0.0, pi}; }

}  // namespace fucik
