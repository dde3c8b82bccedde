// Independent reference computations shared by the unit tests and the
// acceptance runner. Nothing here calls the closed forms it is used to check.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "fucik/fucik.hpp"

namespace oracle {

using fucik::pi;

/// Piecewise-linear function on [0, pi] through (knots[i], values[i]).
struct PiecewiseLinear {
  std::vector<double> knots;
  std::vector<double> values;

  double operator()(double x) const {
    if (x <= knots.front()) return values.front();
    if (x >= knots.back()) return values.back();
    std::size_t i = 1;
    while (knots[i] < x) ++i;
    const double t = (x - knots[i - 1]) / (knots[i] - knots[i - 1]);
    return (1.0 - t) * values[i - 1] + t * values[i];
  }
};

/// Random piecewise-linear g with zero ends and `pieces` equal cells.
inline PiecewiseLinear random_piecewise_linear(std::mt19937_64& rng, int pieces) {
  std::normal_distribution<double> normal(0.0, 1.0);
  PiecewiseLinear g;
  for (int i = 0; i <= pieces; ++i) {
    g.knots.push_back(pi * i / pieces);
    g.values.push_back(i == 0 || i == pieces ? 0.0 : normal(rng));
  }
  return g;
}

/// Hat function supported on [a, b] inside (0, pi/2).
inline PiecewiseLinear hat(double a, double b) {
  return PiecewiseLinear{{0.0, a, 0.5 * (a + b), b, pi}, {0.0, 0.0, 1.0, 0.0, 0.0}};
}

/// ||g||^2 on [0, pi] for piecewise-linear g: Simpson is exact on each cell.
inline double norm_sq(const PiecewiseLinear& g) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < g.knots.size(); ++i) {
    const double a = g.values[i];
    const double b = g.values[i + 1];
    total += (g.knots[i + 1] - g.knots[i]) * (a * a + a * b + b * b) / 3.0;
  }
  return total;
}

/// ||T_k g||^2 by direct unfolding: T_k g restricted to each preimage of a
/// cell is again linear, with sign (-1)^j on the j-th copy of [0, pi].
inline double dilated_norm_sq(int k, const PiecewiseLinear& g) {
  // x in [0, pi] maps to y = k x/2 in [0, k pi/2]; dx = (2/k) dy.
  const double end = 0.5 * k * pi;
  double total = 0.0;
  for (int copy = 0; copy * pi < end; ++copy) {
    const double shift = copy * pi;
    for (std::size_t i = 0; i + 1 < g.knots.size(); ++i) {
      const double y0 = shift + g.knots[i];
      if (y0 >= end) break;
      const double y1 = std::min(shift + g.knots[i + 1], end);
      const double t = (y1 - y0) / (g.knots[i + 1] - g.knots[i]);
      const double a = g.values[i];
      const double b = a + t * (g.values[i + 1] - a);
      total += (y1 - y0) * (a * a + a * b + b * b) / 3.0;
    }
  }
  return 2.0 / k * total;
}

/// Largest ratio ||T_k g||/||g|| over `count` random g plus the hat extremizer.
inline double rayleigh_max(int k, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  const auto ratio = [k](const PiecewiseLinear& g) { return std::sqrt(dilated_norm_sq(k, g) / norm_sq(g)); };
  double best = ratio(hat(0.1, 1.4));
  for (int i = 0; i < count; ++i) best = std::max(best, ratio(random_piecewise_linear(rng, 4 + i % 40)));
  return best;
}

/// Composite Gauss-Legendre (5 points) on the merged breakpoints, with each
/// cell split `split` times.
template <class F>
double gauss_integral(const F& f, const std::vector<double>& breakpoints, int split = 64) {
  static constexpr double node[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                     0.9061798459386640};
  static constexpr double weight[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                       0.2369268850561891, 0.2369268850561891};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double h = (breakpoints[i + 1] - breakpoints[i]) / split;
    for (int j = 0; j < split; ++j) {
      const double mid = breakpoints[i] + (j + 0.5) * h;
      for (int q = 0; q < 5; ++q) total += 0.5 * h * weight[q] * f(mid + 0.5 * h * node[q]);
    }
  }
  return total;
}

}  // namespace oracle
