#pragma once

// Deterministic samples of points along Gamma_n.

#include <cmath>
#include <vector>

#include "fucik/spectrum.hpp"

namespace fucik {

/// `count` points on Gamma_n (n >= 2), half alpha-dominant and half beta-dominant.
///
/// The dominant frequency is n (1 + t) with t spread geometrically over
/// [t_min, t_max], so the points approach the diagonal from both sides without
/// entering the band |sqrt(alpha) - n| < n t_min.
inline std::vector<FucikPoint> sample_curve(int n, int count, double t_min = 1e-5, double t_max = 2.0) {
  std::vector<FucikPoint> out;
  if (count <= 0) return out;
  const int alpha_count = (count + 1) / 2;
  const int beta_count = count - alpha_count;
  const auto spread = [&](int i, int total) {
    if (total == 1) return t_max;
    const double u = static_cast<double>(i) / (total - 1);
    return t_min * std::pow(t_max / t_min, u);
  };
  const double nn = n;
  for (int i = 0; i < alpha_count; ++i) {
    const double s = nn * (1.0 + spread(i, alpha_count));
    out.push_back(complete_point(n, Alpha{s * s}));
  }
  for (int i = 0; i < beta_count; ++i) {
    const double s = nn * (1.0 + spread(i, beta_count));
    out.push_back(complete_point(n, Beta{s * s}));
  }
  return out;
}

}  // namespace fucik
