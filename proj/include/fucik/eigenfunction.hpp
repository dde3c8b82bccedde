#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fucik/error.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

/// Comparator sin(n x).
struct SineMode {
  int n;
  double operator()(double x) const { return std::sin(n * x); }
};

/// Normalized Fucik eigenfunction: sup-norm 1, positive slope at 0.
///
/// Positive bumps are multiples of sin(sqrt(alpha) (x - k l)) on [k l, k l + l1),
/// negative bumps are multiples of -sin(sqrt(beta) (x - k l - l1)) on [k l + l1, (k+1) l).
/// The bump with the larger frequency carries the reduced amplitude.
class FucikEigenfunction {
 public:
  explicit FucikEigenfunction(const FucikPoint& p)
      : point_(p),
        bumps_(p.bumps()),
        root_alpha_(std::sqrt(p.alpha)),
        root_beta_(std::sqrt(p.beta)),
        last_period_(p.n == 1 ? 0 : (p.n - 1) / 2) {
    if (p.dominance == Dominance::alpha_dominant) {
      positive_amplitude_ = root_beta_ / root_alpha_;
      negative_amplitude_ = 1.0;
    } else if (p.dominance == Dominance::beta_dominant) {
      positive_amplitude_ = 1.0;
      negative_amplitude_ = root_alpha_ / root_beta_;
    } else {
      positive_amplitude_ = negative_amplitude_ = 1.0;
    }
  }

  const FucikPoint& point() const { return point_; }
  const BumpLengths& bumps() const { return bumps_; }
  double positive_amplitude() const { return positive_amplitude_; }
  double negative_amplitude() const { return negative_amplitude_; }
  int n() const { return point_.n; }

  /// Value on [0, pi]. Arguments up to pi + 1e-12 are clamped to pi.
  double operator()(double x) const {
    if (!(x >= 0.0) || x > pi + 1e-12) {
      throw Error(ErrorCode::out_of_domain, "x = " + std::to_string(x) + " not in [0, pi]");
    }
    x = std::min(x, pi);
    double k = std::floor(x / bumps_.l);
    k = std::min(k, static_cast<double>(last_period_));
    return bump_value(x - k * bumps_.l);
  }

  /// The piecewise definition continued l-periodically to all x >= 0.
  double extended(double x) const {
    if (!(x >= 0.0)) {
      throw Error(ErrorCode::out_of_domain, "extended evaluation needs x >= 0");
    }
    const double k = std::floor(x / bumps_.l);
    return bump_value(x - k * bumps_.l);
  }

  /// Junctions {0, l1, l, l + l1, 2l, ...} intersected with [0, pi], ending at pi.
  std::vector<double> breakpoints() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(point_.n) + 1);
    out.push_back(0.0);
    for (int i = 1; i < point_.n; ++i) {
      const double periods = i / 2;
      out.push_back(i % 2 == 0 ? periods * bumps_.l : periods * bumps_.l + bumps_.l1);
    }
    out.push_back(pi);
    return out;
  }

  /// Locations of the extrema |f| = amplitude, one per bump.
  std::vector<double> peaks() const {
    std::vector<double> out;
    const auto junctions = breakpoints();
    for (std::size_t i = 0; i + 1 < junctions.size(); ++i) {
      out.push_back(0.5 * (junctions[i] + junctions[i + 1]));
    }
    return out;
  }

 private:
  // t is the offset inside one period [0, l].
  double bump_value(double t) const {
    t = std::clamp(t, 0.0, bumps_.l);
    if (t < bumps_.l1) return positive_amplitude_ * std::sin(root_alpha_ * t);
    return -negative_amplitude_ * std::sin(root_beta_ * (t - bumps_.l1));
  }

  FucikPoint point_;
  BumpLengths bumps_;
  double root_alpha_;
  double root_beta_;
  int last_period_;
  double positive_amplitude_ = 1.0;
  double negative_amplitude_ = 1.0;
};

/// Builds f^n_{alpha,beta}; the point must satisfy the curve equation.
inline FucikEigenfunction build(const FucikPoint& p) {
  const double residual = curve_residual(p);
  if (!(std::abs(residual) <= curve_tolerance)) {
    throw Error(ErrorCode::not_on_curve, "point is off Gamma_" + std::to_string(p.n));
  }
  return FucikEigenfunction(p);
}

inline double evaluate(const FucikEigenfunction& f, double x) { return f(x); }

inline std::vector<double> breakpoints(const FucikEigenfunction& f) { return f.breakpoints(); }

}  // namespace fucik
