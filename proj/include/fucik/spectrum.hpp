#pragma once

// Curves of the Fucik spectrum of -u'' on (0, pi) with Dirichlet conditions.
//
// For even n the curve Gamma_n is  (n/2) pi/sqrt(alpha) + (n/2) pi/sqrt(beta) = pi,
// for odd n >= 3 only the branch  ((n+1)/2) pi/sqrt(alpha) + ((n-1)/2) pi/sqrt(beta) = pi
// is represented; the mirrored branch is obtained by swapping alpha and beta.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "fucik/error.hpp"

namespace fucik {

inline constexpr double pi = std::numbers::pi;

/// Absolute tolerance on the curve-equation defect.
inline constexpr double curve_tolerance = 1e-9;

enum class Parity { even, odd };

enum class Dominance { alpha_dominant, beta_dominant, diagonal };

constexpr std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

constexpr std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::alpha_dominant: return "alpha_dominant";
    case Dominance::beta_dominant: return "beta_dominant";
    case Dominance::diagonal: return "diagonal";
  }
  return "unknown";
}

constexpr Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// Tagged coordinates so that completing a point from alpha or from beta is explicit.
struct Alpha {
  double value;
};
struct Beta {
  double value;
};

struct BumpLengths {
  double l1;  // positive bump, pi/sqrt(alpha)
  double l2;  // negative bump, pi/sqrt(beta)
  double l;   // l1 + l2
};

struct FucikPoint {
  int n = 1;
  double alpha = 1.0;
  double beta = 1.0;
  Parity parity = Parity::odd;
  Dominance dominance = Dominance::diagonal;

  double sqrt_alpha() const { return std::sqrt(alpha); }
  double sqrt_beta() const { return std::sqrt(beta); }
  bool is_diagonal() const { return dominance == Dominance::diagonal; }

  BumpLengths bumps() const {
    const double l1 = pi / std::sqrt(alpha);
    const double l2 = pi / std::sqrt(beta);
    return {l1, l2, l1 + l2};
  }
};

namespace detail {

// Number of positive and negative bumps with the left-most bump positive.
constexpr int positive_bumps(int n) { return (n + 1) / 2; }
constexpr int negative_bumps(int n) { return n / 2; }

inline Dominance classify(int n, double alpha, double beta) {
  const double root_alpha = std::sqrt(alpha);
  const double root_beta = std::sqrt(beta);
  const double snap = 8.0 * std::numeric_limits<double>::epsilon() * n;
  if (std::abs(root_alpha - n) <= snap && std::abs(root_beta - n) <= snap) {
    return Dominance::diagonal;
  }
  return root_alpha > n ? Dominance::alpha_dominant : Dominance::beta_dominant;
}

inline FucikPoint assemble(int n, double alpha, double beta) {
  FucikPoint p;
  p.n = n;
  p.parity = parity_of(n);
  p.dominance = classify(n, alpha, beta);
  if (p.dominance == Dominance::diagonal) {
    p.alpha = p.beta = static_cast<double>(n) * n;
  } else {
    p.alpha = alpha;
    p.beta = beta;
  }
  return p;
}

}  // namespace detail

/// Signed defect (left side minus pi) of the Gamma_n equation.
inline double curve_residual(int n, double alpha, double beta) {
  if (n == 1) {
    // The trivial part is represented only by (1, 1).
    return (alpha == 1.0 && beta == 1.0) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const double pos = detail::positive_bumps(n);
  const double neg = detail::negative_bumps(n);
  return pos * pi / std::sqrt(alpha) + neg * pi / std::sqrt(beta) - pi;
}

inline double curve_residual(const FucikPoint& p) { return curve_residual(p.n, p.alpha, p.beta); }

inline FucikPoint diagonal_point(int n) {
  if (n < 1) throw Error(ErrorCode::index_too_small, "n must be >= 1, got " + std::to_string(n));
  return detail::assemble(n, static_cast<double>(n) * n, static_cast<double>(n) * n);
}

/// Validates an explicit (n, alpha, beta) triple and classifies it.
inline FucikPoint make_point(int n, double alpha, double beta) {
  if (n < 1) throw Error(ErrorCode::index_too_small, "n must be >= 1, got " + std::to_string(n));
  if (n == 1) {
    if (alpha != 1.0 || beta != 1.0) {
      throw Error(ErrorCode::not_on_curve, "n = 1 is represented only by (1, 1)");
    }
    return diagonal_point(1);
  }
  if (!(alpha > 1.0) || !(beta > 1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::not_on_curve, "nontrivial points need alpha > 1 and beta > 1");
  }
  const double residual = curve_residual(n, alpha, beta);
  if (!(std::abs(residual) <= curve_tolerance)) {
    throw Error(ErrorCode::not_on_curve,
                "curve residual " + std::to_string(residual) + " exceeds tolerance for n = " +
                    std::to_string(n));
  }
  return detail::assemble(n, alpha, beta);
}

/// Returns the unique partner beta on Gamma_n.
inline FucikPoint complete_point(int n, Alpha given) {
  if (n < 2) throw Error(ErrorCode::index_too_small, "complete_point needs n >= 2");
  const double a = given.value;
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::infeasible_point, "alpha must be finite and > 1");
  }
  const double root = std::sqrt(a);
  // Even: beta = n^2 alpha/(2 sqrt(alpha) - n)^2.
  // Odd:  beta = (n-1)^2 alpha/(2 sqrt(alpha) - (n+1))^2.
  const double shift = n % 2 == 0 ? n : n + 1;
  const double scale = n % 2 == 0 ? n : n - 1;
  const double denom = 2.0 * root - shift;
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::infeasible_point,
                "no partner on Gamma_" + std::to_string(n) + " for alpha = " + std::to_string(a));
  }
  const double b = scale * scale * a / (denom * denom);
  if (!(b > 1.0) || !std::isfinite(b)) {
    throw Error(ErrorCode::infeasible_point, "partner beta is not > 1");
  }
  return detail::assemble(n, a, b);
}

/// Returns the unique partner alpha on Gamma_n.
inline FucikPoint complete_point(int n, Beta given) {
  if (n < 2) throw Error(ErrorCode::index_too_small, "complete_point needs n >= 2");
  const double b = given.value;
  if (!(b > 1.0) || !std::isfinite(b)) {
    throw Error(ErrorCode::infeasible_point, "beta must be finite and > 1");
  }
  const double root = std::sqrt(b);
  // Even: alpha = n^2 beta/(2 sqrt(beta) - n)^2.
  // Odd:  alpha = (n+1)^2 beta/(2 sqrt(beta) - (n-1))^2.
  const double shift = n % 2 == 0 ? n : n - 1;
  const double scale = n % 2 == 0 ? n : n + 1;
  const double denom = 2.0 * root - shift;
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::infeasible_point,
                "no partner on Gamma_" + std::to_string(n) + " for beta = " + std::to_string(b));
  }
  const double a = scale * scale * b / (denom * denom);
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::infeasible_point, "partner alpha is not > 1");
  }
  return detail::assemble(n, a, b);
}

/// Point of Gamma_n (n even) on the line beta = 4 alpha/(2 sqrt(gamma) - 2)^2:
/// alpha = n^2 gamma/4, beta = n^2 gamma/(2 sqrt(gamma) - 2)^2.
inline FucikPoint gamma_line_point(int n, double gamma) {
  if (n < 2) throw Error(ErrorCode::index_too_small, "gamma_line_point needs n >= 2");
  if (n % 2 != 0) throw Error(ErrorCode::odd_index, "gamma_line_point needs even n");
  if (!(gamma >= 4.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::gamma_out_of_range, "gamma must be >= 4");
  }
  const double nn = static_cast<double>(n) * n;
  const double d = 2.0 * std::sqrt(gamma) - 2.0;
  return detail::assemble(n, nn * gamma / 4.0, nn * gamma / (d * d));
}

/// Intersection of the same line with Gamma_n for odd n >= 3:
/// sqrt(alpha) = 1 + (n-1) sqrt(gamma)/2 and beta = alpha/(sqrt(gamma) - 1)^2.
inline FucikPoint gamma_line_odd_point(int n, double gamma) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::invalid_argument, "gamma_line_odd_point needs odd n >= 3");
  }
  if (!(gamma >= 4.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::gamma_out_of_range, "gamma must be >= 4");
  }
  const double root_gamma = std::sqrt(gamma);
  const double root_alpha = 1.0 + 0.5 * (n - 1) * root_gamma;
  const double alpha = root_alpha * root_alpha;
  const double ratio = root_gamma - 1.0;
  return detail::assemble(n, alpha, alpha / (ratio * ratio));
}

}  // namespace fucik
