#pragma once

// Dilation operators, the sine coefficients of f^2 on the gamma line, and the
// budget E(gamma) = sum_k c_k ||T_k|| that certifies Paley-Wiener nearness.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "fucik/eigenfunction.hpp"
#include "fucik/error.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

/// sum_{k >= 5} (k^2 - 9)^{-2}.
inline constexpr double dilation_tail_constant = pi * pi / 108.0 - 536741.0 / 6350400.0;

/// Exclusive upper end of gamma for the coefficient bounds; the k >= 5 tail
/// estimate (k^2 - gamma)^{-2} <= (k^2 - 9)^{-2} needs gamma < 9.
inline constexpr double coefficient_bound_gamma_limit = 9.0;

/// g*(x) = (-1)^kappa g(x - pi kappa), kappa = floor(x/pi).
template <class G>
double antiperiodic_extend(const G& g, double x) {
  if (!(x >= 0.0)) throw Error(ErrorCode::negative_argument, "antiperiodic extension needs x >= 0");
  const double kappa = std::floor(x / pi);
  const double y = std::clamp(x - pi * kappa, 0.0, pi);
  const double v = g(y);
  return std::fmod(kappa, 2.0) == 0.0 ? v : -v;
}

/// T_k g(x) = g*(k x/2).
inline Evaluator apply_Tk(int k, Evaluator g) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  return [k, g = std::move(g)](double x) { return antiperiodic_extend(g, 0.5 * k * x); };
}

/// ||T_k|| on L^2(0, pi): 1 for even k, sqrt((2m+2)/(2m+1)) for k = 2m+1.
inline double Tk_norm(int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  if (k % 2 == 0) return 1.0;
  const double m = (k - 1) / 2;
  return std::sqrt((2.0 * m + 2.0) / (2.0 * m + 1.0));
}

namespace detail {

inline void require_gamma(double gamma) {
  if (!(gamma >= 4.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::gamma_out_of_range, "gamma must be >= 4");
  }
}

inline void require_bounded_gamma(double gamma) {
  if (!(gamma >= 4.0 && gamma < coefficient_bound_gamma_limit)) {
    throw Error(ErrorCode::gamma_out_of_range, "gamma must lie in [4, 9)");
  }
}

inline double sinc_pw(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

}  // namespace detail

/// f^2 on the gamma line: the dilation seed of the gamma line system.
inline FucikEigenfunction gamma_line_seed(double gamma) { return FucikEigenfunction(gamma_line_point(2, gamma)); }

/// A_k = (2/pi) <f^2, sin(k .)> computed by quadrature.
inline double fourier_Ak_numeric(double gamma, int k, double tol = default_quadrature_tolerance) {
  detail::require_gamma(gamma);
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  const auto f = gamma_line_seed(gamma);
  const SineMode phi{k};
  const auto bp = f.breakpoints();
  return 2.0 / pi * inner_numeric(f, phi, std::span<const double>(bp), tol);
}

/// Sine coefficient A_k of f^2 on the gamma line, in closed form.
///
/// With s = sqrt(gamma), A_k = (2/pi) gamma^2 (2 - s) sin(k pi/s) / ((s - 1)(k^2 - gamma)(k^2 (s-1)^2 - gamma)).
/// Both zero divisors are removable: k^2 (s-1)^2 - gamma = (k(s-1) - s)(k(s-1) + s)
/// vanishes in gamma >= 4 only for k = 2, s = 2, where it cancels 2 - s, and
/// sin(k pi/s)/(k^2 - gamma) = -(pi/s) sinc(pi d/s)/(k + s) with d = k - s.
inline double fourier_Ak(double gamma, int k) {
  detail::require_gamma(gamma);
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  const double s = std::sqrt(gamma);
  const double kk = k;
  const double d = (kk * kk - gamma) / (kk + s);
  const double sine_ratio = -(pi / s) * detail::sinc_pw(pi * d / s) / (kk + s);
  double second;
  if (k == 2) {
    second = -1.0 / (3.0 * s - 2.0);
  } else {
    const double a = kk * (s - 1.0);
    second = (2.0 - s) / ((a - s) * (a + s));
  }
  const double value = 2.0 / pi * gamma * gamma / (s - 1.0) * second * sine_ratio;
  if (!std::isfinite(value)) return fourier_Ak_numeric(gamma, k);
  return value;
}

/// Upper bound for c_1 = |A_1|, c_2 = |1 - A_2| and c_k = |A_k| (k >= 3).
inline double ck_bound(double gamma, int k) {
  detail::require_bounded_gamma(gamma);
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  const double s = std::sqrt(gamma);
  if (k == 1) {
    return 2.0 / pi * gamma * gamma * (s - 2.0) / ((s - 1.0) * (s - 1.0) * (s + 1.0) * (2.0 * s - 1.0));
  }
  if (k == 2) {
    const double num = ((3.0 + pi * pi) * gamma + (9.0 - 2.0 * pi * pi) * s - 6.0) * (s - 2.0);
    return num / (3.0 * (s - 1.0) * (s + 2.0) * (3.0 * s - 2.0));
  }
  const double q = static_cast<double>(k) * k - gamma;
  return 2.0 / pi * gamma * gamma * (s - 2.0) / (s - 1.0) / (q * q);
}

struct PaleyWienerBudget {
  double gamma = 4.0;
  std::vector<double> c;  // c_1..c_4 bounds, then the k >= 5 tail bound
  std::vector<double> t;  // matching operator norm weights
  double E = 0.0;
};

/// Terms of E(gamma): sqrt(2) c_1 + c_2 + sqrt(4/3) c_3 + c_4 + sqrt(6/5) tail.
inline PaleyWienerBudget budget(double gamma) {
  detail::require_bounded_gamma(gamma);
  const double s = std::sqrt(gamma);
  PaleyWienerBudget b;
  b.gamma = gamma;
  for (int k = 1; k <= 4; ++k) {
    b.c.push_back(ck_bound(gamma, k));
    b.t.push_back(Tk_norm(k));
  }
  b.c.push_back(2.0 / pi * gamma * gamma * (s - 2.0) / (s - 1.0) * dilation_tail_constant);
  b.t.push_back(Tk_norm(5));
  for (std::size_t i = 0; i < b.c.size(); ++i) b.E += b.c[i] * b.t[i];
  return b;
}

inline double E_gamma(double gamma) { return budget(gamma).E; }

/// Largest gamma with E(gamma) < 1, by bisection on [4, 8] to width tol.
inline double gamma_admissible_max(double tol) {
  if (!(tol >= 1e-10)) throw Error(ErrorCode::invalid_argument, "tol must be >= 1e-10");
  double lo = 4.0;
  double hi = 8.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (E_gamma(mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// sup over a uniform grid of |f^n(x) - sum_{k <= K} A_k sin(k n x/2)| for the
/// gamma line point of even index n.
inline double theoremD_residual(double gamma, int n, int K, int grid = 4096) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::odd_index, "theoremD_residual needs even n >= 2");
  if (K < 4) throw Error(ErrorCode::invalid_argument, "K must be >= 4");
  if (grid < 2) throw Error(ErrorCode::invalid_argument, "grid must have >= 2 points");
  detail::require_gamma(gamma);
  const FucikEigenfunction f(gamma_line_point(n, gamma));
  std::vector<double> A(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) A[static_cast<std::size_t>(k - 1)] = fourier_Ak(gamma, k);
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = pi * i / (grid - 1);
    double series = 0.0;
    for (int k = 1; k <= K; ++k) series += A[static_cast<std::size_t>(k - 1)] * std::sin(0.5 * k * n * x);
    worst = std::max(worst, std::abs(f(x) - series));
  }
  return worst;
}

}  // namespace fucik
