#pragma once

// Closed forms for norms, distances to sin(nx) and scalar products with sines.
//
// Every formula is written in the dominant frequency s = max(sqrt(alpha), sqrt(beta))
// and delta = s - n, and trigonometric factors of the form sin(n pi/s) are
// rewritten as sines of small multiples of delta so that no precision is lost
// as the point approaches the diagonal. Inside the band |delta| < singular_band
// the adaptive quadrature is used instead.

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "fucik/eigenfunction.hpp"
#include "fucik/error.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

/// Below this distance |sqrt(alpha) - n| (or |sqrt(x) - m| for resonances) the
/// closed forms defer to quadrature.
inline constexpr double singular_band = 1e-6;

/// Largest comparator index accepted by inner_cross_index.
inline constexpr int max_cross_index = 10000;

enum class FormulaCase {
  even_alpha,
  odd_alpha,
  even_beta,
  odd_beta,
  diagonal,
  near_diagonal_fallback,
  vanishing,
  bumpwise,
  resonant_fallback,
};

constexpr std::string_view to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::even_alpha: return "even_alpha";
    case FormulaCase::odd_alpha: return "odd_alpha";
    case FormulaCase::even_beta: return "even_beta";
    case FormulaCase::odd_beta: return "odd_beta";
    case FormulaCase::diagonal: return "diagonal";
    case FormulaCase::near_diagonal_fallback: return "near_diagonal_fallback";
    case FormulaCase::vanishing: return "vanishing";
    case FormulaCase::bumpwise: return "bumpwise";
    case FormulaCase::resonant_fallback: return "resonant_fallback";
  }
  return "unknown";
}

struct ClosedFormValue {
  double value = 0.0;
  FormulaCase formula_case = FormulaCase::diagonal;
  double singularity_distance = 0.0;
};

namespace detail {

inline void require_on_curve(const FucikPoint& p) {
  if (p.n < 1) throw Error(ErrorCode::index_too_small, "n must be >= 1");
  const double residual = curve_residual(p);
  if (!(std::abs(residual) <= curve_tolerance)) {
    throw Error(ErrorCode::not_on_curve, "point is off Gamma_" + std::to_string(p.n));
  }
}

// Dominant frequency and its offset from n.
struct Dominant {
  double s;
  double delta;
  bool alpha_side;
};

inline Dominant dominant(const FucikPoint& p) {
  const bool alpha_side = p.dominance == Dominance::alpha_dominant;
  const double s = alpha_side ? std::sqrt(p.alpha) : std::sqrt(p.beta);
  return {s, s - p.n, alpha_side};
}

inline FormulaCase formula_case_of(const FucikPoint& p) {
  const bool alpha_side = p.dominance == Dominance::alpha_dominant;
  if (p.parity == Parity::even) return alpha_side ? FormulaCase::even_alpha : FormulaCase::even_beta;
  return alpha_side ? FormulaCase::odd_alpha : FormulaCase::odd_beta;
}

// sin(x)/x with the removable value at 0.
inline double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

// 1 - sin(x)/x without cancellation for small x.
inline double one_minus_sinc(double x) {
  const double x2 = x * x;
  if (std::abs(x) < 0.1) {
    return x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0 * (1.0 - x2 / 110.0))));
  }
  return 1.0 - std::sin(x) / x;
}

// pi/2 - ||f||^2.
inline double norm_deficit(const FucikPoint& p, const Dominant& d) {
  const double n = p.n;
  const double s = d.s;
  if (p.parity == Parity::even) {
    const double q = 2.0 * s - n;
    return pi * n * d.delta / (q * q);
  }
  if (d.alpha_side) {
    const double q = 2.0 * s - (n + 1.0);
    return pi * (n + 1.0) * (s - 1.0) * d.delta / (s * q * q);
  }
  const double q = 2.0 * s - (n - 1.0);
  return pi * (n - 1.0) * (s + 1.0) * d.delta / (s * q * q);
}

// <f, sin(n x)> for even n, written in the dominant frequency s.
inline double inner_even(double n, double s, double delta) {
  const double s4 = s * s * s * s;
  const double factor = 2.0 * s4 / ((2.0 * s - n) * (3.0 * s - n) * (s + n));
  // sin(n pi/s)/(s - n) = (pi/s) sinc(pi delta/s)
  return factor * (pi / s) * sinc(pi * delta / s);
}

// <f, sin(n x)> for odd n in the alpha-dominant case, s = sqrt(alpha).
inline double inner_odd_alpha(double n, double s, double delta) {
  const double s3 = s * s * s;
  const double factor = 8.0 * (n - 1.0) * s3 * (s - 1.0) /
                        ((2.0 * s - (n + 1.0)) * (n + s) * (n + 1.0) *
                         ((3.0 * n - 1.0) * s - n * (n + 1.0)));
  const double u = pi * delta / (2.0 * s);
  const double v = pi * (n + 1.0) * delta / (2.0 * (n - 1.0) * s);
  const double w = pi * delta / ((n - 1.0) * s);
  // sin(u) sin(v)/(delta sin(w)) with the small-delta limit handled by sinc.
  const double ratio = sinc(u) * sinc(v) / sinc(w) * (u * v / (delta * w));
  return factor * ratio;
}

// <f, sin(n x)> for odd n in the beta-dominant case, s = sqrt(beta).
inline double inner_odd_beta(double n, double s, double delta) {
  const double s3 = s * s * s;
  const double factor = 8.0 * (n + 1.0) * s3 * (s + 1.0) /
                        ((2.0 * s - (n - 1.0)) * (n + s) * (n - 1.0) *
                         ((3.0 * n + 1.0) * s - n * (n - 1.0)));
  const double u = pi * delta / (2.0 * s);
  const double v = pi * (n - 1.0) * delta / (2.0 * (n + 1.0) * s);
  const double w = pi * delta / ((n + 1.0) * s);
  const double ratio = sinc(u) * sinc(v) / sinc(w) * (u * v / (delta * w));
  return factor * ratio;
}

inline double inner_closed(const FucikPoint& p, const Dominant& d) {
  const double n = p.n;
  if (p.parity == Parity::even) return inner_even(n, d.s, d.delta);
  return d.alpha_side ? inner_odd_alpha(n, d.s, d.delta) : inner_odd_beta(n, d.s, d.delta);
}

// The four distance formulas, kept separate so the dispatch is observable.
// Even n: pi - deficit - 2 <f, phi> rearranged so that no cancellation occurs,
// pi delta^2 (4 delta^2 + 13 n delta + 7 n^2)/((n + 2 delta)^2 (2n + 3 delta)(2n + delta))
//   + R (1 - sinc(pi delta/s)),  R = 4 pi s^3/((n + 2 delta)(2n + 3 delta)(2n + delta)).
inline double dist_even_alpha(const FucikPoint& p) {
  const double n = p.n;
  const double s = std::sqrt(p.alpha);
  const double d = s - n;
  const double q = (2.0 * n + 3.0 * d) * (2.0 * n + d);
  const double w = n + 2.0 * d;
  const double rational = pi * d * d * (4.0 * d * d + 13.0 * n * d + 7.0 * n * n) / (w * w * q);
  const double r = 4.0 * pi * s * s * s / (w * q);
  return rational + r * one_minus_sinc(pi * d / s);
}

inline double dist_even_beta(const FucikPoint& p) {
  const double n = p.n;
  const double s = std::sqrt(p.beta);
  const double d = s - n;
  const double q = (2.0 * n + 3.0 * d) * (2.0 * n + d);
  const double w = n + 2.0 * d;
  const double rational = pi * d * d * (4.0 * d * d + 13.0 * n * d + 7.0 * n * n) / (w * w * q);
  const double r = 4.0 * pi * s * s * s / (w * q);
  return rational + r * one_minus_sinc(pi * d / s);
}

inline double dist_odd_alpha(const FucikPoint& p) {
  const double n = p.n;
  const double s = std::sqrt(p.alpha);
  const double delta = s - n;
  const double q = 2.0 * s - (n + 1.0);
  const double deficit = pi * (n + 1.0) * (s - 1.0) * delta / (s * q * q);
  return pi - deficit - 2.0 * inner_odd_alpha(n, s, delta);
}

inline double dist_odd_beta(const FucikPoint& p) {
  const double n = p.n;
  const double s = std::sqrt(p.beta);
  const double delta = s - n;
  const double q = 2.0 * s - (n - 1.0);
  const double deficit = pi * (n - 1.0) * (s + 1.0) * delta / (s * q * q);
  return pi - deficit - 2.0 * inner_odd_beta(n, s, delta);
}

template <class G>
double quadrature_of(const FucikEigenfunction& f, const G& g) {
  const auto bp = f.breakpoints();
  return integrate_pieces(g, std::span<const double>(bp));
}

// Sum_{i < K} sin(c i + d); the closed form is used away from sin(c/2) = 0.
inline double sine_progression(int count, double c, double d) {
  if (count <= 0) return 0.0;
  const double half = std::sin(0.5 * c);
  if (std::abs(half) < 1e-4) {
    double sum = 0.0;
    for (int i = 0; i < count; ++i) sum += std::sin(c * i + d);
    return sum;
  }
  return std::sin(0.5 * count * c) * std::sin(0.5 * (count - 1) * c + d) / half;
}

// Integral of sin(a (x - x0)) sin(m x) over one bump [x0, x0 + pi/a], divided
// by sin(m (x0 + pi/(2a))): the factor 2a sin(pi (a - m)/(2a))/((a - m)(a + m)).
inline double bump_weight(double a, double m) {
  const double x = pi * (a - m) / (2.0 * a);
  return 2.0 * a * (pi / (2.0 * a)) * sinc(x) / (a + m);
}

}  // namespace detail

/// ||f^n||^2 on (0, pi).
inline ClosedFormValue norm_sq(const FucikPoint& p) {
  detail::require_on_curve(p);
  if (p.is_diagonal()) return {pi / 2.0, FormulaCase::diagonal, 0.0};
  const auto d = detail::dominant(p);
  const double band = std::abs(d.delta);
  if (band < singular_band) {
    const FucikEigenfunction f(p);
    const double v = detail::quadrature_of(f, [&](double x) { return f(x) * f(x); });
    return {v, FormulaCase::near_diagonal_fallback, band};
  }
  return {pi / 2.0 - detail::norm_deficit(p, d), detail::formula_case_of(p), band};
}

/// ||f^n - sin(n .)||^2 on (0, pi).
inline ClosedFormValue dist_sq_to_sine(const FucikPoint& p) {
  detail::require_on_curve(p);
  if (p.is_diagonal()) return {0.0, FormulaCase::diagonal, 0.0};
  const auto d = detail::dominant(p);
  const double band = std::abs(d.delta);
  if (band < singular_band) {
    const FucikEigenfunction f(p);
    const SineMode phi{p.n};
    const double v = detail::quadrature_of(f, [&](double x) {
      const double e = f(x) - phi(x);
      return e * e;
    });
    return {v, FormulaCase::near_diagonal_fallback, band};
  }
  const FormulaCase c = detail::formula_case_of(p);
  double v = 0.0;
  switch (c) {
    case FormulaCase::even_alpha: v = detail::dist_even_alpha(p); break;
    case FormulaCase::even_beta: v = detail::dist_even_beta(p); break;
    case FormulaCase::odd_alpha: v = detail::dist_odd_alpha(p); break;
    default: v = detail::dist_odd_beta(p); break;
  }
  return {std::max(v, 0.0), c, band};
}

/// <f^n, sin(n .)> on (0, pi).
inline ClosedFormValue inner_same_index(const FucikPoint& p) {
  detail::require_on_curve(p);
  if (p.is_diagonal()) return {pi / 2.0, FormulaCase::diagonal, 0.0};
  const auto d = detail::dominant(p);
  const double band = std::abs(d.delta);
  if (band < singular_band) {
    const FucikEigenfunction f(p);
    const SineMode phi{p.n};
    const double v = detail::quadrature_of(f, [&](double x) { return f(x) * phi(x); });
    return {v, FormulaCase::near_diagonal_fallback, band};
  }
  return {detail::inner_closed(p, d), detail::formula_case_of(p), band};
}

/// <f^n, sin(m .)> on (0, pi) for m != n.
///
/// Each bump contributes a multiple of sin(m x) at its midpoint; the bump
/// midpoints form two arithmetic progressions, summed in closed form.
inline ClosedFormValue inner_cross_index(const FucikPoint& p, int m) {
  detail::require_on_curve(p);
  if (m < 1 || m > max_cross_index) {
    throw Error(ErrorCode::invalid_argument,
                "m must be in [1, " + std::to_string(max_cross_index) + "], got " + std::to_string(m));
  }
  if (m == p.n) throw Error(ErrorCode::invalid_argument, "m must differ from n");
  const bool m_even = m % 2 == 0;
  if (m_even && (p.parity == Parity::odd || p.n > m)) {
    return {0.0, FormulaCase::vanishing, 0.0};
  }
  if (p.is_diagonal()) return {0.0, FormulaCase::diagonal, 0.0};

  const FucikEigenfunction f(p);
  const double a = std::sqrt(p.alpha);
  const double b = std::sqrt(p.beta);
  const double mm = m;
  const double band = std::min(std::abs(a - mm), std::abs(b - mm));
  if (band < singular_band) {
    const SineMode phi{m};
    const double v = detail::quadrature_of(f, [&](double x) { return f(x) * phi(x); });
    return {v, FormulaCase::resonant_fallback, band};
  }
  const auto& bl = f.bumps();
  const int positive = detail::positive_bumps(p.n);
  const int negative = detail::negative_bumps(p.n);
  const double c = mm * bl.l;
  const double pos_sum = detail::sine_progression(positive, c, 0.5 * mm * bl.l1);
  const double neg_sum = detail::sine_progression(negative, c, mm * (bl.l1 + 0.5 * bl.l2));
  const double v = f.positive_amplitude() * detail::bump_weight(a, mm) * pos_sum -
                   f.negative_amplitude() * detail::bump_weight(b, mm) * neg_sum;
  return {v, FormulaCase::bumpwise, band};
}

/// <f^n, sin(m .)> for any m >= 1, dispatching to the same-index form when m = n.
inline ClosedFormValue inner_with_sine(const FucikPoint& p, int m) {
  return m == p.n ? inner_same_index(p) : inner_cross_index(p, m);
}

}  // namespace fucik
