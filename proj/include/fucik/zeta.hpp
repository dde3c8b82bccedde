#pragma once

// Riemann zeta function for real s > 1 by Euler-Maclaurin summation.

#include <array>
#include <cmath>
#include <string>

#include "fucik/error.hpp"

namespace fucik {

inline constexpr double zeta_min_argument = 1.0 + 1e-6;

namespace detail {

inline constexpr int zeta_explicit_terms = 1000;

// B_2, B_4, B_6, B_8 divided by (2j)!.
inline constexpr std::array<double, 4> bernoulli_over_factorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
};

inline void require_convergent(double s) {
  if (!(s >= zeta_min_argument)) {
    throw Error(ErrorCode::divergent_argument,
                "zeta needs s >= 1 + 1e-6, got " + std::to_string(s));
  }
}

// Sum_{k >= from} k^{-s}: explicit terms, then the Euler-Maclaurin tail at M.
inline double power_tail(double s, double from) {
  double sum = 0.0;
  double k = from;
  for (int i = 0; i < zeta_explicit_terms; ++i, k += 1.0) sum += std::pow(k, -s);
  const double m = k;
  double tail = std::pow(m, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m, -s);
  // Rising products s (s+1) ... (s+2j-2) times m^{-s-2j+1}.
  double rising = s;
  double power = std::pow(m, -s - 1.0);
  for (std::size_t j = 0; j < bernoulli_over_factorial.size(); ++j) {
    tail += bernoulli_over_factorial[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= m * m;
  }
  return sum + tail;
}

}  // namespace detail

/// zeta(s) = Sum_{n >= 1} n^{-s}.
inline double zeta(double s) {
  detail::require_convergent(s);
  return detail::power_tail(s, 1.0);
}

/// Sum_{n > N} n^{-s}.
inline double zeta_remainder(double s, long long N) {
  detail::require_convergent(s);
  if (N < 0) throw Error(ErrorCode::invalid_argument, "remainder index must be >= 0");
  return detail::power_tail(s, static_cast<double>(N) + 1.0);
}

/// Sum over even n > N of n^{-s}.
inline double zeta_remainder_even(double s, long long N) {
  return std::pow(2.0, -s) * zeta_remainder(s, N / 2);
}

/// Sum over odd n > N of n^{-s}.
inline double zeta_remainder_odd(double s, long long N) {
  return zeta_remainder(s, N) - zeta_remainder_even(s, N);
}

}  // namespace fucik
