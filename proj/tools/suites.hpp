#pragma once

// Verification suites: closed forms against quadrature and the structural identities.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fucik/fucik.hpp"

namespace fucik::cli {

struct SuiteCheck {
  std::string name;
  long long samples = 0;
  double max_delta = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct SuiteDefaults {
  static constexpr double closedform = 1e-9;
  static constexpr double vanishing = 1e-11;
  static constexpr double dilation = 1e-12;
  static constexpr double paleywiener = 1e-10;
};

namespace detail {

inline double quad(const FucikEigenfunction& f, const auto& g) {
  const auto bp = f.breakpoints();
  return integrate_pieces(g, std::span<const double>(bp));
}

inline SuiteCheck finish(std::string name, const std::vector<double>& deltas, double tol) {
  SuiteCheck c;
  c.name = std::move(name);
  c.samples = static_cast<long long>(deltas.size());
  for (double d : deltas) c.max_delta = std::max(c.max_delta, d);
  c.tolerance = tol;
  c.pass = c.max_delta <= tol;
  return c;
}

}  // namespace detail

/// norm_sq, dist_sq_to_sine and inner_same_index against quadrature; 20 points per curve.
inline std::vector<SuiteCheck> suite_closedform(int nmax, double tol) {
  const int count = std::max(0, nmax - 1);
  std::vector<double> norm(static_cast<std::size_t>(count)), dist(norm.size()), inner(norm.size());
  std::vector<long long> samples(norm.size());
  parallel_for(norm.size(), [&](std::size_t idx) {
    const int n = static_cast<int>(idx) + 2;
    const SineMode phi{n};
    for (const auto& p : sample_curve(n, 20)) {
      const FucikEigenfunction f(p);
      const double qn = detail::quad(f, [&](double x) { return f(x) * f(x); });
      const double qd = detail::quad(f, [&](double x) {
        const double e = f(x) - phi(x);
        return e * e;
      });
      const double qi = detail::quad(f, [&](double x) { return f(x) * phi(x); });
      norm[idx] = std::max(norm[idx], std::abs(qn - norm_sq(p).value));
      dist[idx] = std::max(dist[idx], std::abs(qd - dist_sq_to_sine(p).value));
      inner[idx] = std::max(inner[idx], std::abs(qi - inner_same_index(p).value));
      ++samples[idx];
    }
  });
  auto a = detail::finish("norm_sq", norm, tol);
  auto b = detail::finish("dist_sq_to_sine", dist, tol);
  auto c = detail::finish("inner_same_index", inner, tol);
  long long total = 0;
  for (auto s : samples) total += s;
  a.samples = b.samples = c.samples = total;
  return {a, b, c};
}

/// <f^n, sin(m .)> = 0 by quadrature for (odd n, even m) and (even n > m, even m).
inline std::vector<SuiteCheck> suite_vanishing(int nmax, double tol) {
  const int count = std::max(0, nmax - 1);
  std::vector<double> worst(static_cast<std::size_t>(count));
  std::vector<long long> samples(worst.size());
  bool exact = true;
  std::vector<char> exact_ok(worst.size(), 1);
  parallel_for(worst.size(), [&](std::size_t idx) {
    const int n = static_cast<int>(idx) + 2;
    for (const auto& p : sample_curve(n, 4)) {
      const FucikEigenfunction f(p);
      for (int m = 2; m <= std::max(nmax, n); m += 2) {
        if (m == n) continue;
        if (n % 2 == 0 && m > n) continue;
        const double q = detail::quad(f, [&](double x) { return f(x) * std::sin(m * x); });
        worst[idx] = std::max(worst[idx], std::abs(q));
        if (inner_cross_index(p, m).value != 0.0) exact_ok[idx] = 0;
        ++samples[idx];
      }
    }
  });
  for (char ok : exact_ok) exact = exact && ok;
  auto c = detail::finish("vanishing_quadrature", worst, tol);
  long long total = 0;
  for (auto s : samples) total += s;
  c.samples = total;
  SuiteCheck e{"vanishing_closed_form_exact_zero", total, exact ? 0.0 : 1.0, 0.0, exact};
  return {c, e};
}

/// dist_sq_to_sine <= C_n, with the intermediate bounds in between.
inline std::vector<SuiteCheck> suite_bounds(int nmax) {
  const int count = std::max(0, nmax - 1);
  std::vector<double> excess(static_cast<std::size_t>(count), -1.0);
  std::vector<long long> samples(excess.size());
  parallel_for(excess.size(), [&](std::size_t idx) {
    const int n = static_cast<int>(idx) + 2;
    for (const auto& p : sample_curve(n, 40, 1e-5, 3.0)) {
      const double d = dist_sq_to_sine(p).value;
      const double c = bound_Cn(p);
      double worst = d - c;
      if (n % 2 == 0) {
        const double s = std::max(p.sqrt_alpha(), p.sqrt_beta());
        const double e1 = even_bound_sharp(n, s);
        const double e2 = even_bound_intermediate(n, s);
        worst = std::max({worst, d - e1, e1 - e2, e2 - c});
      }
      excess[idx] = std::max(excess[idx], worst);
      ++samples[idx];
    }
  });
  SuiteCheck c;
  c.name = "dist_sq_below_Cn";
  for (std::size_t i = 0; i < excess.size(); ++i) {
    c.samples += samples[i];
    c.max_delta = std::max(c.max_delta, excess[i]);
  }
  c.tolerance = 0.0;
  c.pass = c.max_delta <= 0.0;
  return {c};
}

/// f^n(x) = f^2(n x/2) for even n and f^n(x) = f^2(((n-1)/2 + 1/sqrt(gamma)) x) for odd n.
inline std::vector<SuiteCheck> suite_dilation(int nmax, double gamma, double tol) {
  const FucikEigenfunction seed(gamma_line_point(2, gamma));
  std::vector<double> even, odd;
  constexpr int grid = 1000;
  for (int n = 2; n <= nmax; ++n) {
    double worst = 0.0;
    if (n % 2 == 0) {
      const FucikEigenfunction f(gamma_line_point(n, gamma));
      for (int i = 0; i <= grid; ++i) {
        const double x = pi * i / grid;
        worst = std::max(worst, std::abs(f(x) - seed.extended(0.5 * n * x)));
      }
      even.push_back(worst);
    } else {
      const FucikEigenfunction f(gamma_line_odd_point(n, gamma));
      const double c = 0.5 * (n - 1) + 1.0 / std::sqrt(gamma);
      for (int i = 0; i <= grid; ++i) {
        const double x = pi * i / grid;
        worst = std::max(worst, std::abs(f(x) - seed.extended(c * x)));
      }
      odd.push_back(worst);
    }
  }
  auto a = detail::finish("dilation_even", even, tol);
  auto b = detail::finish("dilation_odd_offset", odd, tol);
  a.samples *= grid + 1;
  b.samples *= grid + 1;
  return {a, b};
}

/// A_k closed form against quadrature and the c_k bounds, k = 1..kmax.
inline std::vector<SuiteCheck> suite_paleywiener(int kmax, double tol) {
  const std::vector<double> gammas = {4.5, 5.0, 5.5};
  std::vector<double> deltas, excess;
  for (double g : gammas) {
    for (int k = 1; k <= kmax; ++k) {
      const double a = fourier_Ak(g, k);
      deltas.push_back(std::abs(a - fourier_Ak_numeric(g, k)));
      const double bound = ck_bound(g, k);
      const double c = k == 2 ? 1.0 - a : std::abs(a);
      excess.push_back(std::max(0.0, c - bound) + (k == 2 && a > 1.0 ? 1.0 : 0.0));
    }
  }
  auto a = detail::finish("fourier_Ak_vs_quadrature", deltas, tol);
  auto b = detail::finish("ck_bound_domination", excess, 0.0);
  return {a, b};
}

}  // namespace fucik::cli
