#pragma once

// Upper bounds C_n on ||f^n - sin(n .)||^2 and the summation criteria built on them.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fucik/closedform.hpp"
#include "fucik/error.hpp"
#include "fucik/spectrum.hpp"
#include "fucik/system.hpp"
#include "fucik/zeta.hpp"

namespace fucik {

/// Margin by which a power-family total must stay below pi/2.
inline constexpr double certification_margin = 1e-12;

/// Number of indices summed explicitly before the analytic tail takes over.
inline constexpr int default_explicit_terms = 2000;

enum class Verdict { riesz_basis_certified, inconclusive };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::riesz_basis_certified ? "riesz_basis_certified" : "inconclusive";
}

struct NearnessReport {
  double partial_sum = 0.0;
  double tail_bound = 0.0;
  double total_upper = 0.0;
  double threshold = pi / 2.0;
  Verdict verdict = Verdict::inconclusive;
  double r = 0.0;  // upper bound on sum_n ||f^n - sin(n .)||^2
  int explicit_terms = 0;
};

namespace detail {

inline constexpr double even_bound_constant = 4.0 * (3.0 + pi * pi) * pi / 9.0;

inline double odd_alpha_constant(double n) {
  const double q = (n - 1.0) * (n - 1.0);
  return 4.0 * pi * n * n * (n * n + 1.0) / (q * q);
}

inline double odd_beta_constant(double n) {
  const double q = (n + 1.0) * (n + 1.0);
  return 5.0 * pi * n * n * (n * n + 1.0) / (q * q);
}

}  // namespace detail

/// C_n(alpha, beta): even n uses the larger frequency, odd n the alpha or beta branch.
inline double bound_Cn(int n, double alpha, double beta) {
  if (n < 2) throw Error(ErrorCode::index_too_small, "bound_Cn needs n >= 2");
  if (!(std::abs(curve_residual(n, alpha, beta)) <= curve_tolerance)) {
    throw Error(ErrorCode::not_on_curve, "point is off Gamma_" + std::to_string(n));
  }
  const double nn = n;
  if (n % 2 == 0) {
    const double x = std::max(std::sqrt(alpha), std::sqrt(beta)) / nn - 1.0;
    return detail::even_bound_constant * x * x;
  }
  if (alpha >= beta) {
    const double x = std::sqrt(alpha) / nn - 1.0;
    return detail::odd_alpha_constant(nn) * x * x;
  }
  const double x = std::sqrt(beta) / nn - 1.0;
  return detail::odd_beta_constant(nn) * x * x;
}

inline double bound_Cn(const FucikPoint& p) {
  if (p.is_diagonal()) return 0.0;
  return bound_Cn(p.n, p.alpha, p.beta);
}

/// Sharper even-n bound obtained before the n-independent simplification; s is
/// the larger frequency.
inline double even_bound_sharp(int n, double s) {
  const double nn = n;
  const double d = s - nn;
  const double num = 4.0 * (3.0 + pi * pi) * s * s + s * nn * (15.0 - 2.0 * pi * pi) - 6.0 * nn * nn;
  const double q = 2.0 * s - nn;
  return pi / 3.0 * num / (q * q * (3.0 * s - nn) * (s + nn)) * d * d;
}

/// Intermediate even-n bound between even_bound_sharp and C_n.
inline double even_bound_intermediate(int n, double s) {
  const double nn = n;
  const double d = s - nn;
  const double num = 4.0 * (3.0 + pi * pi) * s * s - (2.0 * pi * pi - 9.0) * nn * nn;
  return pi / 3.0 * num / (nn * nn * (3.0 * s - nn) * (s + nn)) * d * d;
}

/// Intermediate odd-n bound (alpha >= beta) preceding C_n; s = sqrt(alpha).
inline double odd_alpha_bound_intermediate(int n, double s) {
  const double nn = n;
  const double d = s - nn;
  const double q = (nn - 1.0) * (nn - 1.0);
  return pi * d * d * (nn * nn + 1.0) * (288.0 + (1296.0 + 96.0 * pi * pi) * s * s) /
         (576.0 * q * q * s * s);
}

/// Summand ||f - phi||^2 - <f - phi, f>^2/||f||^2 of the weakened criterion.
inline double kato_weakened_term(const FucikPoint& p) {
  const double d = dist_sq_to_sine(p).value;
  if (d == 0.0) return 0.0;
  const double nsq = norm_sq(p).value;
  const double inner = nsq - pi / 2.0 + d;
  const double term = d - inner * inner / (4.0 * nsq);
  return std::clamp(term, 0.0, d);
}

/// Points (n, n + sqrt(cap_n) n^{(1 - eps)/2}) for n in [n_from, n_to].
inline std::vector<std::pair<int, double>> region_boundary(double epsilon, CapBranch branch, int n_from,
                                                           int n_to) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::invalid_argument, "epsilon must be > 0");
  if (n_from < 1 || n_to < n_from) throw Error(ErrorCode::invalid_argument, "invalid n range");
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (int n = n_from; n <= n_to; ++n) {
    const double cap = corollary_cn_cap(n, epsilon, branch);
    out.emplace_back(n, n + std::sqrt(cap) * std::pow(static_cast<double>(n), 0.5 * (1.0 - epsilon)));
  }
  return out;
}

namespace detail {

// K_n c_n for the power family, where C_n = K_n c_n n^{-1-eps}.
inline double power_family_weight(const PowerFamily& f, int n) {
  const double c = power_family_cn(f, n);
  if (n % 2 == 0) return even_bound_constant * c;
  if (f.odd_branch == OddBranch::diagonal) return 0.0;
  const double k = f.odd_branch == OddBranch::alpha_dominant ? odd_alpha_constant(n) : odd_beta_constant(n);
  return k * c;
}

inline double rule_limit(const CnRule& rule, double epsilon, CapBranch branch) {
  if (rule.kind == CnRule::Kind::constant) return rule.value;
  const double scale = 1.0 / (zeta(1.0 + epsilon) - 1.0);
  switch (branch) {
    case CapBranch::even: return rule.value * corollary_cn_cap(2, epsilon, branch);
    case CapBranch::odd_alpha_dominant: return rule.value * scale / 8.0;
    case CapBranch::odd_beta_dominant: return rule.value * scale / 10.0;
    default: return rule.value * corollary_cn_cap(3, epsilon, branch);
  }
}

// lim_{n -> inf} K_n c_n within one parity class.
inline double power_family_weight_limit(const PowerFamily& f, Parity parity) {
  if (parity == Parity::even) {
    return even_bound_constant * rule_limit(f.even_rule, f.epsilon, CapBranch::even);
  }
  if (f.odd_branch == OddBranch::diagonal) return 0.0;
  const auto branch = cap_branch(Parity::odd, f.odd_branch, f.odd_rule.uniform_odd_cap);
  const double k = f.odd_branch == OddBranch::alpha_dominant ? 4.0 * pi : 5.0 * pi;
  return k * rule_limit(f.odd_rule, f.epsilon, branch);
}

// K_n c_n is monotone in n within each parity, so its supremum over n > N is
// attained at the first index or in the limit.
inline double power_family_tail(const PowerFamily& f, int last_explicit) {
  const double s = 1.0 + f.epsilon;
  if (!(s >= zeta_min_argument)) {
    throw Error(ErrorCode::tail_not_boundable, "epsilon too small for an analytic tail");
  }
  const int first_even = last_explicit % 2 == 0 ? last_explicit + 2 : last_explicit + 1;
  const int first_odd = last_explicit % 2 == 0 ? last_explicit + 1 : last_explicit + 2;
  const double even_sup =
      std::max(power_family_weight(f, first_even), power_family_weight_limit(f, Parity::even));
  const double odd_sup = std::max(power_family_weight(f, first_odd), power_family_weight_limit(f, Parity::odd));
  return even_sup * zeta_remainder_even(s, last_explicit) + odd_sup * zeta_remainder_odd(s, last_explicit);
}

}  // namespace detail

/// Summation test sum_n C_n < pi/2.
inline NearnessReport theorem1_check(const SystemSpec& spec, int explicit_terms = default_explicit_terms) {
  validate(spec);
  NearnessReport report;
  report.threshold = pi / 2.0;
  double margin = 0.0;
  if (const auto* fp = std::get_if<FinitePerturbation>(&spec)) {
    for (const auto& p : fp->entries) {
      if (p.n >= 2 && !p.is_diagonal()) report.partial_sum += bound_Cn(p);
    }
    report.tail_bound = 0.0;
  } else if (const auto* pf = std::get_if<PowerFamily>(&spec)) {
    if (explicit_terms < 2) throw Error(ErrorCode::invalid_argument, "explicit_terms must be >= 2");
    if (!(1.0 + pf->epsilon >= zeta_min_argument)) {
      throw Error(ErrorCode::tail_not_boundable, "epsilon too small for an analytic tail");
    }
    for (int n = 2; n <= explicit_terms; ++n) report.partial_sum += bound_Cn(point_at(spec, n));
    report.tail_bound = detail::power_family_tail(*pf, explicit_terms);
    report.explicit_terms = explicit_terms;
    margin = certification_margin;
  } else {
    const double g = std::get<GammaLine>(spec).gamma;
    report.explicit_terms = std::max(explicit_terms, 2);
    for (int n = 2; n <= report.explicit_terms; n += 2) report.partial_sum += bound_Cn(point_at(spec, n));
    report.tail_bound = g == 4.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  report.total_upper = report.partial_sum + report.tail_bound;
  report.r = report.total_upper;
  report.verdict = report.total_upper < report.threshold - margin ? Verdict::riesz_basis_certified
                                                                  : Verdict::inconclusive;
  return report;
}

/// Convergence test for systems with diagonal odd entries: sum over even n of
/// (max(sqrt(alpha), sqrt(beta))/n - 1)^2 < infinity.
inline NearnessReport theorem2_check(const SystemSpec& spec, int explicit_terms = default_explicit_terms) {
  validate(spec);
  NearnessReport report;
  report.threshold = std::numeric_limits<double>::infinity();
  const auto term = [](const FucikPoint& p) {
    const double x = std::max(p.sqrt_alpha(), p.sqrt_beta()) / p.n - 1.0;
    return x * x;
  };
  double dist_sum = 0.0;
  double dist_tail = 0.0;
  if (const auto* fp = std::get_if<FinitePerturbation>(&spec)) {
    for (const auto& p : fp->entries) {
      if (p.n % 2 == 1 && !p.is_diagonal()) {
        throw Error(ErrorCode::odd_entries_not_diagonal, "entry n = " + std::to_string(p.n) + " is not diagonal");
      }
    }
    for (const auto& p : fp->entries) {
      if (p.is_diagonal()) continue;
      report.partial_sum += term(p);
      dist_sum += dist_sq_to_sine(p).value;
    }
  } else if (const auto* pf = std::get_if<PowerFamily>(&spec)) {
    if (pf->odd_branch != OddBranch::diagonal) {
      throw Error(ErrorCode::odd_entries_not_diagonal, "power family has non-diagonal odd entries");
    }
    if (explicit_terms < 2) throw Error(ErrorCode::invalid_argument, "explicit_terms must be >= 2");
    const double s = 1.0 + pf->epsilon;
    if (!(s >= zeta_min_argument)) {
      throw Error(ErrorCode::tail_not_boundable, "epsilon too small for an analytic tail");
    }
    for (int n = 2; n <= explicit_terms; n += 2) {
      const auto p = point_at(spec, n);
      report.partial_sum += term(p);
      dist_sum += dist_sq_to_sine(p).value;
    }
    const int first = explicit_terms % 2 == 0 ? explicit_terms + 2 : explicit_terms + 1;
    const double c_sup = std::max(power_family_cn(*pf, first),
                                  detail::rule_limit(pf->even_rule, pf->epsilon, CapBranch::even));
    report.tail_bound = c_sup * zeta_remainder_even(s, explicit_terms);
    dist_tail = detail::even_bound_constant * report.tail_bound;
    report.explicit_terms = explicit_terms;
  } else {
    const double g = std::get<GammaLine>(spec).gamma;
    report.explicit_terms = std::max(explicit_terms, 2);
    for (int n = 2; n <= report.explicit_terms; n += 2) {
      const auto p = point_at(spec, n);
      report.partial_sum += term(p);
      dist_sum += dist_sq_to_sine(p).value;
    }
    report.tail_bound = g == 4.0 ? 0.0 : std::numeric_limits<double>::infinity();
    dist_tail = report.tail_bound;
  }
  report.total_upper = report.partial_sum + report.tail_bound;
  report.r = dist_sum + dist_tail;
  report.verdict = std::isfinite(report.total_upper) ? Verdict::riesz_basis_certified : Verdict::inconclusive;
  return report;
}

}  // namespace fucik
