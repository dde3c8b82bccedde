#pragma once

// Fucik systems: one point (alpha(n), beta(n)) on Gamma_n per index n.
//
// Only three shapes are representable, each with a tail that can be bounded
// in closed form: finitely many perturbed indices, the power family
// max(sqrt(alpha), sqrt(beta)) = n + sqrt(c_n) n^{(1 - eps)/2}, and the gamma line.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fucik/error.hpp"
#include "fucik/spectrum.hpp"
#include "fucik/zeta.hpp"

namespace fucik {

/// Upper end of the gamma range in which the gamma line system is accepted.
inline constexpr double gamma_line_max = 5.682;

enum class CapBranch { even, odd_alpha_dominant, odd_beta_dominant, odd_alpha_uniform, odd_beta_uniform };

constexpr std::string_view to_string(CapBranch b) {
  switch (b) {
    case CapBranch::even: return "even";
    case CapBranch::odd_alpha_dominant: return "odd_alpha_dominant";
    case CapBranch::odd_beta_dominant: return "odd_beta_dominant";
    case CapBranch::odd_alpha_uniform: return "odd_alpha_uniform";
    case CapBranch::odd_beta_uniform: return "odd_beta_uniform";
  }
  return "unknown";
}

/// Strict upper bound on c_n that makes the power family satisfy the summation test.
inline double corollary_cn_cap(int n, double epsilon, CapBranch branch) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::invalid_argument, "epsilon must be > 0");
  const double scale = 1.0 / (zeta(1.0 + epsilon) - 1.0);
  const double nn = n;
  const double poly = nn * nn * (nn * nn + 1.0);
  switch (branch) {
    case CapBranch::even: return 9.0 / (8.0 * (3.0 + pi * pi)) * scale;
    case CapBranch::odd_alpha_dominant: {
      const double q = (nn - 1.0) * (nn - 1.0);
      return q * q / (8.0 * poly) * scale;
    }
    case CapBranch::odd_beta_dominant: {
      const double q = (nn + 1.0) * (nn + 1.0);
      return q * q / (10.0 * poly) * scale;
    }
    case CapBranch::odd_alpha_uniform: return scale / 46.0;
    case CapBranch::odd_beta_uniform: return scale / 10.0;
  }
  return 0.0;
}

/// Explicit points for finitely many indices; every other index is diagonal.
struct FinitePerturbation {
  std::vector<FucikPoint> entries;
};

enum class OddBranch { diagonal, alpha_dominant, beta_dominant };

constexpr std::string_view to_string(OddBranch b) {
  switch (b) {
    case OddBranch::diagonal: return "diagonal";
    case OddBranch::alpha_dominant: return "alpha_dominant";
    case OddBranch::beta_dominant: return "beta_dominant";
  }
  return "unknown";
}

/// c_n given directly, or as a fraction of the corollary cap.
struct CnRule {
  enum class Kind { constant, cap_fraction } kind = Kind::constant;
  double value = 0.0;
  bool uniform_odd_cap = false;  // use the n-independent odd caps
};

/// max(sqrt(alpha(n)), sqrt(beta(n))) = n + sqrt(c_n) n^{(1 - eps)/2}.
struct PowerFamily {
  double epsilon = 0.5;
  CnRule even_rule;
  CnRule odd_rule;
  OddBranch odd_branch = OddBranch::diagonal;
  Dominance even_dominance = Dominance::alpha_dominant;
};

/// Even n on the line through the origin fixed by gamma; odd n diagonal.
struct GammaLine {
  double gamma = 4.0;
};

using SystemSpec = std::variant<FinitePerturbation, PowerFamily, GammaLine>;

namespace detail {

inline CapBranch cap_branch(Parity parity, OddBranch odd, bool uniform) {
  if (parity == Parity::even) return CapBranch::even;
  if (odd == OddBranch::beta_dominant) {
    return uniform ? CapBranch::odd_beta_uniform : CapBranch::odd_beta_dominant;
  }
  return uniform ? CapBranch::odd_alpha_uniform : CapBranch::odd_alpha_dominant;
}

}  // namespace detail

/// c_n of a power family at index n.
inline double power_family_cn(const PowerFamily& f, int n) {
  const Parity parity = parity_of(n);
  const CnRule& rule = parity == Parity::even ? f.even_rule : f.odd_rule;
  if (rule.kind == CnRule::Kind::constant) return rule.value;
  const auto branch = detail::cap_branch(parity, f.odd_branch, rule.uniform_odd_cap);
  return rule.value * corollary_cn_cap(n, f.epsilon, branch);
}

/// Throws InvalidArgument / NotOnCurve / GammaOutOfRange for malformed systems.
inline void validate(const SystemSpec& s) {
  if (const auto* fp = std::get_if<FinitePerturbation>(&s)) {
    std::vector<int> seen;
    for (const auto& p : fp->entries) {
      if (p.n < 1) throw Error(ErrorCode::index_too_small, "entry index must be >= 1");
      if (!(std::abs(curve_residual(p)) <= curve_tolerance)) {
        throw Error(ErrorCode::not_on_curve, "entry n = " + std::to_string(p.n) + " is off its curve");
      }
      if (std::find(seen.begin(), seen.end(), p.n) != seen.end()) {
        throw Error(ErrorCode::invalid_argument, "duplicate entry for n = " + std::to_string(p.n));
      }
      seen.push_back(p.n);
    }
  } else if (const auto* pf = std::get_if<PowerFamily>(&s)) {
    if (!(pf->epsilon > 0.0) || !std::isfinite(pf->epsilon)) {
      throw Error(ErrorCode::invalid_argument, "epsilon must be finite and > 0");
    }
    for (const CnRule* r : {&pf->even_rule, &pf->odd_rule}) {
      if (!(r->value >= 0.0) || !std::isfinite(r->value)) {
        throw Error(ErrorCode::invalid_argument, "c_n rule value must be finite and >= 0");
      }
    }
    if (pf->even_dominance == Dominance::diagonal) {
      throw Error(ErrorCode::invalid_argument, "even dominance must be alpha or beta");
    }
  } else {
    const double g = std::get<GammaLine>(s).gamma;
    if (!(g >= 4.0 && g <= gamma_line_max)) {
      throw Error(ErrorCode::gamma_out_of_range, "gamma must lie in [4, 5.682]");
    }
  }
}

/// The point (alpha(n), beta(n)) of the system.
inline FucikPoint point_at(const SystemSpec& s, int n) {
  if (n < 1) throw Error(ErrorCode::index_too_small, "n must be >= 1");
  if (const auto* fp = std::get_if<FinitePerturbation>(&s)) {
    for (const auto& p : fp->entries) {
      if (p.n == n) return p;
    }
    return diagonal_point(n);
  }
  if (const auto* pf = std::get_if<PowerFamily>(&s)) {
    if (n == 1) return diagonal_point(1);
    const Parity parity = parity_of(n);
    if (parity == Parity::odd && pf->odd_branch == OddBranch::diagonal) return diagonal_point(n);
    const double c = power_family_cn(*pf, n);
    const double root = n + std::sqrt(c) * std::pow(static_cast<double>(n), 0.5 * (1.0 - pf->epsilon));
    if (root == static_cast<double>(n)) return diagonal_point(n);
    const double value = root * root;
    const bool alpha_side = parity == Parity::even ? pf->even_dominance == Dominance::alpha_dominant
                                                   : pf->odd_branch == OddBranch::alpha_dominant;
    return alpha_side ? complete_point(n, Alpha{value}) : complete_point(n, Beta{value});
  }
  const double g = std::get<GammaLine>(s).gamma;
  if (n % 2 == 1) return diagonal_point(n);
  return gamma_line_point(n, g);
}

}  // namespace fucik
