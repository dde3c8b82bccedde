#pragma once

// Truncated Gram matrices of Fucik systems and their extreme eigenvalues.

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fucik/closedform.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/error.hpp"
#include "fucik/parallel.hpp"
#include "fucik/quadrature.hpp"
#include "fucik/system.hpp"

namespace fucik {

inline constexpr int max_gram_order = 512;
inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double jacobi_off_tolerance = 1e-12;

/// Dense symmetric matrix stored row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }

  void set(int i, int j, double v) {
    (*this)(i, j) = v;
    (*this)(j, i) = v;
  }

  /// Leading principal k x k block.
  SymmetricMatrix leading(int k) const {
    SymmetricMatrix out(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    }
    return out;
  }

  /// Largest |a_ij - a_ji|.
  double asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
    return worst;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<double> data_;
};

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(SymmetricMatrix a) {
  const int n = a.size();
  const auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(s);
  };
  int sweep = 0;
  while (off_norm() > jacobi_off_tolerance) {
    if (++sweep > jacobi_max_sweeps) {
      throw Error(ErrorCode::no_convergence, "Jacobi iteration did not converge in 100 sweeps");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

struct GramTruncation {
  int N = 0;
  SymmetricMatrix entries;     // <f^i, f^j>, i, j = 1..N
  double normalization = 2.0 / pi;
  double lambda_min = 0.0;     // of normalization * entries
  double lambda_max = 0.0;
};

/// <f, g> for two members of a system.
inline double gram_entry(const FucikPoint& a, const FucikPoint& b) {
  if (a.n == b.n && a.alpha == b.alpha && a.beta == b.beta) return norm_sq(a).value;
  if (a.is_diagonal() && b.is_diagonal()) return a.n == b.n ? pi / 2.0 : 0.0;
  if (b.is_diagonal()) return inner_with_sine(a, b.n).value;
  if (a.is_diagonal()) return inner_with_sine(b, a.n).value;
  const FucikEigenfunction fa(a);
  const FucikEigenfunction fb(b);
  const auto ba = fa.breakpoints();
  const auto bb = fb.breakpoints();
  const auto merged = merge_breakpoints(ba, bb);
  try {
    return inner_numeric(fa, fb, std::span<const double>(merged));
  } catch (const Error& e) {
    throw Error(ErrorCode::entry_quadrature_failure,
                "entry (" + std::to_string(a.n) + ", " + std::to_string(b.n) + "): " + e.what());
  }
}

/// (lambda_min, lambda_max) of normalization * entries.
inline std::pair<double, double> extreme_eigenvalues(const SymmetricMatrix& entries, double normalization) {
  const int n = entries.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty matrix");
  if (entries.asymmetry() > 1e-12) throw Error(ErrorCode::invalid_argument, "matrix is not symmetric");
  SymmetricMatrix scaled(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) scaled(i, j) = normalization * entries(i, j);
  }
  const auto eig = symmetric_eigenvalues(std::move(scaled));
  return {eig.front(), eig.back()};
}

inline std::pair<double, double> extreme_eigenvalues(const GramTruncation& g) {
  return extreme_eigenvalues(g.entries, g.normalization);
}

namespace detail {

inline SymmetricMatrix assemble_gram(const SystemSpec& spec, int N) {
  if (N < 1 || N > max_gram_order) {
    throw Error(ErrorCode::invalid_argument, "N must be in [1, 512], got " + std::to_string(N));
  }
  validate(spec);
  std::vector<FucikPoint> points;
  points.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) points.push_back(point_at(spec, n));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> values(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    values[k] = gram_entry(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
  });
  SymmetricMatrix m(N);
  for (std::size_t k = 0; k < pairs.size(); ++k) m.set(pairs[k].first, pairs[k].second, values[k]);
  return m;
}

}  // namespace detail

/// Gram matrix of the first N members of the system with its extreme normalized eigenvalues.
inline GramTruncation build_gram(const SystemSpec& spec, int N) {
  GramTruncation g;
  g.N = N;
  g.entries = detail::assemble_gram(spec, N);
  std::tie(g.lambda_min, g.lambda_max) = extreme_eigenvalues(g);
  return g;
}

struct RieszScanRow {
  int N;
  double lambda_min;
  double lambda_max;
};

/// Extreme eigenvalues of the leading N x N truncations for each N in Ns.
inline std::vector<RieszScanRow> riesz_scan(const SystemSpec& spec, const std::vector<int>& Ns) {
  if (Ns.empty()) return {};
  if (!std::is_sorted(Ns.begin(), Ns.end()) || std::adjacent_find(Ns.begin(), Ns.end()) != Ns.end()) {
    throw Error(ErrorCode::invalid_argument, "Ns must be strictly ascending");
  }
  const auto full = detail::assemble_gram(spec, Ns.back());
  std::vector<RieszScanRow> rows;
  for (int N : Ns) {
    if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be >= 1");
    const auto [lo, hi] = extreme_eigenvalues(full.leading(N), 2.0 / pi);
    rows.push_back({N, lo, hi});
  }
  return rows;
}

}  // namespace fucik
