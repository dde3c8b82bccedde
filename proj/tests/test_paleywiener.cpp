#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fucik/paleywiener.hpp"
#include "oracles.hpp"

using namespace fucik;

TEST(AntiperiodicExtend, Examples) {
  const auto sine = [](double x) { return std::sin(x); };
  EXPECT_NEAR(antiperiodic_extend(sine, 1.5 * pi), -1.0, 1e-15);
  EXPECT_NEAR(antiperiodic_extend(sine, 2.0 * pi + 0.3), std::sin(0.3), 1e-15);
  const auto f = gamma_line_seed(5.0);
  EXPECT_NEAR(antiperiodic_extend(f, pi + 0.5), -f(0.5), 1e-15);
  try {
    antiperiodic_extend(sine, -0.1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::negative_argument);
  }
}

TEST(ApplyTk, Examples) {
  const auto t2 = apply_Tk(2, [](double x) { return std::sin(4.0 * x); });
  const auto t1 = apply_Tk(1, [](double x) { return std::sin(2.0 * x); });
  for (int i = 0; i <= 200; ++i) {
    const double x = pi * i / 200.0;
    EXPECT_NEAR(t2(x), std::sin(4.0 * x), 1e-14);
    EXPECT_NEAR(t1(x), std::sin(x), 1e-14);
  }
}

TEST(ApplyTk, OddDilationOfSin2x) {
  // The antiperiodic extension of sin(2x) is sin(2x) on [0, pi] and -sin(2x)
  // on [pi, 2pi], so T_3 sin(2 .) agrees with sin(3x) only up to 2pi/3.
  const auto t3 = apply_Tk(3, [](double x) { return std::sin(2.0 * x); });
  for (int i = 0; i <= 300; ++i) {
    const double x = pi * i / 300.0;
    const double expected = x <= 2.0 * pi / 3.0 ? std::sin(3.0 * x) : -std::sin(3.0 * x);
    EXPECT_NEAR(t3(x), expected, 1e-14) << x;
  }
}

TEST(ApplyTk, Linearity) {
  const auto g = [](double x) { return std::sin(x) * std::cos(3.0 * x) + x * (pi - x); };
  const auto h = [](double x) { return std::exp(-x) * std::sin(5.0 * x); };
  const double a = -1.75;
  for (int k = 1; k <= 9; ++k) {
    const auto lhs = apply_Tk(k, [&](double x) { return a * g(x) + h(x); });
    const auto tg = apply_Tk(k, g);
    const auto th = apply_Tk(k, h);
    for (int i = 0; i <= 500; ++i) {
      const double x = pi * i / 500.0;
      EXPECT_NEAR(lhs(x), a * tg(x) + th(x), 1e-14);
    }
  }
}

TEST(ApplyTk, EvenIsometry) {
  std::mt19937_64 rng(7);
  for (int k = 2; k <= 8; k += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto g = oracle::random_piecewise_linear(rng, 9);
      const auto t = apply_Tk(k, [&](double x) { return g(x); });
      std::vector<double> bp;
      for (int j = 0; j <= 9 * k; ++j) bp.push_back(std::min(pi, 2.0 * pi * j / (9.0 * k)));
      const double tn = integrate_pieces([&](double x) { return t(x) * t(x); }, std::span<const double>(bp));
      EXPECT_NEAR(tn, oracle::norm_sq(g), 1e-10);
    }
  }
}

TEST(ApplyTk, RayleighOracleMatchesQuadrature) {
  std::mt19937_64 rng(11);
  for (int k = 1; k <= 5; ++k) {
    const auto g = oracle::random_piecewise_linear(rng, 6);
    const auto t = apply_Tk(k, [&](double x) { return g(x); });
    std::vector<double> bp;
    for (int j = 0; j <= 6 * k; ++j) bp.push_back(std::min(pi, 2.0 * pi * j / (6.0 * k)));
    bp.push_back(pi);
    const auto merged = merge_breakpoints(bp, std::vector<double>{pi});
    const double tn = integrate_pieces([&](double x) { return t(x) * t(x); }, std::span<const double>(merged));
    EXPECT_NEAR(tn, oracle::dilated_norm_sq(k, g), 1e-10) << k;
  }
}

TEST(TkNorm, Examples) {
  EXPECT_EQ(Tk_norm(2), 1.0);
  EXPECT_NEAR(Tk_norm(3), std::sqrt(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(Tk_norm(1), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(Tk_norm(0), Error);
}

TEST(TkNorm, RayleighCertification) {
  for (int k = 1; k <= 9; ++k) {
    const double r = oracle::rayleigh_max(k, 1000, 1234u + k);
    EXPECT_GE(r, Tk_norm(k) - 1e-3) << k;
    EXPECT_LE(r, Tk_norm(k) + 1e-9) << k;
  }
}

TEST(FourierAk, Examples) {
  EXPECT_NEAR(fourier_Ak(4.0, 2), 1.0, 1e-14);
  for (int k : {1, 3, 4, 5, 10, 99}) EXPECT_NEAR(fourier_Ak(4.0, k), 0.0, 1e-14) << k;
  EXPECT_NEAR(fourier_Ak(5.0, 1), fourier_Ak_numeric(5.0, 1), 1e-12);
  EXPECT_NEAR(fourier_Ak(5.0, 1), -0.21585338583985123, 1e-13);
  const double s = std::sqrt(5.0);
  EXPECT_LE(std::abs(fourier_Ak(5.0, 4)), 2.0 / pi * 25.0 * (s - 2.0) / ((s - 1.0) * 121.0));
}

TEST(FourierAk, OracleSweep) {
  for (double g : {4.5, 5.0, 5.5}) {
    for (int k = 1; k <= 100; ++k) {
      EXPECT_NEAR(fourier_Ak(g, k), fourier_Ak_numeric(g, k), 1e-10) << g << " " << k;
    }
  }
}

TEST(FourierAk, RemovableSingularities) {
  // k^2 = gamma: gamma = 9 at k = 3 and gamma = 4 at k = 2.
  EXPECT_NEAR(fourier_Ak(9.0, 3), fourier_Ak_numeric(9.0, 3), 1e-12);
  EXPECT_NEAR(fourier_Ak(9.0 + 1e-9, 3), fourier_Ak_numeric(9.0 + 1e-9, 3), 1e-12);
  EXPECT_NEAR(fourier_Ak(4.0 + 1e-9, 2), fourier_Ak_numeric(4.0 + 1e-9, 2), 1e-12);
}

TEST(CkBound, Examples) {
  EXPECT_EQ(ck_bound(4.0, 1), 0.0);
  EXPECT_EQ(ck_bound(4.0, 2), 0.0);
  const double s = std::sqrt(5.0);
  EXPECT_NEAR(ck_bound(5.0, 3), 2.0 / pi * 25.0 * (s - 2.0) / (s - 1.0) / 16.0, 1e-15);
  const double c2 = ck_bound(5.0, 2);
  EXPECT_GT(c2, 0.0);
  EXPECT_LT(c2, 1.0);
  EXPECT_LE(fourier_Ak(5.0, 2), 1.0);
  EXPECT_THROW(ck_bound(3.9, 1), Error);
  EXPECT_THROW(ck_bound(9.0, 1), Error);
}

TEST(CkBound, Domination) {
  for (int i = 0; i <= 40; ++i) {
    const double g = 4.0 + 1.682 * i / 40.0;
    EXPECT_LE(std::abs(fourier_Ak(g, 1)), ck_bound(g, 1) + 1e-15) << g;
    EXPECT_LE(std::abs(1.0 - fourier_Ak(g, 2)), ck_bound(g, 2) + 1e-15) << g;
    EXPECT_LE(fourier_Ak(g, 2), 1.0 + 1e-15);
    for (int k = 3; k <= 100; ++k) EXPECT_LE(std::abs(fourier_Ak(g, k)), ck_bound(g, k) + 1e-15) << g << " " << k;
  }
}

TEST(FourierAk, ParsevalFromBelow) {
  const double g = 5.0;
  const auto f = gamma_line_seed(g);
  const auto bp = f.breakpoints();
  const double target = 2.0 / pi * integrate_pieces([&](double x) { return f(x) * f(x); }, std::span<const double>(bp));
  double sum = 0.0;
  double last_gap = target;
  for (int k = 1; k <= 2000; ++k) {
    const double a = fourier_Ak(g, k);
    sum += a * a;
    EXPECT_LE(sum, target + 1e-12);
    if (k % 100 == 0) {
      EXPECT_LE(target - sum, last_gap);
      last_gap = target - sum;
    }
  }
  EXPECT_LT(target - sum, 1e-9);
}

TEST(EGamma, Examples) {
  EXPECT_NEAR(E_gamma(4.0), 0.0, 1e-12);
  const double e5 = E_gamma(5.0);
  EXPECT_GT(e5, 0.0);
  EXPECT_LT(e5, 1.0);
  EXPECT_NEAR(e5, 0.686442899297216, 1e-12);
  // Summand-for-summand evaluation of the displayed expression.
  EXPECT_NEAR(E_gamma(5.682), 1.3211123167378833, 1e-12);
  EXPECT_LT(e5, E_gamma(5.682));
}

TEST(EGamma, StrictlyIncreasing) {
  double last = E_gamma(4.0);
  for (int i = 1; i <= 1682; ++i) {
    const double e = E_gamma(4.0 + 1e-3 * i);
    EXPECT_GT(e, last) << 4.0 + 1e-3 * i;
    last = e;
  }
}

TEST(EGamma, BudgetTerms) {
  const auto b = budget(5.0);
  ASSERT_EQ(b.c.size(), 5u);
  EXPECT_NEAR(b.t[0], std::sqrt(2.0), 1e-15);
  EXPECT_EQ(b.t[1], 1.0);
  EXPECT_NEAR(b.t[2], std::sqrt(4.0 / 3.0), 1e-15);
  EXPECT_EQ(b.t[3], 1.0);
  EXPECT_NEAR(b.t[4], std::sqrt(6.0 / 5.0), 1e-15);
  double e = 0.0;
  for (std::size_t i = 0; i < 5; ++i) e += b.c[i] * b.t[i];
  EXPECT_DOUBLE_EQ(e, b.E);
}

TEST(TailConstant, BruteForce) {
  long double sum = 0.0L;
  constexpr long long N = 1000000;
  for (long long k = N; k >= 5; --k) {
    const long double q = static_cast<long double>(k) * k - 9.0L;
    sum += 1.0L / (q * q);
  }
  const double tail = 1.0 / (3.0 * std::pow(N + 0.5, 3));
  EXPECT_NEAR(static_cast<double>(sum) + tail, dilation_tail_constant, 1e-10);
}

TEST(GammaAdmissibleMax, Postcondition) {
  for (double tol : {1e-3, 1e-6}) {
    const double g = gamma_admissible_max(tol);
    EXPECT_LT(E_gamma(g), 1.0);
    EXPECT_GE(E_gamma(g + tol), 1.0);
  }
  EXPECT_NEAR(gamma_admissible_max(1e-9), 5.372993427106849, 2e-9);
  EXPECT_NEAR(gamma_admissible_max(1e-3), gamma_admissible_max(1e-6), 1e-3);
}

TEST(TheoremDResidual, Gamma4IsExact) {
  for (int n : {2, 4, 8}) EXPECT_NEAR(theoremD_residual(4.0, n, 10), 0.0, 1e-14);
}

TEST(TheoremDResidual, SeedWithinTailBound) {
  const double g = 5.0;
  const double s = std::sqrt(g);
  double tail = 0.0;
  for (int k = 51; k <= 2000000; ++k) {
    const double q = static_cast<double>(k) * k - g;
    tail += 1.0 / (q * q);
  }
  const double bound = 2.0 / pi * g * g * (s - 2.0) / (s - 1.0) * tail;
  EXPECT_LE(theoremD_residual(g, 2, 50), bound);
  EXPECT_LE(theoremD_residual(g, 2, 100), theoremD_residual(g, 2, 50));
}

TEST(TheoremDResidual, DilatedSeriesMissesPeriodicExtension) {
  // f^n(x) = f^2(n x/2) uses the pi-periodic continuation of f^2, while the
  // sine series continues it oddly with period 2 pi; they differ for gamma > 4.
  const double r2 = theoremD_residual(5.0, 2, 50);
  const double r4 = theoremD_residual(5.0, 4, 50);
  EXPECT_GE(r4, r2);
  EXPECT_GT(r4, 0.1);
}

TEST(TheoremDResidual, Errors) {
  EXPECT_THROW(theoremD_residual(5.0, 3, 50), Error);
  EXPECT_THROW(theoremD_residual(5.0, 2, 2), Error);
  EXPECT_THROW(theoremD_residual(3.0, 2, 50), Error);
}
