#include <gtest/gtest.h>

#include <cmath>

#include "fucik/nearness.hpp"
#include "fucik/sampling.hpp"

using namespace fucik;

namespace {

PowerFamily half_cap_family(OddBranch odd) {
  PowerFamily f;
  f.epsilon = 0.5;
  f.even_rule = {CnRule::Kind::cap_fraction, 0.5, false};
  f.odd_rule = {CnRule::Kind::cap_fraction, 0.5, false};
  f.odd_branch = odd;
  return f;
}

}  // namespace

TEST(BoundCn, Examples) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(bound_Cn(diagonal_point(n)), 0.0);
  EXPECT_NEAR(bound_Cn(2, 9.0, 2.25), (3.0 + pi * pi) * pi / 9.0, 1e-13);
  const auto p = complete_point(3, Alpha{16.0});
  EXPECT_NEAR(bound_Cn(p), 4.0 * pi * 9.0 * 10.0 / 16.0 / 9.0, 1e-13);
  EXPECT_THROW(bound_Cn(2, 9.0, 9.0), Error);
  EXPECT_THROW(bound_Cn(1, 1.0, 1.0), Error);
}

TEST(CorollaryCap, Examples) {
  const double z15 = zeta(1.5);
  for (int n : {2, 10, 100}) {
    EXPECT_NEAR(corollary_cn_cap(n, 0.5, CapBranch::even), 9.0 / (8.0 * (3.0 + pi * pi)) / (z15 - 1.0), 1e-13);
  }
  EXPECT_NEAR(corollary_cn_cap(7, 0.5, CapBranch::odd_alpha_uniform), (1.0 / 46.0) / (z15 - 1.0), 1e-13);
  EXPECT_NEAR(corollary_cn_cap(3, 1.0, CapBranch::odd_alpha_dominant),
              (16.0 / (8.0 * 9.0 * 10.0)) / (pi * pi / 6.0 - 1.0), 1e-13);
}

TEST(CorollaryCap, UniformCapsAreBelowIndexedCaps) {
  for (int n = 3; n <= 999; n += 2) {
    EXPECT_LE(corollary_cn_cap(n, 0.5, CapBranch::odd_alpha_uniform),
              corollary_cn_cap(n, 0.5, CapBranch::odd_alpha_dominant));
    EXPECT_LE(corollary_cn_cap(n, 0.5, CapBranch::odd_beta_uniform),
              corollary_cn_cap(n, 0.5, CapBranch::odd_beta_dominant) * (1.0 + 1e-12));
  }
}

TEST(Theorem1Check, Examples) {
  const auto diag = theorem1_check(FinitePerturbation{});
  EXPECT_EQ(diag.partial_sum, 0.0);
  EXPECT_EQ(diag.verdict, Verdict::riesz_basis_certified);

  const auto single = theorem1_check(FinitePerturbation{{complete_point(2, Alpha{9.0})}});
  EXPECT_NEAR(single.total_upper, (3.0 + pi * pi) * pi / 9.0, 1e-12);
  EXPECT_NEAR(single.total_upper, 4.49, 5e-3);
  EXPECT_EQ(single.verdict, Verdict::inconclusive);

  for (auto odd : {OddBranch::diagonal, OddBranch::alpha_dominant, OddBranch::beta_dominant}) {
    const auto r = theorem1_check(half_cap_family(odd));
    EXPECT_LT(r.total_upper, pi / 2.0) << to_string(odd);
    EXPECT_EQ(r.verdict, Verdict::riesz_basis_certified) << to_string(odd);
    EXPECT_GT(r.tail_bound, 0.0);
  }
}

TEST(Theorem1Check, TailIsAnUpperBound) {
  const auto f = half_cap_family(OddBranch::alpha_dominant);
  const auto short_run = theorem1_check(f, 200);
  const auto long_run = theorem1_check(f, 20000);
  EXPECT_LE(long_run.partial_sum, short_run.total_upper);
  EXPECT_LE(long_run.total_upper, short_run.total_upper + 1e-12);
}

TEST(Theorem1Check, CapsAtFullStrengthAreNotCertified) {
  PowerFamily f = half_cap_family(OddBranch::alpha_dominant);
  f.even_rule.value = 1.2;
  f.odd_rule.value = 1.2;
  EXPECT_EQ(theorem1_check(f).verdict, Verdict::inconclusive);
}

TEST(Theorem1Check, Errors) {
  PowerFamily f = half_cap_family(OddBranch::diagonal);
  f.epsilon = 1e-9;
  try {
    theorem1_check(f);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::tail_not_boundable);
  }
  try {
    theorem1_check(GammaLine{6.0});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::gamma_out_of_range);
  }
  const auto p = complete_point(2, Alpha{9.0});
  EXPECT_THROW(theorem1_check(FinitePerturbation{{p, p}}), Error);
}

TEST(Theorem1Check, GammaLine) {
  EXPECT_EQ(theorem1_check(GammaLine{4.0}).verdict, Verdict::riesz_basis_certified);
  const auto r = theorem1_check(GammaLine{5.0});
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_TRUE(std::isinf(r.tail_bound));
}

TEST(Theorem1Check, AddingEntriesNeverDecreasesSum) {
  FinitePerturbation f;
  double last = 0.0;
  for (int n = 2; n <= 30; ++n) {
    const double s = n + 0.3;
    f.entries.push_back(complete_point(n, Alpha{s * s}));
    const double now = theorem1_check(f).partial_sum;
    EXPECT_GE(now, last);
    last = now;
  }
}

TEST(Theorem2Check, Examples) {
  const auto diag = theorem2_check(FinitePerturbation{});
  EXPECT_EQ(diag.partial_sum, 0.0);
  EXPECT_EQ(diag.verdict, Verdict::riesz_basis_certified);

  PowerFamily f;
  f.epsilon = 0.5;
  f.even_rule = {CnRule::Kind::constant, 0.4, false};
  const auto r = theorem2_check(f);
  EXPECT_EQ(r.verdict, Verdict::riesz_basis_certified);
  EXPECT_TRUE(std::isfinite(r.total_upper));
  EXPECT_GT(r.tail_bound, 0.0);

  const auto g = theorem2_check(GammaLine{5.0}, 100);
  EXPECT_EQ(g.verdict, Verdict::inconclusive);
  const double term = std::pow(std::sqrt(5.0) / 2.0 - 1.0, 2);
  EXPECT_NEAR(g.partial_sum, 50.0 * term, 1e-11);
}

TEST(Theorem2Check, RejectsNondiagonalOdd) {
  try {
    theorem2_check(FinitePerturbation{{complete_point(3, Alpha{12.0})}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::odd_entries_not_diagonal);
  }
  EXPECT_THROW(theorem2_check(half_cap_family(OddBranch::alpha_dominant)), Error);
}

TEST(Theorem2Check, RIsAnUpperBoundOnDistances) {
  PowerFamily f;
  f.epsilon = 0.5;
  f.even_rule = {CnRule::Kind::constant, 0.05, false};
  const auto r = theorem2_check(f, 400);
  double dist = 0.0;
  for (int n = 2; n <= 20000; n += 2) dist += dist_sq_to_sine(point_at(SystemSpec{f}, n)).value;
  EXPECT_LE(dist, r.r);
}

TEST(KatoTerm, Examples) {
  EXPECT_EQ(kato_weakened_term(diagonal_point(2)), 0.0);
  const auto p = complete_point(2, Alpha{9.0});
  EXPECT_LE(kato_weakened_term(p), dist_sq_to_sine(p).value);
  EXPECT_GE(kato_weakened_term(p), 0.0);
}

TEST(KatoTerm, ContinuousAndVanishingOnlyAtDiagonal) {
  double last = -1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double s = 2.0 + i * 1e-3;
    const double t = kato_weakened_term(complete_point(2, Alpha{s * s}));
    EXPECT_GT(t, 0.0) << s;
    if (last >= 0.0) {
      EXPECT_LT(std::abs(t - last), 5e-2);
    }
    last = t;
  }
}

TEST(KatoTerm, BelowDistance) {
  for (int n = 2; n <= 40; ++n) {
    for (const auto& p : sample_curve(n, 20)) {
      EXPECT_LE(kato_weakened_term(p), dist_sq_to_sine(p).value);
    }
  }
}

TEST(RegionBoundary, Examples) {
  const auto pts = region_boundary(0.5, CapBranch::even, 2, 10);
  ASSERT_EQ(pts.size(), 9u);
  const double cap = corollary_cn_cap(2, 0.5, CapBranch::even);
  for (const auto& [n, v] : pts) EXPECT_NEAR(v, n + std::sqrt(cap) * std::pow(n, 0.25), 1e-13);

  const auto big = region_boundary(5.0, CapBranch::even, 1, 1);
  EXPECT_NEAR(big[0].second, 1.0 + std::sqrt(corollary_cn_cap(1, 5.0, CapBranch::even)), 1e-13);

  const auto uni = region_boundary(0.1, CapBranch::odd_alpha_uniform, 3, 9);
  const double ucap = corollary_cn_cap(3, 0.1, CapBranch::odd_alpha_uniform);
  for (const auto& [n, v] : uni) EXPECT_NEAR(v, n + std::sqrt(ucap) * std::pow(n, 0.45), 1e-12);

  EXPECT_THROW(region_boundary(0.0, CapBranch::even, 2, 10), Error);
  EXPECT_THROW(region_boundary(0.5, CapBranch::even, 10, 2), Error);
}

TEST(NearnessProperties, Domination) {
  int checked = 0;
  for (int n = 2; n <= 50; ++n) {
    for (const auto& p : sample_curve(n, 24, 1e-5, 3.0)) {
      EXPECT_LE(dist_sq_to_sine(p).value, bound_Cn(p)) << n << " " << p.alpha << " " << p.beta;
      ++checked;
    }
  }
  EXPECT_GE(checked, 1000);
}

TEST(NearnessProperties, EvenChain) {
  for (int n = 2; n <= 50; n += 2) {
    for (const auto& p : sample_curve(n, 24, 1e-5, 3.0)) {
      const double s = std::max(p.sqrt_alpha(), p.sqrt_beta());
      const double d = dist_sq_to_sine(p).value;
      const double e1 = even_bound_sharp(n, s);
      const double e2 = even_bound_intermediate(n, s);
      EXPECT_LE(d, e1);
      EXPECT_LE(e1, e2);
      EXPECT_LE(e2, bound_Cn(p));
    }
  }
}

TEST(NearnessProperties, OddConstants) {
  for (int n = 3; n <= 100001; n += 2) {
    const double nn = n;
    EXPECT_LE(4.0 * pi * nn * nn * (nn * nn + 1.0) / std::pow(nn - 1.0, 4), 23.0 * pi);
    EXPECT_LE(5.0 * pi * nn * nn * (nn * nn + 1.0) / std::pow(nn + 1.0, 4), 5.0 * pi);
  }
}

TEST(NearnessProperties, SineLowerBound) {
  for (int i = 0; i <= 10000; ++i) {
    const double x = pi * i / 10000.0;
    EXPECT_GE(std::sin(x), x - x * x * x / 6.0 - 1e-15);
  }
}
