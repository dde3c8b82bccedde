// Builds a Fucik eigenfunction, compares its closed forms with quadrature and
// evaluates the Paley-Wiener budget on the gamma line.

#include <cstdio>

#include "fucik/fucik.hpp"

int main() {
  using namespace fucik;

  const FucikPoint p = complete_point(2, Alpha{9.0});
  std::printf("point: n=%d alpha=%g beta=%g case=%s\n", p.n, p.alpha, p.beta,
              std::string(to_string(p.dominance)).c_str());

  const FucikEigenfunction f = build(p);
  std::printf("f(pi/6) = %.15f, f(2 pi/3) = %.15f\n", f(pi / 6.0), f(2.0 * pi / 3.0));

  const auto bp = f.breakpoints();
  const SineMode phi{2};
  const double numeric = inner_numeric(f, phi, bp);
  std::printf("<f, sin 2x>: closed form %.15f, quadrature %.15f\n", inner_same_index(p).value, numeric);
  std::printf("||f - sin 2x||^2 = %.15f, C_2 = %.15f\n", dist_sq_to_sine(p).value, bound_Cn(p));

  for (double g : {4.0, 5.0, 5.3}) std::printf("E(%.1f) = %.10f\n", g, E_gamma(g));
  std::printf("largest gamma with E < 1: %.8f\n", gamma_admissible_max(1e-9));

  const auto scan = riesz_scan(GammaLine{5.0}, {8, 16, 32});
  for (const auto& row : scan) {
    std::printf("N=%2d  lambda_min=%.6f  lambda_max=%.6f\n", row.N, row.lambda_min, row.lambda_max);
  }
  return 0;
}
