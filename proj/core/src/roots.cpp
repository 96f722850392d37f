#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "opxlab/error.hpp"
#include "opxlab/poly.hpp"

namespace opxlab {

namespace {

constexpr int kMaxIterations = 2000;
constexpr double kEps = 2.220446049250313e-16;

// Fujiwara upper bound on root moduli of a polynomial with a.back() != 0.
double fujiwara_bound(const std::vector<cplx>& a) {
  const std::size_t d = a.size() - 1;
  const double lead = std::abs(a.back());
  double bound = 0.0;
  for (std::size_t k = 1; k <= d; ++k) {
    double r = std::abs(a[d - k]) / lead;
    if (k == d) r /= 2.0;
    bound = std::max(bound, std::pow(r, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

// Newton correction p(z)/p'(z); for |z| > 1 it runs Horner on the reversed
// coefficients at 1/z so large roots do not overflow.
cplx newton_correction(const std::vector<cplx>& a, cplx z) {
  const std::size_t d = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    cplx p{}, dp{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      dp = dp * z + p;
      p = p * z + *it;
    }
    return p / dp;
  }
  const cplx y = 1.0 / z;
  cplx q{}, dq{};
  for (const cplx c : a) {
    dq = dq * y + q;
    q = q * y + c;
  }
  return z * q / (static_cast<double>(d) * q - y * dq);
}

// |p(r)| / max(1, |r|)^d.
double scaled_residual(const std::vector<cplx>& a, cplx r) {
  if (std::abs(r) <= 1.0) {
    cplx p{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) p = p * r + *it;
    return std::abs(p);
  }
  const cplx y = 1.0 / r;
  cplx q{};
  for (const cplx c : a) q = q * y + c;
  return std::abs(q);
}

}  // namespace

std::vector<cplx> roots(const CPoly& p, double tol) {
  if (p.degree() < 1) throw Error(Errc::InvalidArgument, "roots() needs degree >= 1");
  const std::vector<cplx> original(p.coeffs().begin(), p.coeffs().end());
  const double scale = p.max_abs_coeff();

  // Exact zero roots are split off first.
  std::size_t zero_roots = 0;
  while (original[zero_roots] == cplx{}) ++zero_roots;
  std::vector<cplx> a(original.begin() + static_cast<std::ptrdiff_t>(zero_roots), original.end());
  const std::size_t d = a.size() - 1;

  std::vector<cplx> z(zero_roots, cplx{});
  if (d == 0) return z;
  if (d == 1) {
    z.push_back(-a[0] / a[1]);
    return z;
  }

  const double upper = fujiwara_bound(a);
  std::vector<cplx> rev(a.rbegin(), a.rend());
  const double lower = 1.0 / fujiwara_bound(rev);
  const double radius = std::sqrt(upper * lower);

  std::vector<cplx> x(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(d) + 0.4;
    x[k] = std::polar(radius * (1.0 + 1e-3 * static_cast<double>(k % 3)), t);
  }

  std::vector<bool> done(d, false);
  int iter = 0;
  for (; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const cplx ratio = newton_correction(a, x[i]);
      cplx sum{};
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum += 1.0 / (x[i] - x[j]);
      const cplx w = ratio / (1.0 - ratio * sum);
      x[i] -= w;
      if (!std::isfinite(x[i].real()) || !std::isfinite(x[i].imag()))
        throw Error(Errc::NonConvergence, "Aberth iteration diverged");
      if (std::abs(w) <= 4.0 * kEps * std::max(std::abs(x[i]), 1e-300) || ratio == cplx{}) done[i] = true;
      else all_done = false;
    }
    if (all_done) break;
  }

  for (std::size_t i = 0; i < d; ++i) {
    if (scaled_residual(original, x[i]) > tol * scale)
      throw Error(Errc::NonConvergence,
                  "root " + std::to_string(i) + " misses the residual tolerance after " + std::to_string(iter) +
                      " iterations",
                  i);
  }
  z.insert(z.end(), x.begin(), x.end());
  return z;
}

}  // namespace opxlab
