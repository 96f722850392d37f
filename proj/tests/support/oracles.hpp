// Test-side reference computations. Deliberately independent of the library:
// plain vectors, pointwise evaluation, brute-force quadrature.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Poly = std::vector<C>;  // ascending powers
using AlphaFn = std::function<C(std::size_t)>;

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kPi = std::numbers::pi;

inline C horner(const Poly& p, C z) {
  C acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline double horner(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct Pair {
  Poly phi;
  Poly star;
};

// Φ_{k+1} = zΦ_k − conj(α_k)Φ_k*, Φ*_{k+1} = Φ_k* − α_k zΦ_k; sign = −1 gives the second kind.
inline std::vector<Pair> szego(const AlphaFn& alpha, int nmax, double sign = 1.0) {
  std::vector<Pair> out;
  out.push_back({{1.0}, {1.0}});
  for (int k = 0; k < nmax; ++k) {
    const C a = sign * alpha(static_cast<std::size_t>(k));
    const Pair& p = out.back();
    Pair q{Poly(static_cast<std::size_t>(k) + 2), Poly(static_cast<std::size_t>(k) + 2)};
    for (std::size_t j = 0; j <= static_cast<std::size_t>(k); ++j) {
      q.phi[j + 1] += p.phi[j];
      q.phi[j] -= std::conj(a) * p.star[j];
      q.star[j] += p.star[j];
      q.star[j + 1] -= a * p.phi[j];
    }
    out.push_back(std::move(q));
  }
  return out;
}

inline AlphaFn finite(std::vector<C> head) {
  return [head = std::move(head)](std::size_t n) { return n < head.size() ? head[n] : C{}; };
}

// Entries of the Example-2 sequence as listed: 2√2, then −2/((√2+1)^{n+1} − (√2−1)^{n+1}).
inline C ex2_alpha(std::size_t n) {
  if (n == 0) return 2.0 * kSqrt2;
  const double k = static_cast<double>(n) + 1.0;
  return -2.0 / (std::pow(kSqrt2 + 1.0, k) - std::pow(kSqrt2 - 1.0, k));
}

// Pointwise downward Schur iteration from f_start = seed(z).
inline C schur_f(const AlphaFn& alpha, std::size_t from, std::size_t start, const std::function<C(C)>& seed, C z) {
  C f = seed(z);
  for (std::size_t n = start; n-- > from;) {
    const C a = alpha(n);
    f = (a + z * f) / (1.0 + std::conj(a) * z * f);
  }
  return f;
}

inline C carath(C f0, C z) { return (1.0 + z * f0) / (1.0 - z * f0); }

// F for a finite sequence (α = 0 from `len` on).
inline C F_finite(const AlphaFn& alpha, std::size_t len, C z) {
  return carath(schur_f(alpha, 0, len, [](C) { return C{}; }, z), z);
}

// Example 2: the Geronimus-measure tail has Schur function −a/(2 − az) from index 1 on.
inline C ex2_F(C z) {
  const double a = 1.0 / kSqrt2;
  return carath(schur_f(ex2_alpha, 0, 1, [a](C w) { return -a / (2.0 - a * w); }, z), z);
}

// Closed forms quoted in the example section.
inline double ex1_reF(double t) { return -3.0 / std::norm(1.0 - 2.0 * std::polar(1.0, t)); }
inline C ex1_D(C z) { return std::sqrt(3.0) / (2.0 - z); }
inline double ex2_reF(double t) {
  const C e = std::polar(1.0, t);
  const double r = 2.0 * kSqrt2;
  return 7.0 * (1.0 - std::norm(e - r)) / std::norm((e - r) * (1.0 - e * (r + 1.0)));
}
inline C ex2_D(C z) {
  return std::sqrt(28.0) * (1.0 - z * (kSqrt2 - 1.0)) /
         (std::sqrt(2.0 - kSqrt2) * (2.0 * kSqrt2 - z) * (2.0 * kSqrt2 + 1.0 - z));
}
inline double ex2_D0() { return std::sqrt(7.0) / ((2.0 * kSqrt2 + 1.0) * std::sqrt(4.0 - 2.0 * kSqrt2)); }
inline C ex2_limit(C z) {
  return (6.0 + 5.0 * kSqrt2) / -4.0 * (z - 2.0 * kSqrt2) * (z - (2.0 * kSqrt2 - 1.0) / 7.0) / (z - (kSqrt2 + 1.0));
}
inline double ex2_pole() { return 1.0 / (2.0 * kSqrt2 + 1.0); }

// D(z) = exp((1/4π)∫ (e+z)/(e−z) log(sign·Re F) dθ) on a fixed fine trapezoid grid.
inline C szego_D(const std::function<double(double)>& reF, double sign, C z, std::size_t M = 1 << 14) {
  C acc{};
  for (std::size_t k = 0; k < M; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(M);
    const C e = std::polar(1.0, t);
    acc += (e + z) / (e - z) * std::log(sign * reF(t));
  }
  return std::exp(0.5 * acc / static_cast<double>(M));
}

// Symmetric Laurent data s_0..s_{2n} (z^n P_n(z+1/z) = Σ s_k z^k) to P_n by peeling (z+1/z)^k.
inline std::vector<double> peel_to_x(std::vector<double> s) {
  const std::size_t n = (s.size() - 1) / 2;
  std::vector<double> P(n + 1, 0.0);
  for (std::size_t k = n + 1; k-- > 0;) {
    const double c = s[n + k];
    P[k] = c;
    double binom = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
      s[n + k - 2 * j] -= c * binom;  // (z+1/z)^k = Σ binom(k,j) z^{k−2j}
      binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
  }
  return P;
}

// P_n from Φ_{2n}: (Φ_{2n} + Φ_{2n}*)/(1 − α_{2n−1}), α_{−1} = −1.
inline std::vector<double> P_from_chain(const std::vector<Pair>& chain, const AlphaFn& alpha, std::size_t n) {
  const Pair& p = chain[2 * n];
  const double am1 = n == 0 ? -1.0 : alpha(2 * n - 1).real();
  std::vector<double> s(2 * n + 1);
  for (std::size_t k = 0; k <= 2 * n; ++k) s[k] = (p.phi[k] + p.star[k]).real() / (1.0 - am1);
  return peel_to_x(s);
}

struct ThreeTerm {
  std::vector<double> b, c;  // b[0] = b_1, c[0] = c_1
};

// x P_n = P_{n+1} + b_{n+1} P_n + c_n P_{n−1}, read off by comparing the top two coefficients.
inline ThreeTerm three_term(const std::vector<std::vector<double>>& P) {
  ThreeTerm t;
  for (std::size_t n = 0; n + 1 < P.size(); ++n) {
    // coefficient of x^n: P_n[n−1] = P_{n+1}[n] + b P_n[n]  (P monic up to its leading coefficient)
    const double lead = P[n][n];
    const double b = ((n >= 1 ? P[n][n - 1] : 0.0) - P[n + 1][n]) / lead;
    t.b.push_back(b);
    if (n >= 1) {
      const double c = ((n >= 2 ? P[n][n - 2] : 0.0) - P[n + 1][n - 1] - b * P[n][n - 1]) / P[n - 1][n - 1];
      t.c.push_back(c);
    }
  }
  return t;
}

// Moments of dθ/(2π|φ_M(e^{iθ})|²) for a classical finite sequence of length M.
inline std::vector<C> bernstein_szego_moments(const std::vector<C>& alphas, std::size_t K, std::size_t nodes = 1024) {
  const auto chain = szego(finite(alphas), static_cast<int>(alphas.size()));
  double omega = 1.0;
  for (const C a : alphas) omega *= 1.0 - std::norm(a);
  std::vector<C> mu(K + 1);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double t = 2.0 * kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(nodes);
    const C e = std::polar(1.0, t);
    const double w = omega / std::norm(horner(chain.back().phi, e));
    for (std::size_t n = 0; n <= K; ++n) mu[n] += std::polar(w, static_cast<double>(n) * t);
  }
  for (C& m : mu) m /= static_cast<double>(nodes);
  return mu;
}

// Random heads: small decaying entries plus `spikes` entries of modulus in (1, 3].
inline std::vector<C> random_head(std::uint64_t seed, std::size_t len, int spikes, bool real) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto phase = [&](double r) { return real ? C{u(rng) < 0.5 ? -r : r} : std::polar(r, 2.0 * kPi * u(rng)); };
  std::vector<C> a(len);
  for (std::size_t n = 0; n < len; ++n) a[n] = phase(0.9 * u(rng) * std::pow(0.6, static_cast<double>(n)));
  for (int s = 0; s < spikes && static_cast<std::size_t>(s) < len; ++s) {
    const auto idx = static_cast<std::size_t>(u(rng) * static_cast<double>(std::min<std::size_t>(len, 4)));
    a[idx] = phase(1.1 + 1.8 * u(rng));
  }
  return a;
}

}  // namespace oracle
