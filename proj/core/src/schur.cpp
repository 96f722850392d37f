#include "opxlab/schur.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opxlab/error.hpp"
#include "opxlab/parallel.hpp"

namespace opxlab {

namespace {

constexpr double kStripRel = 1e-13;
constexpr double kPoleTol = 1e-13;

RationalFn normalized(CPoly num, CPoly den) {
  const cplx d0 = den[0];
  if (d0 == cplx{}) throw Error(Errc::InvalidArgument, "Schur iterate denominator vanishes at 0");
  num *= 1.0 / d0;
  den *= 1.0 / d0;
  const double thresh = kStripRel * std::max(num.max_abs_coeff(), den.max_abs_coeff());
  return {num.trim_leading(thresh), den.trim_leading(thresh)};
}

// f_n = (α + z f_{n+1}) / (1 + conj(α) z f_{n+1}) on numerator/denominator pairs.
RationalFn mobius_step(cplx a, const RationalFn& next) {
  const CPoly z_num = next.num.shifted(1);
  return normalized(a * next.den + z_num, next.den + std::conj(a) * z_num);
}

// Inverse Möbius step f_{n+1} = (f_n − α_n) / (z (1 − conj(α_n) f_n)).
RationalFn schur_step(cplx a, const RationalFn& f) {
  CPoly top = f.num - a * f.den;
  std::vector<cplx> shifted(top.coeffs().begin(), top.coeffs().end());
  if (!shifted.empty()) shifted.erase(shifted.begin());
  return normalized(CPoly(std::move(shifted)), f.den - std::conj(a) * f.num);
}

SchurChain descend(const VerblunskySequence& seq, std::size_t start, RationalFn seed) {
  SchurChain chain;
  chain.tail_kind = seq.tail();
  chain.M = start;
  chain.f.resize(start + 1);
  chain.f[start] = std::move(seed);
  for (std::size_t n = start; n-- > 0;) chain.f[n] = mobius_step(seq.alpha(n), chain.f[n + 1]);
  const RationalFn& f0 = chain.f[0];
  const CPoly z_num = f0.num.shifted(1);
  chain.F = {f0.den + z_num, f0.den - z_num};
  return chain;
}

RationalFn zero_fn() { return {CPoly{}, CPoly::constant(1.0)}; }

cplx F_value(const RationalFn& F, cplx z) {
  const cplx den = F.den(z);
  const cplx num = F.num(z);
  // F.den = den_f − z num_f and F.num + F.den = 2 den_f, so |1 − z f| = |F.den| / |den_f|.
  const cplx den_f = 0.5 * (num + den);
  if (std::abs(den) < kPoleTol * std::abs(den_f) || den == cplx{})
    throw Error(Errc::PoleOfF, "1 - z f(z) vanishes");
  return num / den;
}

// Schur iterate f_n for any n: stored, zero past a zero tail, or continued
// forward from the closed-form tail function.
RationalFn iterate(const SchurChain& chain, const VerblunskySequence& seq, std::size_t n) {
  if (n < chain.f.size()) return chain.f[n];
  if (!std::holds_alternative<ClosedFormGeronimus>(chain.tail_kind)) return zero_fn();
  RationalFn f = chain.f.back();
  for (std::size_t k = chain.M; k < n; ++k) f = schur_step(seq.alpha(k), f);
  return f;
}

}  // namespace

SchurChain schur_chain(const VerblunskySequence& seq) {
  const TailSpec& tail = seq.tail();
  if (std::holds_alternative<ZeroBeyond>(tail)) return descend(seq, seq.tail_start(), zero_fn());

  if (const auto* g = std::get_if<ClosedFormGeronimus>(&tail)) {
    // Schur function of (1 − a cos θ) dθ/2π: F = 1 − az, so f = −a/(2 − az).
    return descend(seq, seq.tail_start(), normalized(CPoly::constant(-g->a), CPoly{2.0, -g->a}));
  }

  if (const auto* t = std::get_if<Truncate>(&tail)) {
    SchurChain coarse = descend(seq, t->depth, zero_fn());
    const SchurChain fine = descend(seq, t->depth + 8, zero_fn());
    const CircleGrid grid(256);
    double err = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const cplx z = grid.node(k);
      const double a = F_value(coarse.F, z).real();
      const double b = F_value(fine.F, z).real();
      err = std::max(err, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    coarse.truncation_error = err;
    if (!(err < t->tol))
      throw Error(Errc::TruncationNotConverged,
                  "depth " + std::to_string(t->depth) + " vs depth+8 differ by " + std::to_string(err));
    return coarse;
  }
  throw Error(Errc::UnsupportedTail, "unsupported tail");
}

cplx F_eval(const SchurChain& chain, cplx z) { return F_value(chain.F, z); }

double reF_at(const SchurChain& chain, double theta) { return F_value(chain.F, std::polar(1.0, theta)).real(); }

namespace {

BoundaryFunction sample(const CircleGrid& grid, int sign, const std::function<double(std::size_t)>& at) {
  BoundaryFunction bf;
  bf.sign_flag = sign;
  bf.theta.resize(grid.size());
  bf.values.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) {
    bf.theta[k] = grid.theta(k);
    double v = 0.0;
    try {
      v = at(k);
    } catch (const Error&) {
      throw Error(Errc::SingularNode, "boundary value undefined at node " + std::to_string(k), k);
    }
    if (!std::isfinite(v)) throw Error(Errc::SingularNode, "non-finite boundary value at node " + std::to_string(k), k);
    bf.values[k] = v;
  });
  return bf;
}

}  // namespace

int boundary_sign(const VerblunskySequence& seq) {
  const std::size_t N = seq.indefinite_length();
  if (N == 0) return 1;
  return weights(seq, static_cast<int>(N) - 1).epsilon(static_cast<int>(N) - 1);
}

BoundaryFunction reF_boundary(const SchurChain& chain, const VerblunskySequence& seq, const CircleGrid& grid) {
  return sample(grid, boundary_sign(seq), [&](std::size_t k) { return reF_at(chain, grid.theta(k)); });
}

BoundaryFunction reF_boundary_khrushchev(const SchurChain& chain, const VerblunskySequence& seq, int n,
                                         const CircleGrid& grid) {
  if (n < 1) throw Error(Errc::InvalidArgument, "Khrushchev formula needs n >= 1");
  const PolynomialChain pc = szego_chain(seq, n);
  const SignedWeights w = weights(seq, n);
  const RationalFn fn = iterate(chain, seq, static_cast<std::size_t>(n));
  const MonicPair& pair = pc[static_cast<std::size_t>(n)];
  const double omega = w.omega(n - 1);
  return sample(grid, boundary_sign(seq), [&](std::size_t k) {
    const cplx z = grid.node(k);
    const cplx f = fn(z);
    const cplx den = pair.phi_star(z) - z * pair.phi(z) * f;
    if (std::abs(den) < 1e-300) throw Error(Errc::SingularNode, "Khrushchev denominator vanishes", k);
    return omega * (1.0 - std::norm(f)) / std::norm(den);
  });
}

BoundaryFunction reF_boundary(const std::function<double(double)>& closed_form, int sign_flag,
                              const CircleGrid& grid) {
  return sample(grid, sign_flag, [&](std::size_t k) { return closed_form(grid.theta(k)); });
}

double khrushchev_residual(const SchurChain& chain, const VerblunskySequence& seq, int n, const CircleGrid& grid) {
  const BoundaryFunction direct = reF_boundary(chain, seq, grid);
  const BoundaryFunction khr = reF_boundary_khrushchev(chain, seq, n, grid);
  double r = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) r = std::max(r, std::abs(direct.values[k] - khr.values[k]));
  return r;
}

double khrushchev_residual(const VerblunskySequence& seq, int n, const CircleGrid& grid) {
  return khrushchev_residual(schur_chain(seq), seq, n, grid);
}

std::vector<cplx> maclaurin_F(const SchurChain& chain, std::size_t K) {
  const CPoly& num = chain.F.num;
  const CPoly& den = chain.F.den;
  const cplx d0 = den[0];
  if (d0 == cplx{}) throw Error(Errc::PoleAtOrigin, "F has a pole at the origin");
  std::vector<cplx> out(K + 1);
  for (std::size_t n = 0; n <= K; ++n) {
    cplx acc = num[n];
    for (std::size_t j = 1; j <= n && j < den.coeffs().size(); ++j) acc -= den[j] * out[n - j];
    out[n] = acc / d0;
  }
  return out;
}

}  // namespace opxlab
