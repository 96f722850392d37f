#include "opxlab/szegofn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opxlab/error.hpp"
#include "opxlab/parallel.hpp"

namespace opxlab {

namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 20;

cplx herglotz_mean(const CircleGrid& grid, std::span<const double> logs, cplx z) {
  cplx acc{};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx e = grid.node(k);
    acc += (e + z) / (e - z) * logs[k];
  }
  return acc / static_cast<double>(grid.size());
}

void require_n_at_least_N(const VerblunskySequence& seq, int n) {
  if (n < 1 || static_cast<std::size_t>(n) < seq.indefinite_length())
    throw Error(Errc::InvalidArgument, "degree " + std::to_string(n) + " is below the indefinite length");
}

}  // namespace

SzegoEvaluator::SzegoEvaluator(Boundary reF, int sign, std::size_t M)
    : reF_(std::move(reF)), sign_(sign), grid_(M) {
  log_values_ = sample_log(grid_);
}

SzegoEvaluator SzegoEvaluator::from_chain(const SchurChain& chain, const VerblunskySequence& seq, std::size_t M) {
  return SzegoEvaluator([chain](double t) { return reF_at(chain, t); }, boundary_sign(seq), M);
}

std::vector<double> SzegoEvaluator::sample_log(const CircleGrid& grid) const {
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) {
    double v = 0.0;
    try {
      v = sign_ * reF_(grid.theta(k));
    } catch (const Error&) {
      throw Error(Errc::SingularNode, "Re F undefined at node " + std::to_string(k), k);
    }
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(Errc::SingularNode, "sign-corrected Re F not positive at node " + std::to_string(k), k);
    out[k] = std::log(v);
  });
  return out;
}

QuadratureResult szego_D_detail(const SzegoEvaluator& ev, cplx z, double tol) {
  if (!(std::abs(z) < 1.0 - 1e-6)) throw Error(Errc::InvalidArgument, "szego_D needs |z| < 1 - 1e-6");
  std::size_t M = ev.grid().size();
  cplx prev = std::exp(0.5 * herglotz_mean(ev.grid(), ev.log_values(), z));
  while (true) {
    M *= 2;
    if (M > kMaxNodes)
      throw Error(Errc::QuadratureStall, "Szego quadrature did not settle by 2^20 nodes");
    const CircleGrid grid(M);
    const std::vector<double> logs = ev.sample_log(grid);
    const cplx cur = std::exp(0.5 * herglotz_mean(grid, logs, z));
    const double change = std::abs(cur - prev);
    if (change < tol) return {cur, M, change};
    prev = cur;
  }
}

cplx szego_D(const SzegoEvaluator& ev, cplx z, double tol) { return szego_D_detail(ev, z, tol).value; }

cplx grid_fourier(const CircleGrid& grid, std::span<const double> samples, int k) {
  cplx acc{};
  for (std::size_t j = 0; j < grid.size(); ++j) acc += std::polar(samples[j], static_cast<double>(k) * grid.theta(j));
  return acc / static_cast<double>(grid.size());
}

cplx log_fourier(const SzegoEvaluator& ev, int k) {
  if (static_cast<std::size_t>(std::abs(k)) > ev.grid().size() / 4)
    throw Error(Errc::InvalidArgument, "Fourier index exceeds M/4");
  return grid_fourier(ev.grid(), ev.log_values(), k);
}

cplx relative_szego(const VerblunskySequence& seq, const SchurChain& chain, std::size_t j, cplx z) {
  if (j >= chain.M) throw Error(Errc::InvalidArgument, "relative Szego index must be below the tail start");
  const RationalFn& fj = chain.f[j];
  const RationalFn& fnext = chain.f[j + 1];
  const cplx a = seq.alpha(j);
  const double rho = std::sqrt(std::abs(1.0 - std::norm(a)));

  const cplx num_j = fj.num(z), den_j = fj.den(z);
  const cplx num_n = fnext.num(z), den_n = fnext.den(z);
  const cplx pole_j = den_j - z * num_j;
  const double scale = std::max({std::abs(den_j), std::abs(num_j), 1e-300});
  if (std::abs(pole_j) < 1e-13 * scale || std::abs(den_n) < 1e-300)
    throw Error(Errc::PoleEncountered, "relative Szego function has a pole at z", j);
  return (den_j - std::conj(a) * num_j) * (den_n - z * num_n) / (den_n * rho * pole_j);
}

double telescoped_reF(const VerblunskySequence& seq, const SchurChain& chain, double theta) {
  const std::size_t N = seq.indefinite_length();
  const cplx z = std::polar(1.0, theta);
  const RationalFn& fN = chain.f.at(N);
  const cplx zf = z * fN(z);
  const double reFN = ((1.0 + zf) / (1.0 - zf)).real();
  cplx prod = 1.0;
  for (std::size_t j = 0; j < N; ++j) prod *= relative_szego(seq, chain, j, z);
  return boundary_sign(seq) * reFN * std::norm(prod);
}

std::vector<double> log_inverse_phi_star_sq(const VerblunskySequence& seq, int n, const CircleGrid& grid) {
  const PolynomialChain pc = szego_chain(seq, n);
  const SignedWeights w = weights(seq, n);
  const CPoly& star = pc[static_cast<std::size_t>(n)].phi_star;
  const double log_omega = std::log(std::abs(w.omega(n - 1)));
  std::vector<double> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double m = std::norm(star(grid.node(k)));
    if (!(m > 0.0)) throw Error(Errc::SingularNode, "phi_n* vanishes at node " + std::to_string(k), k);
    out[k] = log_omega - std::log(m);
  }
  return out;
}

double l1_error(const VerblunskySequence& seq, int n, const SzegoEvaluator& ev) {
  require_n_at_least_N(seq, n);
  const auto lhs = log_inverse_phi_star_sq(seq, n, ev.grid());
  const auto rhs = ev.log_values();
  double acc = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) acc += std::abs(lhs[k] - rhs[k]);
  return acc / static_cast<double>(lhs.size());
}

double weak_error(const VerblunskySequence& seq, int n, int k, const SzegoEvaluator& ev) {
  require_n_at_least_N(seq, n);
  const auto lhs = log_inverse_phi_star_sq(seq, n, ev.grid());
  return std::abs(grid_fourier(ev.grid(), lhs, k) - log_fourier(ev, k));
}

double phi_star_limit_error(const VerblunskySequence& seq, int n, cplx z, const BlaschkeProduct& B,
                            const SzegoEvaluator& ev) {
  if (std::abs(z) > 0.9) throw Error(Errc::InvalidArgument, "phi_star_limit_error needs |z| <= 0.9");
  const PolynomialChain pc = szego_chain(seq, n);
  const SignedWeights w = weights(seq, n);
  const cplx varphi_star = pc[static_cast<std::size_t>(n)].phi_star(z) / std::sqrt(std::abs(w.omega(n - 1)));
  return std::abs(varphi_star - B(z) / szego_D(ev, z));
}

double star_ratio_error(const VerblunskySequence& seq, int n, cplx z) {
  const PolynomialChain pc = szego_chain(seq, n + 1);
  const cplx den = pc[static_cast<std::size_t>(n)].phi_star(z);
  if (std::abs(den) < 1e-12) throw Error(Errc::NearZeroDenominator, "Phi_n*(z) is too close to zero");
  return std::abs(pc[static_cast<std::size_t>(n) + 1].phi_star(z) / den - 1.0);
}

StabilizedBlaschke stabilized_blaschke(const VerblunskySequence& seq, int nmax) {
  if (nmax < 2) throw Error(Errc::InvalidArgument, "stabilized_blaschke needs nmax >= 2");
  const PolynomialChain pc = szego_chain(seq, nmax);
  StabilizedBlaschke out;
  std::vector<cplx> last_inside;
  for (int n = 2; n <= nmax; n += 2) {
    const CPoly& star = pc[static_cast<std::size_t>(n)].phi_star;
    std::vector<cplx> inside;
    if (star.degree() >= 1) inside = split_by_disk(roots(star, 1e-10)).inside;
    out.counts.push_back(inside.size());
    last_inside = std::move(inside);
    out.degree_used = n;
  }
  const std::size_t m = out.counts.size();
  std::size_t run_start = m - 1;
  while (run_start > 0 && out.counts[run_start - 1] == out.counts[m - 1]) --run_start;
  if (m - run_start >= 3) out.stabilization_index = 2 * static_cast<int>(run_start + 1);
  out.B = blaschke(std::move(last_inside));
  return out;
}

std::vector<ConvergenceRow> convergence_report(const VerblunskySequence& seq, const std::vector<int>& degrees,
                                               cplx z, const SzegoEvaluator& ev, const BlaschkeProduct& B) {
  std::vector<ConvergenceRow> rows(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t i) {
    const int n = degrees[i];
    rows[i] = {n, l1_error(seq, n, ev), weak_error(seq, n, 0, ev), phi_star_limit_error(seq, n, z, B, ev)};
  });
  return rows;
}

}  // namespace opxlab
