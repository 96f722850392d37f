#include "opxlab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opxlab/error.hpp"

namespace opxlab {

namespace {

PolynomialChain run_recursion(const VerblunskySequence& seq, int nmax, double sign) {
  if (nmax < 0) throw Error(Errc::InvalidArgument, "nmax must be nonnegative");
  PolynomialChain chain;
  chain.pairs.reserve(static_cast<std::size_t>(nmax) + 1);
  chain.cross_residual.reserve(static_cast<std::size_t>(nmax) + 1);
  chain.pairs.push_back({CPoly::constant(1.0), CPoly::constant(1.0), 0});
  chain.cross_residual.push_back(0.0);
  chain.certified_degree = 0;

  for (int n = 0; n < nmax; ++n) {
    const auto& [phi, phi_star, idx] = chain.pairs.back();
    const cplx a = sign * seq.alpha(static_cast<std::size_t>(n));
    const CPoly z_phi = phi.shifted(1);
    CPoly next = z_phi - std::conj(a) * phi_star;
    CPoly next_star = phi_star - a * z_phi;

    const double scale = std::max(1.0, next.max_abs_coeff());
    const double residual = max_coeff_diff(next_star, reverse(next, n + 1)) / scale;
    chain.cross_residual.push_back(residual);
    if (chain.certified_degree == n && residual < PolynomialChain::kCertifyTol) chain.certified_degree = n + 1;

    chain.pairs.push_back({std::move(next), std::move(next_star), n + 1});
  }
  return chain;
}

}  // namespace

PolynomialChain szego_chain(const VerblunskySequence& seq, int nmax) { return run_recursion(seq, nmax, 1.0); }

PolynomialChain second_kind_chain(const VerblunskySequence& seq, int nmax) {
  return run_recursion(seq, nmax, -1.0);
}

NormalizedChain normalize(const PolynomialChain& chain, const SignedWeights& w) {
  if (chain.size() > 0 && w.nmax() + 1 < static_cast<int>(chain.size()) - 1)
    throw Error(Errc::InvalidArgument, "weights do not cover the chain");
  NormalizedChain out;
  out.varphi.reserve(chain.size());
  out.varphi_star.reserve(chain.size());
  for (const auto& pair : chain.pairs) {
    const double s = 1.0 / std::sqrt(std::abs(w.omega(pair.n - 1)));
    out.varphi.push_back(pair.phi * s);
    out.varphi_star.push_back(pair.phi_star * s);
  }
  return out;
}

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& rs, double radius) {
  std::vector<int> label(rs.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < rs.size(); ++j)
        if (label[j] < 0 && std::abs(rs[j] - rs[cur]) < radius) {
          label[j] = next;
          stack.push_back(j);
        }
    }
    ++next;
  }
  std::vector<RootCluster> out(static_cast<std::size_t>(next), RootCluster{cplx{}, 0});
  for (std::size_t i = 0; i < rs.size(); ++i) {
    auto& c = out[static_cast<std::size_t>(label[i])];
    c.center += rs[i];
    ++c.multiplicity;
  }
  for (auto& c : out) c.center /= static_cast<double>(c.multiplicity);
  return out;
}

DiskSplit split_by_disk(const std::vector<cplx>& rs) {
  DiskSplit s;
  for (const cplx r : rs) {
    const double m = std::abs(r);
    if (m < 1.0 - DiskSplit::kInsideMargin)
      s.inside.push_back(r);
    else if (m <= 1.0 + DiskSplit::kInsideMargin)
      s.near_circle.push_back(r);
    else
      s.outside.push_back(r);
  }
  return s;
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {}

cplx BlaschkeProduct::operator()(cplx z) const noexcept {
  cplx acc = 1.0;
  for (const cplx l : zeros_) {
    if (l == cplx{}) {
      acc *= -z;
      continue;
    }
    acc *= (std::abs(l) / l) * (l - z) / (1.0 - std::conj(l) * z);
  }
  return acc;
}

BlaschkeProduct blaschke(std::vector<cplx> zeros_inside) {
  for (std::size_t i = 0; i < zeros_inside.size(); ++i)
    if (!(std::abs(zeros_inside[i]) < 1.0))
      throw Error(Errc::ZeroOnOrOutsideDisk, "Blaschke zero " + std::to_string(i) + " is not inside the disk", i);
  return BlaschkeProduct(std::move(zeros_inside));
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) { return b(z); }

}  // namespace opxlab
