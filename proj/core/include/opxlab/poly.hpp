#pragma once

#include <cstddef>
#include <vector>

#include "opxlab/coeffs.hpp"
#include "opxlab/cpoly.hpp"

namespace opxlab {

/// Φ_n together with its reversal Φ_n*.
struct MonicPair {
  CPoly phi;
  CPoly phi_star;
  int n = 0;
};

/// Chain Φ_0..Φ_nmax (or Ψ for the second kind). Both lines of the
/// recursion are iterated; `cross_residual[n]` is the relative gap between
/// the iterated Φ_n* and reverse(Φ_n, n).
struct PolynomialChain {
  std::vector<MonicPair> pairs;
  std::vector<double> cross_residual;
  /// Largest n with every cross residual up to n below kCertifyTol.
  int certified_degree = 0;

  static constexpr double kCertifyTol = 1e-9;

  const MonicPair& operator[](std::size_t n) const { return pairs.at(n); }
  std::size_t size() const noexcept { return pairs.size(); }
};

/// Φ_0 = 1; Φ_{n+1} = zΦ_n − conj(α_n)Φ_n*, Φ_{n+1}* = Φ_n* − α_n zΦ_n.
PolynomialChain szego_chain(const VerblunskySequence& seq, int nmax);

/// Second-kind chain Ψ_n: the same recursion driven by −α_n.
PolynomialChain second_kind_chain(const VerblunskySequence& seq, int nmax);

struct NormalizedChain {
  std::vector<CPoly> varphi;
  std::vector<CPoly> varphi_star;
};

/// φ_n = Φ_n/√|ω_{n−1}|.
NormalizedChain normalize(const PolynomialChain& chain, const SignedWeights& w);

/// Zeros by Aberth–Ehrlich simultaneous iteration. Each returned root r
/// satisfies |p(r)|/max(1,|r|)^deg ≤ tol·max|coeff|; repeated roots appear
/// once per multiplicity. Throws NonConvergence.
std::vector<cplx> roots(const CPoly& p, double tol = 1e-12);

struct RootCluster {
  cplx center;
  int multiplicity = 1;
};

/// Groups roots closer than `radius` (single linkage).
std::vector<RootCluster> cluster_roots(const std::vector<cplx>& rs, double radius = 1e-6);

/// Roots with |λ| < 1 − kInsideMargin go to `inside`; those within the
/// margin of the circle go to `near_circle` and never enter a Blaschke product.
struct DiskSplit {
  std::vector<cplx> inside;
  std::vector<cplx> near_circle;
  std::vector<cplx> outside;

  static constexpr double kInsideMargin = 1e-8;
};

DiskSplit split_by_disk(const std::vector<cplx>& rs);

/// ∏ (|λ|/λ)(λ−z)/(1−conj(λ)z); a zero at λ = 0 contributes the factor −z.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<cplx> zeros);

  std::span<const cplx> zeros() const noexcept { return zeros_; }
  std::size_t count() const noexcept { return zeros_.size(); }
  cplx operator()(cplx z) const noexcept;

 private:
  std::vector<cplx> zeros_;
};

/// Throws ZeroOnOrOutsideDisk for any |λ| ≥ 1.
BlaschkeProduct blaschke(std::vector<cplx> zeros_inside);
cplx blaschke_eval(const BlaschkeProduct& b, cplx z);

}  // namespace opxlab
