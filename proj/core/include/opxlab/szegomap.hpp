#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "opxlab/coeffs.hpp"
#include "opxlab/cpoly.hpp"
#include "opxlab/poly.hpp"

namespace opxlab {

/// Real polynomial in x, ascending coefficients.
using RealPoly = std::vector<double>;

double eval(const RealPoly& p, double x) noexcept;
cplx eval(const RealPoly& p, cplx x) noexcept;

/// μ(z^n), n = 0..K, from the orthogonality recursion on Φ_n.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(std::vector<cplx> mu, std::string truncation_reason)
      : mu_(std::move(mu)), reason_(std::move(truncation_reason)) {}

  std::size_t K() const noexcept { return mu_.empty() ? 0 : mu_.size() - 1; }
  std::span<const cplx> values() const noexcept { return mu_; }
  /// μ(z^n) for any integer n with |n| ≤ K, using μ(z^{−n}) = conj μ(z^n).
  cplx at(long n) const;
  /// Empty unless the table stopped short of the requested K.
  const std::string& truncation_reason() const noexcept { return reason_; }

  static constexpr double kMagnitudeCeiling = 1e12;

 private:
  std::vector<cplx> mu_;
  std::string reason_;
};

/// Requires chain degree ≥ K. Stops early once |μ(z^n)| ≥ 1e12.
MomentTable mu_moments(const PolynomialChain& chain, std::size_t K);

/// ⟨x^k, γ⟩ = Σ_j binom(k,j) μ(z^{k−2j}). Throws InsufficientMoments.
double gamma_moment(const MomentTable& table, std::size_t k);
std::vector<double> gamma_moments(const MomentTable& table, std::size_t K);

/// Symmetric Laurent coefficients s_0..s_{2n} of z^n P_n(z + 1/z) =
/// (1 − α_{2n−1})^{−1}(Φ_{2n} + Φ_{2n}*), with α_{−1} = −1.
std::vector<double> mapped_laurent(const PolynomialChain& chain, int n);

/// Converts symmetric Laurent coefficients (length 2n+1) into P_n(x).
RealPoly laurent_to_x(const std::vector<double>& sym);

/// P_n from the chain (needs degree 2n). Throws NonRealCoefficients or
/// NotSymmetricLaurent.
RealPoly map_P(const PolynomialChain& chain, int n);

/// z^n P_n(z + 1/z) evaluated through P_n.
cplx mapped_value(const RealPoly& P, int n, cplx z);

struct Recurrence {
  std::vector<double> b;  // b[0] = b_1
  std::vector<double> c;  // c[0] = c_1
};

/// Reads b_{n+1}, c_n off xP_n − P_{n+1} by leading-coefficient
/// elimination. Gives b_1..b_{K}, c_1..c_{K−1} for P_0..P_K.
Recurrence recurrence_from_P(const std::vector<RealPoly>& P);

/// Closed-form recurrence data for real α, n = 0..K−1:
/// c_{n+1} = (1−α_{2n−1})(1−α_{2n}²)(1+α_{2n+1}),
/// b_{n+1} = (1−α_{2n−1})α_{2n} − (1+α_{2n−1})α_{2n−2},
/// with α_{−1} = −1 and α_{−2} = 0.
Recurrence geronimus(const VerblunskySequence& seq, std::size_t K);

/// Tridiagonal H with diagonal b, superdiagonal √|c| and subdiagonal
/// c/√|c|, signature Δ and the mapped polynomials when available.
struct GenJacobiSystem {
  std::vector<double> b;
  std::vector<double> c;
  std::vector<int> delta;  // delta[0] = Δ_1
  std::vector<RealPoly> P;

  std::size_t size() const noexcept { return b.size(); }
  double super(std::size_t i) const;  // H(i, i+1)
  double sub(std::size_t i) const;    // H(i+1, i)

  /// Leading K×K block of H and G (row-major).
  std::vector<double> dense_H(std::size_t K) const;
  std::vector<double> dense_G(std::size_t K) const;
};

/// Throws ZeroC for any c_n = 0.
GenJacobiSystem build_system(std::vector<double> b, std::vector<double> c);

/// max |GH − (GH)ᵀ| over the leading K×K block.
double gh_asymmetry(const GenJacobiSystem& sys, std::size_t K);

/// ((H_K − z)^{−1} e, e)_G for the K×K truncation. Throws SingularShift when
/// a pivot falls below 1e−12.
cplx m_truncated(const GenJacobiSystem& sys, cplx z, std::size_t K);

/// m_K(z), checked against m_{K+16}; throws TruncationNotConverged when
/// they differ by more than 1e−8.
cplx m_function(const GenJacobiSystem& sys, cplx z, std::size_t K);

/// Doubles K from K0 until successive values differ by < tol.
cplx m_function_adaptive(const GenJacobiSystem& sys, cplx z, std::size_t K0, std::size_t Kmax,
                         double tol = 1e-8);

/// |F(z) − (z − 1/z) m_K(z + 1/z)|, |z| ≥ 0.02.
double cnr_residual(const std::function<cplx(cplx)>& F, const GenJacobiSystem& sys, cplx z,
                    std::size_t K);

struct OrthogonalityResult {
  double off_max = 0.0;  // max_{k<n} |pairing|
  double diagonal = 0.0; // pairing at k = n
};

/// ⟨x^k P_n, γ⟩ for k ≤ n. Throws InsufficientMoments.
OrthogonalityResult orthogonality_check(const std::vector<double>& gamma, const RealPoly& P, int n);

/// ⟨conj(w)^k Φ_n, μ⟩ for k ≤ n.
struct ComplexOrthogonality {
  double off_max = 0.0;
  cplx diagonal;
};
ComplexOrthogonality mu_orthogonality_check(const MomentTable& table, const CPoly& phi, int n);

/// ⟨P_n², γ⟩.
double gamma_norm(const std::vector<double>& gamma, const RealPoly& P);

struct TailLimits {
  double sup_b = 0.0;
  double sup_cdev = 0.0;
};

/// max_{k≥kmin} |b_k| and |c_k − 1| (1-based k). Needs ≥ kmin+16 entries.
TailLimits tail_limits(const std::vector<double>& b, const std::vector<double>& c, std::size_t kmin);

}  // namespace opxlab
