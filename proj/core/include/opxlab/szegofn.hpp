#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "opxlab/coeffs.hpp"
#include "opxlab/grid.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"

namespace opxlab {

/// Boundary data log(ε_{N−1} Re F(e^{iθ})) on a midpoint grid, plus the
/// boundary function itself so finer grids can be sampled on demand.
class SzegoEvaluator {
 public:
  using Boundary = std::function<double(double theta)>;

  SzegoEvaluator(Boundary reF, int sign, std::size_t M = 1024);

  static SzegoEvaluator from_chain(const SchurChain& chain, const VerblunskySequence& seq,
                                   std::size_t M = 1024);

  const CircleGrid& grid() const noexcept { return grid_; }
  std::span<const double> log_values() const noexcept { return log_values_; }
  int sign() const noexcept { return sign_; }

  /// log(ε Re F) at the nodes of `grid`. Throws SingularNode when the
  /// argument is not strictly positive and finite.
  std::vector<double> sample_log(const CircleGrid& grid) const;

 private:
  Boundary reF_;
  int sign_;
  CircleGrid grid_;
  std::vector<double> log_values_;
};

struct QuadratureResult {
  cplx value;
  std::size_t nodes = 0;
  double last_change = 0.0;
};

/// D(z) = exp((1/4π)∫(e^{iθ}+z)/(e^{iθ}−z) log(ε Re F) dθ) with grid
/// doubling until successive values differ by < tol. Requires |z| < 1 − 1e−6.
/// Throws QuadratureStall past 2^20 nodes.
QuadratureResult szego_D_detail(const SzegoEvaluator& ev, cplx z, double tol = 1e-9);
cplx szego_D(const SzegoEvaluator& ev, cplx z, double tol = 1e-9);

/// ∫ e^{ikθ} log(ε Re F) dθ/2π on the evaluator grid, |k| ≤ M/4.
cplx log_fourier(const SzegoEvaluator& ev, int k);

/// Discrete ∫ e^{ikθ} g(θ) dθ/2π for samples on a midpoint grid.
cplx grid_fourier(const CircleGrid& grid, std::span<const double> samples, int k);

/// (δ_jD)(z) = (1 − conj(α_j) f_j)(1 − z f_{j+1}) / (|ρ_j| (1 − z f_j)).
/// Throws PoleEncountered.
cplx relative_szego(const VerblunskySequence& seq, const SchurChain& chain, std::size_t j, cplx z);

/// ε_{N−1} Re F_N(e^{iθ}) |∏_{j<N} δ_jD(e^{iθ})|², which telescopes to Re F.
double telescoped_reF(const VerblunskySequence& seq, const SchurChain& chain, double theta);

/// log(ε_{n−1}/|φ_n*|²) on the evaluator grid; the log of the modulus,
/// since the sign matches ε Re F for n ≥ N.
std::vector<double> log_inverse_phi_star_sq(const VerblunskySequence& seq, int n,
                                            const CircleGrid& grid);

/// ∫ |log(1/|φ_n*|²) − log(ε Re F)| dθ/2π on the evaluator grid.
double l1_error(const VerblunskySequence& seq, int n, const SzegoEvaluator& ev);

/// |DFT_k log(1/|φ_n*|²) − log_fourier(k)|.
double weak_error(const VerblunskySequence& seq, int n, int k, const SzegoEvaluator& ev);

/// |φ_n*(z) − B(z)/D(z)| for |z| ≤ 0.9.
double phi_star_limit_error(const VerblunskySequence& seq, int n, cplx z, const BlaschkeProduct& B,
                            const SzegoEvaluator& ev);

/// |Φ_{n+1}*(z)/Φ_n*(z) − 1|. Throws NearZeroDenominator.
double star_ratio_error(const VerblunskySequence& seq, int n, cplx z);

/// B_n taken at the largest even degree ≤ nmax once the count of zeros of
/// φ_n* inside the disk has held for three consecutive even degrees.
struct StabilizedBlaschke {
  BlaschkeProduct B;
  int degree_used = 0;
  /// First even degree of the stable run; −1 if the count never settled.
  int stabilization_index = -1;
  std::vector<std::size_t> counts;  // inside-zero count at n = 2, 4, ...
};

StabilizedBlaschke stabilized_blaschke(const VerblunskySequence& seq, int nmax);

/// One row of a convergence report.
struct ConvergenceRow {
  int n = 0;
  double l1_error = 0.0;
  double weak_k0_error = 0.0;
  double phistar_error = 0.0;
};

std::vector<ConvergenceRow> convergence_report(const VerblunskySequence& seq,
                                               const std::vector<int>& degrees, cplx z,
                                               const SzegoEvaluator& ev, const BlaschkeProduct& B);

}  // namespace opxlab
