#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "opxlab/coeffs.hpp"
#include "opxlab/cpoly.hpp"
#include "opxlab/grid.hpp"
#include "opxlab/poly.hpp"

namespace opxlab {

struct RationalFn {
  CPoly num;
  CPoly den;

  cplx operator()(cplx z) const { return num(z) / den(z); }
};

/// Schur iterates f_0..f_M as rational functions, plus F = (1+zf)/(1−zf).
struct SchurChain {
  std::vector<RationalFn> f;
  RationalFn F;
  TailSpec tail_kind;
  /// Index where f is seeded (f_M ≡ 0, the Geronimus tail function, or the truncation cut).
  std::size_t M = 0;
  /// For Truncate tails: sup |Re F_depth − Re F_{depth+8}|/max(1,|Re F|) on
  /// a 256-node boundary grid. Zero otherwise.
  double truncation_error = 0.0;
};

/// ε_{N−1}, the sign that makes ε·Re F positive on the circle.
int boundary_sign(const VerblunskySequence& seq);

/// Downward Möbius recursion f_n = (α_n + z f_{n+1})/(1 + conj(α_n) z f_{n+1}).
/// Throws UnsupportedTail or, for Truncate, TruncationNotConverged.
SchurChain schur_chain(const VerblunskySequence& seq);

/// F(z); throws PoleOfF when |1 − z f(z)| < 1e−13.
cplx F_eval(const SchurChain& chain, cplx z);

/// Re F on the unit circle at one angle, from the rational F.
double reF_at(const SchurChain& chain, double theta);

struct BoundaryFunction {
  std::vector<double> theta;
  std::vector<double> values;
  /// ε_{N−1}; sign_flag·values ≥ 0 up to quadrature noise.
  int sign_flag = 1;
};

/// Re F at grid nodes from the rational F. Throws SingularNode.
BoundaryFunction reF_boundary(const SchurChain& chain, const VerblunskySequence& seq,
                              const CircleGrid& grid);

/// Re F at grid nodes from the Khrushchev formula at index n ≥ 1:
/// ω_{n−1}(1−|f_n|²)/|Φ_n* − zΦ_n f_n|².
BoundaryFunction reF_boundary_khrushchev(const SchurChain& chain, const VerblunskySequence& seq,
                                         int n, const CircleGrid& grid);

/// Re F at grid nodes from a closed form θ ↦ Re F(e^{iθ}).
BoundaryFunction reF_boundary(const std::function<double(double)>& closed_form, int sign_flag,
                              const CircleGrid& grid);

/// max over nodes of |Re F − Khrushchev_n|.
double khrushchev_residual(const VerblunskySequence& seq, int n, const CircleGrid& grid);
double khrushchev_residual(const SchurChain& chain, const VerblunskySequence& seq, int n,
                           const CircleGrid& grid);

/// First K+1 Taylor coefficients of F at 0.
std::vector<cplx> maclaurin_F(const SchurChain& chain, std::size_t K);

}  // namespace opxlab
