#pragma once

#include <functional>
#include <optional>

#include "opxlab/coeffs.hpp"
#include "opxlab/cpoly.hpp"

namespace opxlab {

/// Known closed forms for a preset sequence.
struct ClosedForm {
  std::function<double(double)> reF;  // Re F(e^{iθ})
  std::function<cplx(cplx)> F;
  std::function<cplx(cplx)> D;
  std::function<cplx(cplx)> B;
  /// lim z^n P_n(z + 1/z) = B(z)D(0)/(B(0)D(z)).
  std::function<cplx(cplx)> szego_limit;
  int sign = 1;  // ε_{N−1}
  std::optional<cplx> pole;  // pole of F in the disk
};

std::optional<ClosedForm> closed_form(Preset p);

namespace single_large {

/// z^n P_n(z + 1/z) = z^{2n} − 2z^{2n−1} − 2z + 1 for n ≥ 1.
CPoly mapped_laurent_poly(int n);

/// (f, g) = ∫ f conj(g)/|e^{iθ}−2|² dθ/2π + M f(2) conj(g(1/2)) + M f(1/2) conj(g(2)),
/// integral by the midpoint rule on `nodes` points.
cplx geronimus_form(const CPoly& f, const CPoly& g, double mass, std::size_t nodes = 512);

}  // namespace single_large

}  // namespace opxlab
