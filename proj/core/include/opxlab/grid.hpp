#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "opxlab/cpoly.hpp"

namespace opxlab {

/// Midpoint nodes θ_k = 2π(k+1/2)/M on the unit circle, M a power of two
/// with M ≥ 16. The half-step offset keeps roots of unity off the grid.
class CircleGrid {
 public:
  explicit CircleGrid(std::size_t M);

  std::size_t size() const noexcept { return M_; }
  double theta(std::size_t k) const noexcept {
    return 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(M_);
  }
  cplx node(std::size_t k) const noexcept { return std::polar(1.0, theta(k)); }

 private:
  std::size_t M_;
};

bool is_power_of_two(std::size_t m) noexcept;

}  // namespace opxlab
