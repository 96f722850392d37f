#include "opxlab/grid.hpp"

#include <string>

#include "opxlab/error.hpp"

namespace opxlab {

bool is_power_of_two(std::size_t m) noexcept { return m != 0 && (m & (m - 1)) == 0; }

CircleGrid::CircleGrid(std::size_t M) : M_(M) {
  if (M < 16 || !is_power_of_two(M))
    throw Error(Errc::InvalidArgument, "grid size must be a power of two >= 16, got " + std::to_string(M));
}

}  // namespace opxlab
