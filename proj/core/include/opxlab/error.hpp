#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opxlab {

enum class Errc {
  InvalidArgument,
  UnimodularCoefficient,
  LargeTailCoefficient,
  InvalidTail,
  UnknownPreset,
  DegreeExceedsN,
  NonConvergence,
  ZeroOnOrOutsideDisk,
  UnsupportedTail,
  PoleOfF,
  SingularNode,
  PoleAtOrigin,
  QuadratureStall,
  PoleEncountered,
  NearZeroDenominator,
  NonRealCoefficients,
  NotSymmetricLaurent,
  DegenerateLeadingCoefficient,
  ZeroC,
  TruncationNotConverged,
  SingularShift,
  InsufficientMoments,
  Io,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `index()` carries the offending
/// coefficient, node or polynomial index when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace opxlab
