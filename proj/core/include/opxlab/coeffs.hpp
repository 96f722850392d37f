#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opxlab/cpoly.hpp"

namespace opxlab {

/// Tolerance on ||α|−1| below which a coefficient counts as unimodular.
inline constexpr double kUnimodularTol = 1e-14;

/// α_n = 0 for every n ≥ start.
struct ZeroBeyond {
  std::size_t start = 0;
  friend bool operator==(const ZeroBeyond&, const ZeroBeyond&) = default;
};

/// Tail taken from the measure (1 − a cos θ) dθ/2π, 0 < a < 1, appended
/// after the explicit head.
struct ClosedFormGeronimus {
  double a = 0.0;
  friend bool operator==(const ClosedFormGeronimus&, const ClosedFormGeronimus&) = default;
};

/// The head is a finite prefix of an infinite sequence. The Schur chain is
/// cut at `depth` (f_depth := 0) and must agree with the depth+8 cut to `tol`.
struct Truncate {
  std::size_t depth = 0;
  double tol = 1e-8;
  friend bool operator==(const Truncate&, const Truncate&) = default;
};

using TailSpec = std::variant<ZeroBeyond, ClosedFormGeronimus, Truncate>;

std::string_view tail_name(const TailSpec& tail) noexcept;

/// Tail coefficient m (m = 0, 1, ...) of the (1 − a cos θ) measure.
double geronimus_tail_alpha(double a, std::size_t m);

/// Validated Verblunsky data with at most finitely many coefficients
/// outside the closed unit disk. Immutable once built.
class VerblunskySequence {
 public:
  cplx alpha(std::size_t n) const;
  std::span<const cplx> head() const noexcept { return head_; }
  const TailSpec& tail() const noexcept { return tail_; }

  /// 1 + max{n : |α_n| > 1}, or 0 when every coefficient is inside.
  std::size_t indefinite_length() const noexcept { return N_; }

  /// Index from which the Schur iterate is known in closed form (0 for
  /// ZeroBeyond, the tail function for Geronimus, ≈0 for Truncate).
  std::size_t tail_start() const noexcept;

  bool is_real(double tol = 0.0) const noexcept;

  friend VerblunskySequence validate(std::vector<cplx> raw, TailSpec tail);

 private:
  VerblunskySequence(std::vector<cplx> head, TailSpec tail, std::size_t N)
      : head_(std::move(head)), tail_(tail), N_(N) {}

  std::vector<cplx> head_;
  TailSpec tail_;
  std::size_t N_ = 0;
};

/// Checks |α_n| ≠ 1 everywhere, |α_n| < 1 on tail-provided entries, and
/// computes the minimal N.
VerblunskySequence validate(std::vector<cplx> raw, TailSpec tail);

/// ω_n = ∏_{j≤n}(1−|α_j|²), ε_n = sign ω_n and |ρ_n| = √|1−|α_n|²|, with
/// ω_{−1} = 1 and ε_{−1} = +1.
class SignedWeights {
 public:
  SignedWeights() = default;
  SignedWeights(std::vector<double> omega, std::vector<int> epsilon, std::vector<double> rho_abs);

  /// Largest n covered.
  int nmax() const noexcept { return static_cast<int>(rho_abs_.size()) - 1; }
  double omega(int n) const { return omega_.at(static_cast<std::size_t>(n + 1)); }
  int epsilon(int n) const { return epsilon_.at(static_cast<std::size_t>(n + 1)); }
  double rho_abs(int n) const { return rho_abs_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<double> omega_;   // index n+1
  std::vector<int> epsilon_;    // index n+1
  std::vector<double> rho_abs_; // index n
};

SignedWeights weights(const VerblunskySequence& seq, int nmax);

enum class Preset { SingleLarge, AppendedGeronimus, ClassicalZero, RandomSzego };

enum class RandomTail { Zero, Truncate };

struct RandomSzegoParams {
  std::uint64_t seed = 0;
  double decay = 0.6;
  int spikes = 2;
  std::size_t length = 8;
  bool real = false;
  RandomTail tail = RandomTail::Zero;
};

Preset preset_from_name(std::string_view name);
std::string_view preset_name(Preset p) noexcept;

/// single_large {2,0,...}; appended_geronimus {2√2, Geronimus(1/√2) tail};
/// classical_zero; random_szego with |α_n| ≤ decay^n and `spikes` large
/// entries of modulus in [1.05, 3] among the first max(3, spikes) indices.
VerblunskySequence preset(Preset p, const RandomSzegoParams& params = {});

}  // namespace opxlab
