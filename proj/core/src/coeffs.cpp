#include "opxlab/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "opxlab/error.hpp"

namespace opxlab {

namespace {

// Tail coefficients checked against the unit disk at validation time.
constexpr std::size_t kTailScan = 64;

}  // namespace

std::string_view tail_name(const TailSpec& tail) noexcept {
  switch (tail.index()) {
    case 0: return "zero";
    case 1: return "geronimus";
    default: return "truncate";
  }
}

double geronimus_tail_alpha(double a, std::size_t m) {
  const double s = std::sqrt(1.0 - a * a);
  const double mu_plus = (1.0 + s) / a;
  const double mu_minus = (1.0 - s) / a;
  const double p = static_cast<double>(m) + 2.0;
  // −(μ₊−μ₋)/(μ₊^p − μ₋^p), written to underflow instead of overflow.
  const double ratio = std::pow(mu_minus / mu_plus, p);
  return -(mu_plus - mu_minus) * std::exp(-p * std::log(mu_plus)) / (1.0 - ratio);
}

cplx VerblunskySequence::alpha(std::size_t n) const {
  if (const auto* z = std::get_if<ZeroBeyond>(&tail_)) {
    return n < head_.size() && n < z->start ? head_[n] : cplx{};
  }
  if (const auto* g = std::get_if<ClosedFormGeronimus>(&tail_)) {
    return n < head_.size() ? head_[n] : cplx{geronimus_tail_alpha(g->a, n - head_.size())};
  }
  return n < head_.size() ? head_[n] : cplx{};
}

std::size_t VerblunskySequence::tail_start() const noexcept {
  if (const auto* z = std::get_if<ZeroBeyond>(&tail_)) return std::max(z->start, N_);
  if (std::holds_alternative<ClosedFormGeronimus>(tail_)) return head_.size();
  return std::get<Truncate>(tail_).depth;
}

bool VerblunskySequence::is_real(double tol) const noexcept {
  return std::all_of(head_.begin(), head_.end(), [tol](cplx a) { return std::abs(a.imag()) <= tol; });
}

VerblunskySequence validate(std::vector<cplx> raw, TailSpec tail) {
  for (std::size_t n = 0; n < raw.size(); ++n) {
    const double m = std::abs(raw[n]);
    if (!std::isfinite(m)) throw Error(Errc::InvalidArgument, "non-finite coefficient", n);
    if (std::abs(m - 1.0) <= kUnimodularTol)
      throw Error(Errc::UnimodularCoefficient, "|alpha_" + std::to_string(n) + "| = 1", n);
  }

  if (const auto* z = std::get_if<ZeroBeyond>(&tail)) {
    for (std::size_t n = z->start; n < raw.size(); ++n)
      if (raw[n] != cplx{})
        throw Error(Errc::InvalidTail, "nonzero coefficient at index " + std::to_string(n) +
                                           " beyond ZeroBeyond(" + std::to_string(z->start) + ")", n);
  } else if (const auto* g = std::get_if<ClosedFormGeronimus>(&tail)) {
    if (!(g->a > 0.0 && g->a < 1.0))
      throw Error(Errc::InvalidTail, "Geronimus tail parameter must satisfy 0 < a < 1");
    for (std::size_t m = 0; m < kTailScan; ++m)
      if (std::abs(geronimus_tail_alpha(g->a, m)) >= 1.0)
        throw Error(Errc::LargeTailCoefficient, "tail coefficient outside the disk", raw.size() + m);
  } else {
    const auto& t = std::get<Truncate>(tail);
    if (raw.size() < t.depth + 8)
      throw Error(Errc::InvalidTail, "Truncate(depth=" + std::to_string(t.depth) +
                                         ") needs at least depth+8 stored coefficients");
    if (!(t.tol > 0.0)) throw Error(Errc::InvalidTail, "Truncate tolerance must be positive");
    for (std::size_t n = t.depth; n < raw.size(); ++n)
      if (std::abs(raw[n]) >= 1.0)
        throw Error(Errc::LargeTailCoefficient,
                    "coefficient " + std::to_string(n) + " past the truncation depth is not inside the disk", n);
  }

  std::size_t N = 0;
  for (std::size_t n = 0; n < raw.size(); ++n)
    if (std::abs(raw[n]) > 1.0) N = n + 1;

  return VerblunskySequence(std::move(raw), tail, N);
}

SignedWeights::SignedWeights(std::vector<double> omega, std::vector<int> epsilon, std::vector<double> rho_abs)
    : omega_(std::move(omega)), epsilon_(std::move(epsilon)), rho_abs_(std::move(rho_abs)) {}

SignedWeights weights(const VerblunskySequence& seq, int nmax) {
  if (nmax < 0) throw Error(Errc::InvalidArgument, "nmax must be nonnegative");
  const auto count = static_cast<std::size_t>(nmax) + 1;
  std::vector<double> omega(count + 1);
  std::vector<int> eps(count + 1);
  std::vector<double> rho(count);
  omega[0] = 1.0;
  eps[0] = 1;
  for (std::size_t n = 0; n < count; ++n) {
    const double factor = 1.0 - std::norm(seq.alpha(n));
    omega[n + 1] = omega[n] * factor;
    eps[n + 1] = omega[n + 1] < 0.0 ? -1 : 1;
    rho[n] = std::sqrt(std::abs(factor));
  }
  return SignedWeights(std::move(omega), std::move(eps), std::move(rho));
}

Preset preset_from_name(std::string_view name) {
  if (name == "single_large") return Preset::SingleLarge;
  if (name == "appended_geronimus") return Preset::AppendedGeronimus;
  if (name == "classical_zero") return Preset::ClassicalZero;
  if (name == "random_szego") return Preset::RandomSzego;
  throw Error(Errc::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset p) noexcept {
  switch (p) {
    case Preset::SingleLarge: return "single_large";
    case Preset::AppendedGeronimus: return "appended_geronimus";
    case Preset::ClassicalZero: return "classical_zero";
    case Preset::RandomSzego: return "random_szego";
  }
  return "unknown";
}

namespace {

VerblunskySequence random_szego(const RandomSzegoParams& p) {
  if (!(p.decay > 0.0 && p.decay < 1.0)) throw Error(Errc::InvalidArgument, "decay must lie in (0, 1)");
  if (p.spikes < 0) throw Error(Errc::InvalidArgument, "spikes must be nonnegative");
  const std::size_t window = std::max<std::size_t>(3, static_cast<std::size_t>(p.spikes));
  const std::size_t extra = p.tail == RandomTail::Truncate ? 8 : 0;
  const std::size_t length = std::max(p.length, window) + extra;

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> big(1.05, 3.0);

  auto draw_phase = [&](double r) {
    if (p.real) return cplx{unit(rng) < 0.5 ? -r : r};
    return std::polar(r, angle(rng));
  };

  std::vector<cplx> a(length);
  for (std::size_t n = 0; n < length; ++n) a[n] = draw_phase(0.95 * unit(rng) * std::pow(p.decay, static_cast<double>(n)));

  std::vector<std::size_t> slots(window);
  for (std::size_t i = 0; i < window; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  for (int s = 0; s < p.spikes; ++s) a[slots[static_cast<std::size_t>(s)]] = draw_phase(big(rng));

  if (p.tail == RandomTail::Truncate) return validate(std::move(a), Truncate{length - extra, 1e-8});
  return validate(std::move(a), ZeroBeyond{length});
}

}  // namespace

VerblunskySequence preset(Preset p, const RandomSzegoParams& params) {
  switch (p) {
    case Preset::SingleLarge: return validate({cplx{2.0}}, ZeroBeyond{1});
    case Preset::AppendedGeronimus:
      return validate({cplx{2.0 * std::numbers::sqrt2}}, ClosedFormGeronimus{1.0 / std::numbers::sqrt2});
    case Preset::ClassicalZero: return validate({}, ZeroBeyond{0});
    case Preset::RandomSzego: return random_szego(params);
  }
  throw Error(Errc::UnknownPreset, "unknown preset");
}

}  // namespace opxlab
