#include "opxlab/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "opxlab/grid.hpp"

namespace opxlab {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kR = 2.0 * std::numbers::sqrt2;  // 2√2

ClosedForm single_large_form() {
  ClosedForm cf;
  cf.reF = [](double t) { return -3.0 / std::norm(1.0 - 2.0 * std::polar(1.0, t)); };
  cf.F = [](cplx z) { return (1.0 + 2.0 * z) / (1.0 - 2.0 * z); };
  cf.D = [](cplx z) { return std::sqrt(3.0) / (2.0 - z); };
  cf.B = [](cplx z) { return (1.0 - 2.0 * z) / (2.0 - z); };
  cf.szego_limit = [](cplx z) { return 1.0 - 2.0 * z; };
  cf.sign = -1;
  cf.pole = cplx{0.5};
  return cf;
}

ClosedForm appended_geronimus_form() {
  ClosedForm cf;
  cf.reF = [](double t) {
    const cplx e = std::polar(1.0, t);
    return 7.0 * (1.0 - std::norm(e - kR)) / std::norm((e - kR) * (1.0 - e * (kR + 1.0)));
  };
  cf.F = [](cplx z) {
    const cplx f0 = (8.0 - (kR + 1.0) * z) / (kR - (kR + 1.0) * z);
    return (1.0 + z * f0) / (1.0 - z * f0);
  };
  cf.D = [](cplx z) {
    return std::sqrt(28.0) * (1.0 - z * (kSqrt2 - 1.0)) /
           (std::sqrt(2.0 - kSqrt2) * (kR - z) * (kR + 1.0 - z));
  };
  cf.B = [](cplx z) {
    const double l = 1.0 / (kR + 1.0);
    return (l - z) / (1.0 - l * z);
  };
  cf.szego_limit = [](cplx z) {
    return -(6.0 + 5.0 * kSqrt2) * (z - (kR - 1.0) / 7.0) * (z - kR) / (4.0 * (z - (kSqrt2 + 1.0)));
  };
  cf.sign = -1;
  cf.pole = cplx{1.0 / (kR + 1.0)};
  return cf;
}

ClosedForm classical_zero_form() {
  ClosedForm cf;
  cf.reF = [](double) { return 1.0; };
  cf.F = [](cplx) { return cplx{1.0}; };
  cf.D = [](cplx) { return cplx{1.0}; };
  cf.B = [](cplx) { return cplx{1.0}; };
  cf.szego_limit = [](cplx) { return cplx{1.0}; };
  return cf;
}

}  // namespace

std::optional<ClosedForm> closed_form(Preset p) {
  switch (p) {
    case Preset::SingleLarge: return single_large_form();
    case Preset::AppendedGeronimus: return appended_geronimus_form();
    case Preset::ClassicalZero: return classical_zero_form();
    case Preset::RandomSzego: return std::nullopt;
  }
  return std::nullopt;
}

namespace single_large {

CPoly mapped_laurent_poly(int n) {
  if (n == 0) return CPoly::constant(1.0);
  std::vector<cplx> c(static_cast<std::size_t>(2 * n) + 1);
  c[0] += 1.0;
  c[1] += -2.0;
  c[static_cast<std::size_t>(2 * n - 1)] += -2.0;
  c[static_cast<std::size_t>(2 * n)] += 1.0;
  return CPoly(std::move(c));
}

cplx geronimus_form(const CPoly& f, const CPoly& g, double mass, std::size_t nodes) {
  const CircleGrid grid(nodes);
  cplx acc{};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx e = grid.node(k);
    acc += f(e) * std::conj(g(e)) / std::norm(e - 2.0);
  }
  acc /= static_cast<double>(grid.size());
  return acc + mass * f(2.0) * std::conj(g(0.5)) + mass * f(0.5) * std::conj(g(2.0));
}

}  // namespace single_large

}  // namespace opxlab
