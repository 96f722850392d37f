#include "opxlab/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opxlab/error.hpp"

namespace opxlab {

CPoly::CPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

CPoly::CPoly(std::initializer_list<cplx> coeffs) : c_(coeffs) { trim(); }

CPoly CPoly::constant(cplx c) { return CPoly(std::vector<cplx>{c}); }

CPoly CPoly::monomial(int n, cplx c) {
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return CPoly(std::move(v));
}

void CPoly::trim() {
  while (!c_.empty() && c_.back() == cplx{}) c_.pop_back();
}

cplx CPoly::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<cplx, cplx> CPoly::eval_with_derivative(cplx z) const noexcept {
  cplx p{}, dp{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

double CPoly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

bool CPoly::is_real(double tol) const noexcept {
  return std::all_of(c_.begin(), c_.end(), [tol](cplx c) { return std::abs(c.imag()) <= tol; });
}

CPoly CPoly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<cplx> v(static_cast<std::size_t>(k), cplx{});
  v.insert(v.end(), c_.begin(), c_.end());
  return CPoly(std::move(v));
}

CPoly CPoly::trim_leading(double threshold) const {
  std::vector<cplx> v = c_;
  while (!v.empty() && std::abs(v.back()) <= threshold) v.pop_back();
  return CPoly(std::move(v));
}

CPoly& CPoly::operator+=(const CPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

CPoly& CPoly::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return CPoly(std::move(v));
}

CPoly reverse(const CPoly& p, int n) {
  if (n < 0 || p.degree() > n)
    throw Error(Errc::DegreeExceedsN,
                "degree " + std::to_string(p.degree()) + " exceeds reversal order " + std::to_string(n));
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(n - k)] = std::conj(p[static_cast<std::size_t>(k)]);
  return CPoly(std::move(v));
}

double max_coeff_diff(const CPoly& a, const CPoly& b) noexcept {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0.0;
  for (std::size_t k = 0; k < len; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace opxlab
