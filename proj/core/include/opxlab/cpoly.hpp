#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace opxlab {

using cplx = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Trailing exact zeros are trimmed on construction, so the zero polynomial
/// has no coefficients and reports `kZeroDegree`.
class CPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  CPoly() = default;
  explicit CPoly(std::vector<cplx> coeffs);
  CPoly(std::initializer_list<cplx> coeffs);

  static CPoly constant(cplx c);
  static CPoly monomial(int n, cplx c = 1.0);

  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const cplx> coeffs() const noexcept { return c_; }

  /// Coefficient of z^k; zero beyond the stored range.
  cplx operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : cplx{}; }
  cplx leading() const noexcept { return c_.empty() ? cplx{} : c_.back(); }

  cplx operator()(cplx z) const noexcept;
  /// p(z) and p'(z) in one Horner pass.
  std::pair<cplx, cplx> eval_with_derivative(cplx z) const noexcept;

  double max_abs_coeff() const noexcept;
  bool is_real(double tol = 0.0) const noexcept;

  /// Multiply by z^k.
  CPoly shifted(int k) const;
  /// Drop high-degree coefficients whose modulus is at most `threshold`.
  CPoly trim_leading(double threshold) const;

  CPoly& operator+=(const CPoly& rhs);
  CPoly& operator-=(const CPoly& rhs);
  CPoly& operator*=(cplx s);

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, cplx s) { return a *= s; }
  friend CPoly operator*(cplx s, CPoly a) { return a *= s; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend bool operator==(const CPoly&, const CPoly&) = default;

 private:
  void trim();
  std::vector<cplx> c_;
};

/// z^n * conj(p(1/conj(z))): the coefficient vector of p, padded to length
/// n+1, conjugated and reversed. Throws DegreeExceedsN when deg p > n.
CPoly reverse(const CPoly& p, int n);

/// Largest coefficientwise modulus of a - b.
double max_coeff_diff(const CPoly& a, const CPoly& b) noexcept;

}  // namespace opxlab
