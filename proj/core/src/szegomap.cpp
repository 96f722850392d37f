#include "opxlab/szegomap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opxlab/error.hpp"

namespace opxlab {

double eval(const RealPoly& p, double x) noexcept {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx eval(const RealPoly& p, cplx x) noexcept {
  cplx acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx MomentTable::at(long n) const {
  const auto m = static_cast<std::size_t>(std::abs(n));
  if (m >= mu_.size())
    throw Error(Errc::InsufficientMoments, "moment index " + std::to_string(n) + " beyond table size");
  return n >= 0 ? mu_[m] : std::conj(mu_[m]);
}

MomentTable mu_moments(const PolynomialChain& chain, std::size_t K) {
  if (chain.size() < K + 1) throw Error(Errc::InsufficientMoments, "chain shorter than requested moment count");
  std::vector<cplx> mu{1.0};
  std::string reason;
  for (std::size_t n = 1; n <= K; ++n) {
    const CPoly& phi = chain[n].phi;
    cplx acc{};
    for (std::size_t j = 0; j < n; ++j) acc -= phi[j] * mu[j];
    if (!(std::abs(acc) < MomentTable::kMagnitudeCeiling)) {
      reason = "moment " + std::to_string(n) + " exceeds 1e12; table truncated at " + std::to_string(n - 1);
      break;
    }
    mu.push_back(acc);
  }
  return MomentTable(std::move(mu), std::move(reason));
}

double gamma_moment(const MomentTable& table, std::size_t k) {
  if (k > table.K()) throw Error(Errc::InsufficientMoments, "gamma moment " + std::to_string(k) + " needs more μ moments");
  cplx acc{};
  double binom = 1.0;
  for (std::size_t j = 0; j <= k; ++j) {
    acc += binom * table.at(static_cast<long>(k) - 2 * static_cast<long>(j));
    binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  return acc.real();
}

std::vector<double> gamma_moments(const MomentTable& table, std::size_t K) {
  std::vector<double> g(K + 1);
  for (std::size_t k = 0; k <= K; ++k) g[k] = gamma_moment(table, k);
  return g;
}

std::vector<double> mapped_laurent(const PolynomialChain& chain, int n) {
  if (n < 0 || chain.size() < static_cast<std::size_t>(2 * n) + 1)
    throw Error(Errc::InvalidArgument, "map_P needs the chain to degree 2n");
  const auto m = static_cast<std::size_t>(2 * n);
  const MonicPair& pair = chain[m];
  // Φ_{2n}(0) = −conj(α_{2n−1}); α_{−1} = −1.
  const cplx a_prev = n == 0 ? cplx{-1.0} : -std::conj(pair.phi[0]);
  const cplx scale_factor = 1.0 - a_prev;

  std::vector<cplx> s(m + 1);
  for (std::size_t k = 0; k <= m; ++k) s[k] = (pair.phi[k] + pair.phi_star[k]) / scale_factor;

  double scale = 0.0;
  for (const cplx v : s) scale = std::max(scale, std::abs(v));
  std::vector<double> out(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    if (std::abs(s[k].imag()) > 1e-12 * std::max(1.0, scale))
      throw Error(Errc::NonRealCoefficients, "mapped polynomial needs real Verblunsky coefficients", k);
    if (std::abs(s[k] - s[m - k]) > 1e-10 * std::max(1.0, scale))
      throw Error(Errc::NotSymmetricLaurent, "z^-n (Phi_2n + Phi_2n*) is not symmetric", k);
    out[k] = s[k].real();
  }
  return out;
}

RealPoly laurent_to_x(const std::vector<double>& sym) {
  if (sym.empty() || sym.size() % 2 == 0) throw Error(Errc::InvalidArgument, "symmetric Laurent data needs odd length");
  const std::size_t n = (sym.size() - 1) / 2;
  RealPoly P(n + 1, 0.0);
  P[0] = sym[n];
  // C_k(x) = z^k + z^{-k}: C_0 = 2, C_1 = x, C_k = x C_{k−1} − C_{k−2}; integer coefficients.
  RealPoly prev{2.0}, cur{0.0, 1.0};
  for (std::size_t k = 1; k <= n; ++k) {
    const double sigma = sym[n + k];
    for (std::size_t i = 0; i < cur.size(); ++i) P[i] += sigma * cur[i];
    RealPoly next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return P;
}

RealPoly map_P(const PolynomialChain& chain, int n) { return laurent_to_x(mapped_laurent(chain, n)); }

cplx mapped_value(const RealPoly& P, int n, cplx z) { return std::pow(z, n) * eval(P, z + 1.0 / z); }

Recurrence recurrence_from_P(const std::vector<RealPoly>& P) {
  if (P.size() < 2) throw Error(Errc::InvalidArgument, "recurrence_from_P needs P_0 and P_1");
  Recurrence rec;
  const std::size_t K = P.size() - 1;
  for (std::size_t n = 0; n < K; ++n) {
    const RealPoly& Pn = P[n];
    const RealPoly& Pnext = P[n + 1];
    if (Pn.size() != n + 1 || Pnext.size() != n + 2)
      throw Error(Errc::InvalidArgument, "P_n must have degree n", n);
    const double lead = Pn[n];
    if (std::abs(lead) < 1e-300) throw Error(Errc::DegenerateLeadingCoefficient, "P_n has vanishing leading coefficient", n);

    std::vector<double> r(n + 2, 0.0);
    for (std::size_t i = 0; i <= n; ++i) r[i + 1] += Pn[i];
    for (std::size_t i = 0; i <= n + 1; ++i) r[i] -= Pnext[i];
    if (std::abs(r[n + 1]) > 1e-12 * std::abs(lead))
      throw Error(Errc::InvalidArgument, "P_n and P_{n+1} must share the leading coefficient", n + 1);
    const double b = r[n] / lead;
    for (std::size_t i = 0; i <= n; ++i) r[i] -= b * Pn[i];
    rec.b.push_back(b);
    if (n >= 1) {
      const double lead_prev = P[n - 1][n - 1];
      if (std::abs(lead_prev) < 1e-300)
        throw Error(Errc::DegenerateLeadingCoefficient, "P_{n-1} has vanishing leading coefficient", n - 1);
      rec.c.push_back(r[n - 1] / lead_prev);
    }
  }
  return rec;
}

Recurrence geronimus(const VerblunskySequence& seq, std::size_t K) {
  auto a = [&](long k) -> double {
    if (k == -1) return -1.0;
    if (k < -1) return 0.0;
    const cplx v = seq.alpha(static_cast<std::size_t>(k));
    if (v.imag() != 0.0)
      throw Error(Errc::NonRealCoefficients, "Geronimus relations need real coefficients", static_cast<std::size_t>(k));
    return v.real();
  };
  Recurrence rec;
  rec.b.reserve(K);
  rec.c.reserve(K);
  for (std::size_t i = 0; i < K; ++i) {
    const auto n = static_cast<long>(i);
    const double am1 = a(2 * n - 1), a0 = a(2 * n), ap1 = a(2 * n + 1), am2 = a(2 * n - 2);
    rec.c.push_back((1.0 - am1) * (1.0 - a0 * a0) * (1.0 + ap1));
    rec.b.push_back((1.0 - am1) * a0 - (1.0 + am1) * am2);
  }
  return rec;
}

double GenJacobiSystem::super(std::size_t i) const { return std::sqrt(std::abs(c.at(i))); }

double GenJacobiSystem::sub(std::size_t i) const {
  const double ci = c.at(i);
  return ci < 0.0 ? -std::sqrt(-ci) : std::sqrt(ci);
}

std::vector<double> GenJacobiSystem::dense_H(std::size_t K) const {
  if (K > size() || (K > 0 && K - 1 > c.size())) throw Error(Errc::InvalidArgument, "truncation exceeds system size");
  std::vector<double> H(K * K, 0.0);
  for (std::size_t i = 0; i < K; ++i) {
    H[i * K + i] = b[i];
    if (i + 1 < K) {
      H[i * K + i + 1] = super(i);
      H[(i + 1) * K + i] = sub(i);
    }
  }
  return H;
}

std::vector<double> GenJacobiSystem::dense_G(std::size_t K) const {
  if (K > delta.size()) throw Error(Errc::InvalidArgument, "truncation exceeds signature length");
  std::vector<double> G(K * K, 0.0);
  for (std::size_t i = 0; i < K; ++i) G[i * K + i] = delta[i];
  return G;
}

GenJacobiSystem build_system(std::vector<double> b, std::vector<double> c) {
  if (b.empty() || c.size() + 1 < b.size())
    throw Error(Errc::InvalidArgument, "build_system needs c_1..c_{K-1} for b_1..b_K");
  GenJacobiSystem sys;
  sys.delta.reserve(c.size() + 1);
  sys.delta.push_back(1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(std::abs(c[i]) >= 1e-300)) throw Error(Errc::ZeroC, "c_" + std::to_string(i + 1) + " vanishes", i);
    sys.delta.push_back(c[i] < 0.0 ? -sys.delta.back() : sys.delta.back());
  }
  sys.b = std::move(b);
  sys.c = std::move(c);
  return sys;
}

double gh_asymmetry(const GenJacobiSystem& sys, std::size_t K) {
  const auto H = sys.dense_H(K);
  double worst = 0.0;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      worst = std::max(worst, std::abs(sys.delta[i] * H[i * K + j] - sys.delta[j] * H[j * K + i]));
  return worst;
}

cplx m_truncated(const GenJacobiSystem& sys, cplx z, std::size_t K) {
  if (K == 0 || K > sys.size() || K - 1 > sys.c.size())
    throw Error(Errc::InvalidArgument, "m-function truncation exceeds system size");
  constexpr double kPivot = 1e-12;
  cplx t = sys.b[K - 1] - z;
  for (std::size_t k = K - 1; k-- > 0;) {
    if (std::abs(t) < kPivot) throw Error(Errc::SingularShift, "shift is at an eigenvalue of the truncation", k + 1);
    t = sys.b[k] - z - sys.c[k] / t;
  }
  if (std::abs(t) < kPivot) throw Error(Errc::SingularShift, "shift is at an eigenvalue of the truncation", 0);
  return 1.0 / t;
}

cplx m_function(const GenJacobiSystem& sys, cplx z, std::size_t K) {
  const cplx m = m_truncated(sys, z, K);
  if (sys.size() >= K + 16 && sys.c.size() >= K + 15) {
    const cplx check = m_truncated(sys, z, K + 16);
    if (std::abs(m - check) > 1e-8)
      throw Error(Errc::TruncationNotConverged, "m_K and m_{K+16} differ by " + std::to_string(std::abs(m - check)));
  }
  return m;
}

cplx m_function_adaptive(const GenJacobiSystem& sys, cplx z, std::size_t K0, std::size_t Kmax, double tol) {
  std::size_t K = std::max<std::size_t>(K0, 1);
  cplx prev = m_truncated(sys, z, K);
  while (2 * K <= Kmax) {
    K *= 2;
    const cplx cur = m_truncated(sys, z, K);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw Error(Errc::TruncationNotConverged, "m-function did not settle by K = " + std::to_string(K));
}

double cnr_residual(const std::function<cplx(cplx)>& F, const GenJacobiSystem& sys, cplx z, std::size_t K) {
  if (!(std::abs(z) >= 0.02) || !(std::abs(z) < 1.0))
    throw Error(Errc::InvalidArgument, "CN_r residual needs 0.02 <= |z| < 1");
  return std::abs(F(z) - (z - 1.0 / z) * m_truncated(sys, z + 1.0 / z, K));
}

OrthogonalityResult orthogonality_check(const std::vector<double>& gamma, const RealPoly& P, int n) {
  const std::size_t deg = P.size() - 1;
  if (gamma.size() < deg + static_cast<std::size_t>(n) + 1)
    throw Error(Errc::InsufficientMoments, "orthogonality check needs gamma moments to degree 2n");
  OrthogonalityResult res;
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= deg; ++i) acc += P[i] * gamma[i + static_cast<std::size_t>(k)];
    if (k < n) res.off_max = std::max(res.off_max, std::abs(acc));
    else res.diagonal = acc;
  }
  return res;
}

ComplexOrthogonality mu_orthogonality_check(const MomentTable& table, const CPoly& phi, int n) {
  if (table.K() < static_cast<std::size_t>(n))
    throw Error(Errc::InsufficientMoments, "μ orthogonality check needs moments to degree n");
  ComplexOrthogonality res;
  for (int k = 0; k <= n; ++k) {
    cplx acc{};
    for (int j = 0; j <= n; ++j) acc += phi[static_cast<std::size_t>(j)] * table.at(j - k);
    if (k < n) res.off_max = std::max(res.off_max, std::abs(acc));
    else res.diagonal = acc;
  }
  return res;
}

double gamma_norm(const std::vector<double>& gamma, const RealPoly& P) {
  const std::size_t deg = P.size() - 1;
  if (gamma.size() < 2 * deg + 1) throw Error(Errc::InsufficientMoments, "gamma_norm needs moments to degree 2n");
  double acc = 0.0;
  for (std::size_t i = 0; i <= deg; ++i)
    for (std::size_t j = 0; j <= deg; ++j) acc += P[i] * P[j] * gamma[i + j];
  return acc;
}

TailLimits tail_limits(const std::vector<double>& b, const std::vector<double>& c, std::size_t kmin) {
  if (kmin < 1 || b.size() < kmin + 16 || c.size() < kmin + 16)
    throw Error(Errc::InvalidArgument, "tail_limits needs at least kmin+16 recurrence entries");
  TailLimits t;
  for (std::size_t k = kmin; k <= b.size(); ++k) t.sup_b = std::max(t.sup_b, std::abs(b[k - 1]));
  for (std::size_t k = kmin; k <= c.size(); ++k) t.sup_cdev = std::max(t.sup_cdev, std::abs(c[k - 1] - 1.0));
  return t;
}

}  // namespace opxlab
