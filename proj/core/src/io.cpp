#include "opxlab/io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace opxlab::io {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void dump_poly(std::ostream& os, int n, const char* kind, const CPoly& p, double omega, int eps) {
  const std::string tail = "," + fmt(omega) + "," + std::to_string(eps) + "\n";
  for (int k = 0; k <= n; ++k) {
    const cplx c = p[static_cast<std::size_t>(k)];
    os << n << ',' << kind << ',' << k << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << tail;
  }
}

nlohmann::json pair(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

// omega_n/epsilon_n columns carry ω_{n−1}, ε_{n−1}: the weight that normalizes Φ_n.
void write_chain_csv(std::ostream& os, const PolynomialChain& phi, const PolynomialChain& psi,
                     const SignedWeights& w) {
  os << "n,kind,coeff_index,re,im,omega_n,epsilon_n\n";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const int n = static_cast<int>(i);
    const double om = w.omega(n - 1);
    const int ep = w.epsilon(n - 1);
    dump_poly(os, n, "phi", phi[i].phi, om, ep);
    dump_poly(os, n, "phi_star", phi[i].phi_star, om, ep);
    if (i < psi.size()) {
      dump_poly(os, n, "psi", psi[i].phi, om, ep);
      dump_poly(os, n, "psi_star", psi[i].phi_star, om, ep);
    }
  }
}

void write_boundary_csv(std::ostream& os, const BoundaryFunction& bf) {
  os << "theta,reF\n";
  for (std::size_t k = 0; k < bf.theta.size(); ++k) os << fmt(bf.theta[k]) << ',' << fmt(bf.values[k]) << '\n';
}

std::string maclaurin_json(const std::vector<cplx>& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const cplx c : coeffs) arr.push_back(pair(c));
  return nlohmann::json{{"coefficients", arr}}.dump();
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "n,l1_error,weak_k0_error,phistar_error_at_z\n";
  for (const auto& r : rows)
    os << r.n << ',' << fmt(r.l1_error) << ',' << fmt(r.weak_k0_error) << ',' << fmt(r.phistar_error) << '\n';
}

std::string d_samples_json(const std::vector<DSample>& samples) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : samples) arr.push_back({{"z", pair(s.z)}, {"D", pair(s.D)}});
  return nlohmann::json{{"samples", arr}}.dump();
}

void write_d_samples_csv(std::ostream& os, const std::vector<DSample>& samples) {
  os << "z_re,z_im,D_re,D_im\n";
  for (const auto& s : samples)
    os << fmt(s.z.real()) << ',' << fmt(s.z.imag()) << ',' << fmt(s.D.real()) << ',' << fmt(s.D.imag()) << '\n';
}

void write_recurrence_csv(std::ostream& os, const GenJacobiSystem& sys) {
  os << "n,b_n,c_n,delta_n\n";
  for (std::size_t i = 0; i < sys.b.size(); ++i) {
    os << i + 1 << ',' << fmt(sys.b[i]) << ',';
    if (i < sys.c.size()) os << fmt(sys.c[i]);
    os << ',' << (i < sys.delta.size() ? sys.delta[i] : 0) << '\n';
  }
}

void write_P_csv(std::ostream& os, const std::vector<RealPoly>& P) {
  os << "n,power,coeff\n";
  for (std::size_t n = 0; n < P.size(); ++n)
    for (std::size_t k = 0; k < P[n].size(); ++k) os << n << ',' << k << ',' << fmt(P[n][k]) << '\n';
}

}  // namespace opxlab::io
