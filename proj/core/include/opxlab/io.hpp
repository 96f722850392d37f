#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "opxlab/coeffs.hpp"
#include "opxlab/poly.hpp"
#include "opxlab/schur.hpp"
#include "opxlab/szegofn.hpp"
#include "opxlab/szegomap.hpp"

namespace opxlab::io {

/// Round-trip formatting of a double (17 significant digits).
std::string fmt(double v);

/// {"alphas": [[re,im],...], "tail": {"type": "zero"|"geronimus"|"truncate", ...}}
/// or {"preset": NAME, "params": {...}}. Throws Parse / validation errors.
VerblunskySequence parse_sequence_json(const std::string& text);
VerblunskySequence load_sequence(const std::string& path);
std::string sequence_to_json(const VerblunskySequence& seq);

/// n,kind,coeff_index,re,im,omega_n,epsilon_n; kind ∈ phi|phi_star|psi|psi_star.
void write_chain_csv(std::ostream& os, const PolynomialChain& phi, const PolynomialChain& psi,
                     const SignedWeights& w);

/// theta,reF
void write_boundary_csv(std::ostream& os, const BoundaryFunction& bf);

/// {"coefficients": [[re,im],...]}
std::string maclaurin_json(const std::vector<cplx>& coeffs);

/// n,l1_error,weak_k0_error,phistar_error_at_z
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

struct DSample {
  cplx z;
  cplx D;
};
/// {"samples": [{"z": [re,im], "D": [re,im]}, ...]}
std::string d_samples_json(const std::vector<DSample>& samples);
/// z_re,z_im,D_re,D_im
void write_d_samples_csv(std::ostream& os, const std::vector<DSample>& samples);

/// n,b_n,c_n,delta_n
void write_recurrence_csv(std::ostream& os, const GenJacobiSystem& sys);
/// n,power,coeff
void write_P_csv(std::ostream& os, const std::vector<RealPoly>& P);

}  // namespace opxlab::io
