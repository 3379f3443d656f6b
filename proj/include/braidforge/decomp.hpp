#pragma once

#include "braidforge/group.hpp"
#include "braidforge/report.hpp"
#include "braidforge/reps.hpp"

namespace braidforge {

inline constexpr std::size_t kDefaultCommutantCap = 64;

/// Trace of rep_of_element(spec, g).
Complex character(const RepSpec& spec, const GroupElement& g);

/// <chi, chi_rho1> over all of E_m, with chi_rho1(+-1) = +-2^{m/2} and zero
/// elsewhere. DomainError for odd m.
std::size_t multiplicity_rho1(const RepSpec& spec);

/// |chi(g)| for every noncentral g of E_m.
VerificationReport noncentral_characters_vanish(const RepSpec& spec,
                                                double tol = kDefaultTolerance);

/// dim {A : A phi(e_i) = phi(e_i) A for all i}. The linear system splits
/// into independent blocks along orbits of matrix positions; each block's
/// nullity comes from an SVD with singular values below 1e-8 * max treated
/// as zero. SizeError above cap.
std::size_t commutant_dimension(const RepSpec& spec, std::size_t cap = kDefaultCommutantCap);

/// Nullity of the full stacked system (phi^T (x) 1 - 1 (x) phi) vec(A) = 0.
std::size_t commutant_dimension_dense(const RepSpec& spec, std::size_t cap = 16);

struct DecompositionPrediction {
  int strands = 0;
  std::size_t dim = 0;
  bool odd = true;
  /// d = dim / 2^{(n-1)/2} for odd n, dim / 2^{n/2} for even n.
  std::size_t multiplicity = 0;
  /// Class-specific closed form of d: k^n 2^{(n+1)/2} or 2^{N+k(n-2)-(n-1)/2}
  /// for odd n; equal to multiplicity for even n.
  std::size_t closed_form = 0;
  /// d^2 for odd n, 2 d^2 for even n.
  std::size_t commutant = 0;
};

DecompositionPrediction predict(const RepSpec& spec);

/// Predicted multiplicities against the character count (odd n), the closed
/// forms, and the commutant dimension when dim <= cap.
VerificationReport verify_decomposition(const RepSpec& spec,
                                        std::size_t cap = kDefaultCommutantCap);

}  // namespace braidforge
