#pragma once

#include <cmath>
#include <utility>

#include "braidforge/braid.hpp"
#include "braidforge/monomial.hpp"
#include "braidforge/report.hpp"

namespace braidforge {

/// M^2 = -1 and M^dagger = -M, exactly up to tol.
bool is_almost_complex(const MonomialOperator& m, double tol = kDefaultTolerance);

/// R(x) = ((1 + x) 1 + (1 - x) M) / sqrt2. DomainError unless M is almost complex.
TwoBandOperator r_of_x(const MonomialOperator& m, double x);

/// B + x B^-1 with B = (1 + M)/sqrt2, built densely.
DenseMatrix r_of_x_dense(const MonomialOperator& m, double x, std::size_t cap = dense_cap());

/// rho(x) = 1 + x^2.
inline double rho(double x) { return 1.0 + x * x; }

/// rho^{-1/2} R(x).
TwoBandOperator unitary_r(const MonomialOperator& m, double x);

/// cos(pi/4 - theta) 1 + sin(pi/4 - theta) M = exp((pi/4 - theta) M).
TwoBandOperator b_of_theta(const MonomialOperator& m, double theta);

/// exp(-theta' M) = cos(theta') 1 - sin(theta') M.
TwoBandOperator b_of_theta_prime(const MonomialOperator& m, double theta_prime);

inline double theta_from_x(double x) { return std::atan(x); }
inline double x_from_theta(double theta) { return std::tan(theta); }
inline double theta_prime_from_theta(double theta) { return theta - kPi / 4; }
inline double theta_from_theta_prime(double theta_prime) { return theta_prime + kPi / 4; }

/// H = -sqrt(-1) M.
MonomialOperator hamiltonian_monomial(const MonomialOperator& m);
DenseMatrix hamiltonian(const MonomialOperator& m, std::size_t cap = dense_cap());

/// H(x) = -sqrt(-1) M / (1 + x^2).
DenseMatrix time_dependent_hamiltonian(const MonomialOperator& m, double x,
                                       std::size_t cap = dense_cap());

/// B_{2^N}(theta') |Phi_l> with the Class-2 almost-complex structure.
StateVector evolve(int qubits, double theta_prime, std::size_t l);

/// cos(theta') |Phi_l> - sin(theta') eps'(m_1) |Phi_lbar>.
StateVector evolve_closed_form(int qubits, double theta_prime, std::size_t l);

/// evolve against its closed form, plus norm preservation.
VerificationReport verify_evolution(int qubits, double theta_prime, std::size_t l,
                                    double tol = kDefaultTolerance);

/// B^{JJ}(theta') |alpha> on 2n qubits with J = 2^{n-1} - 1/2 and q = 1.
StateVector evolve_class1(int qubits, double theta_prime, std::size_t alpha);

/// R_i(x) R_{i+1}(xy) R_i(y) = R_{i+1}(y) R_i(xy) R_{i+1}(x) for every i,
/// each side also compared with its expanded closed form.
VerificationReport verify_qybe(const BraidRep& rep, double x, double y,
                               const VerifyOptions& opts = {});

/// Same relation for R_i(t) = 1 + tanh(t) phi(e_i) with additive parameters.
VerificationReport verify_qybe_additive(const BraidRep& rep, double theta1, double theta2,
                                        const VerifyOptions& opts = {});

/// Residual of (B - zeta)(B - zeta*) with zeta = exp(i pi/4) for
/// B = (1 + M)/sqrt2, plus the eigenvalue multiplicity split.
VerificationReport characteristic_check(const MonomialOperator& m, const VerifyOptions& opts = {});

/// Multiplicities of exp(i pi/4) and exp(-i pi/4) in (1 + M)/sqrt2, from the trace.
std::pair<std::size_t, std::size_t> eigen_multiplicities(const MonomialOperator& m);

}  // namespace braidforge
