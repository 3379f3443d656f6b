#pragma once

#include <vector>

#include "braidforge/monomial.hpp"
#include "braidforge/report.hpp"

namespace braidforge {

/// Spin projection m = +1/2 or -1/2, stored as twice its value.
enum class Spin : int { up = 1, down = -1 };

inline double value(Spin s) { return 0.5 * static_cast<int>(s); }
inline Spin flipped(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

/// eps'(1/2) = -1, eps'(-1/2) = +1.
inline int epsilon_prime(Spin s) { return s == Spin::up ? -1 : 1; }

/// |m_1, ..., m_N>; the first spin is the most significant qubit.
using SpinWord = std::vector<Spin>;

/// k = 2^{N-1} + 1/2 - sum_i 2^{N-i} m_i, in 1..2^N.
std::size_t basis_index(const SpinWord& w);

/// Inverse of basis_index.
SpinWord spin_word(int qubits, std::size_t k);

/// 2^N - l + 1.
std::size_t conjugate_index(int qubits, std::size_t l);

/// (|Phi_l> + |Phi_lbar>)/sqrt2 for j = l <= 2^{N-1}, (|Phi_l> - |Phi_lbar>)/sqrt2
/// for j = lbar.
StateVector ghz_state(int qubits, std::size_t j);

/// (1 + sqrt(-1) sigma_y (x) sigma_x^{(x) N-1}) / sqrt2.
TwoBandOperator bell_matrix(int qubits);

/// (1 + M^{JJ}) / sqrt2 with J = 2^{n-1} - 1/2 and q = 1, for 2n qubits.
/// DomainError for odd qubit counts or a mismatched k.
TwoBandOperator class1_bell_matrix(int qubits, int k);
TwoBandOperator class1_bell_matrix(int qubits);

enum class BellPath { class2, class1 };

/// Column j of the Bell matrix equals the GHZ state with index 2^N - j + 1,
/// and equals (|Phi_j> + eps'(m_1) |Phi_jbar>)/sqrt2.
VerificationReport verify_ghz_columns(int qubits, const VerifyOptions& opts = {},
                                      BellPath path = BellPath::class2);

}  // namespace braidforge
