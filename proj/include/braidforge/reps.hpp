#pragma once

#include <optional>
#include <vector>

#include "braidforge/group.hpp"
#include "braidforge/monomial.hpp"
#include "braidforge/report.hpp"

namespace braidforge {

// Class-1 single-factor indexing: a factor of dimension 2k carries the labels
// J, J-1, ..., -J with J = k - 1/2. Position p (0-based) holds label J - p,
// so positions 0..k-1 are the positive labels and the paired label of
// position p sits at 2k-1-p.

/// Sign function with eps(p) * eps(pair(p)) = -1.
class SignConvention {
 public:
  SignConvention() = default;
  explicit SignConvention(std::vector<int> eps);

  /// +1 on positive labels, -1 on negative labels.
  static SignConvention standard(int k);

  int k() const { return static_cast<int>(eps_.size() / 2); }
  int operator()(std::size_t position) const { return eps_[position]; }
  const std::vector<int>& values() const { return eps_; }

  friend bool operator==(const SignConvention&, const SignConvention&) = default;

 private:
  std::vector<int> eps_;
};

/// Deformation parameters q_{ij} over label positions of a 2k-dimensional
/// factor. Separable parameter sets also remember the per-label q_i.
class PhaseParams {
 public:
  PhaseParams() = default;

  /// General 2k x 2k table, row-major over (i, j) positions.
  PhaseParams(int k, std::vector<Complex> table);

  static PhaseParams trivial(int k);

  /// q_{ij} = q_i q_j from per-label values ordered J, ..., -J.
  static PhaseParams separable(std::vector<Complex> per_label);

  /// q_i = exp(i phi_i / 2), q_{-i} = exp(-i phi_i / 2); phi ordered J, ..., 1/2.
  static PhaseParams from_angles(const std::vector<double>& phi);

  int k() const { return k_; }
  std::size_t factor_dim() const { return 2 * static_cast<std::size_t>(k_); }
  Complex q(std::size_t i, std::size_t j) const { return table_[i * factor_dim() + j]; }
  const std::vector<Complex>& table() const { return table_; }
  const std::optional<std::vector<Complex>>& per_label() const { return per_label_; }

 private:
  int k_ = 0;
  std::vector<Complex> table_;
  std::optional<std::vector<Complex>> per_label_;
};

enum class RepClass { one = 1, two = 2 };

/// Parameters selecting a representation of E_m.
struct RepSpec {
  RepClass rep_class = RepClass::two;
  int m = 1;
  int k = 1;  // Class 1: half factor dimension. Class 2: stride exponent.
  int N = 2;  // Class 2 block exponent.
  PhaseParams phases;    // Class 1 only
  SignConvention signs;  // Class 1 only

  static RepSpec class1(int m, int k, std::optional<PhaseParams> phases = std::nullopt,
                        std::optional<SignConvention> signs = std::nullopt);
  static RepSpec class2(int m, int N, int k);

  /// Class 1: (2k)^{m+1}. Class 2: 2^{N + k(m-1)}. SizeError beyond the
  /// structured index range.
  std::size_t dimension() const;

  /// Whether the relations are expected to hold: Class 2 needs
  /// 1 <= k <= N-1 and, for m >= 3, N/2 <= k. Class 1 needs the phase
  /// constraints.
  bool admissible() const;

  std::string str() const;
};

enum class Validation { strict, lenient };

/// Single-factor almost-complex structure sum_i eps(i) q_i |i><i-bar|.
MonomialOperator factor_m_prime(const std::vector<Complex>& q, const SignConvention& signs);

/// Single-factor involution sum_j q_j |j><j-bar|.
MonomialOperator factor_p_prime(const std::vector<Complex>& q);

/// M^{JJ} = sum_{ij} eps(i) q_{ij} |ij><i-bar j-bar|, dimension (2k)^2.
/// Strict validation throws ConstraintError naming the failing constraint.
MonomialOperator build_mjj(int k, const PhaseParams& phases, const SignConvention& signs,
                           Validation v = Validation::strict);

/// sqrt(-1) sigma_y (x) sigma_x^{(x) N-1}.
MonomialOperator almost_complex_2n(int N);

/// 1_{2k}^{(x) i-1} (x) M^{JJ} (x) 1_{2k}^{(x) m-i}.
MonomialOperator class1_generator(const RepSpec& spec, int i, Validation v = Validation::strict);

/// 1_{2^k}^{(x) i-1} (x) M_{2^N} (x) 1_{2^k}^{(x) m-i}.
MonomialOperator class2_generator(const RepSpec& spec, int i);

MonomialOperator generator(const RepSpec& spec, int i, Validation v = Validation::strict);
std::vector<MonomialOperator> generators(const RepSpec& spec, Validation v = Validation::strict);

/// Dense Kronecker construction of a generator from Pauli/identity blocks;
/// an independent route used to cross-check the structured builders.
DenseMatrix dense_generator(const RepSpec& spec, int i, std::size_t cap = dense_cap());

/// (E1) squares, (E2) far commutation, (E3) adjacent anticommutation and
/// anti-Hermiticity over all generators.
VerificationReport verify_esp_relations(const RepSpec& spec, const VerifyOptions& opts = {});

/// sign(g) * prod_i phi(e_i)^{a_i} in index order.
MonomialOperator rep_of_element(const RepSpec& spec, const GroupElement& g);
MonomialOperator rep_of_element(const std::vector<MonomialOperator>& gens, const GroupElement& g);

/// rep(a b) = rep(a) rep(b) over all pairs of E_m.
VerificationReport verify_homomorphism(const RepSpec& spec, double tol = kDefaultTolerance);

/// The three Class-1 constraints on q_{ij}.
VerificationReport check_constraints_3constr(const PhaseParams& phases,
                                             double tol = kDefaultTolerance);

/// T_i + T_i T_{i+1} T_i - T_{i+1} - T_{i+1} T_i T_{i+1} = 0 for all i.
VerificationReport check_e3prime(const RepSpec& spec, const VerifyOptions& opts = {});

/// Per-factor diagonal q_i^{1/2} whose tensor power conjugates the q = 1
/// Class-1 generators onto the deformed ones. Requires separable, unimodular
/// phases with q_{i-bar} = conj(q_i).
std::vector<Complex> deformation_basis_change(const PhaseParams& phases);

}  // namespace braidforge
