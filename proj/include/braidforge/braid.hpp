#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/monomial.hpp"
#include "braidforge/reps.hpp"
#include "braidforge/sweep.hpp"

namespace braidforge {

struct BraidLetter {
  int index = 1;     // generator b_index, 1..n-1
  int exponent = 1;  // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// Word in b_1..b_{n-1} and their inverses.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// "b1 b2^-1 b1"; an empty or all-whitespace string is the empty word.
  static BraidWord parse(std::string_view text, int strands);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<BraidLetter> letters_;
};

/// pi_n(b_i) = (1 + phi(e_i)) / sqrt2 for a representation of E_{n-1}.
/// Only the monomials phi(e_i) are stored.
class BraidRep {
 public:
  explicit BraidRep(RepSpec spec);

  const RepSpec& spec() const { return spec_; }
  int strands() const { return spec_.m + 1; }
  std::size_t dim() const { return dim_; }

  /// phi(e_i), 1-based.
  const MonomialOperator& phi(int i) const;
  const std::vector<MonomialOperator>& phis() const { return phi_; }

  /// Lazy factor for pi(b_i)^{+-1} = (1 +- phi(e_i)) / sqrt2.
  IdentityPlus factor(int i, int exponent = 1) const;

 private:
  RepSpec spec_;
  std::size_t dim_ = 0;
  std::vector<MonomialOperator> phi_;
};

/// Materialized pi(b_i)^{exponent}.
TwoBandOperator braid_generator(const BraidRep& rep, int i, int exponent = 1);

/// pi(w) v for w = b_{i1}^{s1} ... b_{ir}^{sr}, i.e. the rightmost letter acts
/// first so that apply_word is a homomorphism B_n -> U(dim).
StateVector apply_word(const BraidRep& rep, const BraidWord& w, const StateVector& v);

DenseMatrix word_matrix(const BraidRep& rep, const BraidWord& w, std::size_t cap = dense_cap());

/// Far commutation, braid relation, unitarity and [pi(b_i)]^2 = phi(e_i).
VerificationReport verify_braid_relations(const BraidRep& rep, const VerifyOptions& opts = {});

/// (R (x) 1_l)(1_l (x) R)(R (x) 1_l) = (1_l (x) R)(R (x) 1_l)(1_l (x) R) on
/// C^{2^{N+k}} with l = 2^k and R = (1 + M_{2^N}) / sqrt2.
VerificationReport verify_gybe(int N, int k, const VerifyOptions& opts = {});

/// pi(b_i) phi(e_j) pi(b_i)^-1 equals phi(e_i) phi(e_j) for |i-j| = 1 and
/// phi(e_j) for |i-j| >= 2.
VerificationReport conjugation_check(const BraidRep& rep, const VerifyOptions& opts = {});

struct CosetCount {
  std::size_t group_order = 0;     // |<pi(b_i)>|
  std::size_t subgroup_order = 0;  // |{+-phi(g)}|
  std::size_t cosets = 0;
};

/// Enumerates the finite group generated by the pi(b_i) as dense matrices
/// and counts its cosets modulo +-phi(E_{n-1}). Throws SizeError when the
/// group grows past max_elements.
CosetCount count_cosets(const BraidRep& rep, std::size_t max_elements = 100000);

/// Group element g with pi(w) phi(e_i) pi(w)^-1 = phi(g), if any.
std::optional<GroupElement> conjugate_in_image(const BraidRep& rep, const BraidWord& w, int i,
                                               double tol = 1e-9);

}  // namespace braidforge
