#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/linalg.hpp"
#include "braidforge/report.hpp"

namespace braidforge {

/// Brute-force subroutines (enumeration, commutators) refuse m above this.
inline constexpr int kEnumerationCap = 10;
inline constexpr int kMaxGenerators = 62;

/// Element +-e_1^{a_1} ... e_m^{a_m} of E_m in normal form. Bit i-1 of
/// exponents holds a_i.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(int m, int sign, std::uint64_t exponents);

  static GroupElement identity(int m) { return {m, 1, 0}; }
  static GroupElement minus_identity(int m) { return {m, -1, 0}; }
  /// e_i, 1-based.
  static GroupElement generator(int m, int i);

  int m() const { return m_; }
  int sign() const { return sign_; }
  std::uint64_t exponents() const { return exps_; }
  bool exponent(int i) const { return (exps_ >> (i - 1)) & 1u; }

  GroupElement inverse() const;
  GroupElement negated() const { return {m_, -sign_, exps_}; }
  bool is_identity() const { return sign_ == 1 && exps_ == 0; }

  /// Same element viewed in E_{m'} for m' >= m.
  GroupElement embedded(int m_prime) const;

  /// "1", "-1", "e1*e3", "-e2" style.
  std::string str() const;
  static GroupElement parse(std::string_view text, int m);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b)
  {
    if (a.exps_ != b.exps_)
      return a.exps_ <=> b.exps_;
    return a.sign_ <=> b.sign_;
  }

 private:
  int m_ = 0;
  int sign_ = 1;
  std::uint64_t exps_ = 0;
};

/// Normal form of a*b. Moving e^beta left through e^alpha picks up
/// (-1)^S with S = sum_i beta_i alpha_{i+1} + sum_i alpha_i beta_i.
GroupElement multiply(const GroupElement& a, const GroupElement& b);

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return multiply(a, b); }

GroupElement commutator(const GroupElement& a, const GroupElement& b);

/// Smallest n >= 1 with g^n = 1.
int element_order(const GroupElement& g);

/// 2^{m+1}.
std::uint64_t order(int m);

/// All 2^{m+1} elements, sorted.
std::vector<GroupElement> enumerate(int m);

/// Closure of {e_1, ..., e_m} under multiply, for cross-checking order().
std::vector<GroupElement> enumerate_by_closure(int m);

enum class CenterIso { z2, z2xz2, z4 };
std::string to_string(CenterIso iso);

struct CenterDescription {
  std::vector<GroupElement> elements;
  CenterIso iso_class = CenterIso::z2;
};

CenterDescription center(int m);

/// Brute-force center: elements commuting with every generator.
std::vector<GroupElement> center_by_enumeration(int m);

/// Set of all commutators a b a^-1 b^-1, brute force over pairs.
std::vector<GroupElement> commutator_subgroup(int m);

/// Order by closure, center against brute force, commutator subgroup.
VerificationReport verify_group_structure(int m);

}  // namespace braidforge
