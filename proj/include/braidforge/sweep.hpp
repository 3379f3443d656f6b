#pragma once

#include <string>
#include <variant>
#include <vector>

#include "braidforge/monomial.hpp"
#include "braidforge/report.hpp"

namespace braidforge {

/// alpha * 1 + beta * M without materializing the two-band matrix.
struct IdentityPlus {
  Complex alpha;
  Complex beta;
  const MonomialOperator* m;
};

/// Non-owning reference to a structured operator; the referent must outlive
/// every expression that holds it.
class Factor {
 public:
  Factor(const MonomialOperator& m) : ref_(&m) {}
  Factor(const TwoBandOperator& b) : ref_(&b) {}
  Factor(IdentityPlus ip) : ref_(ip) {}

  std::size_t dim() const;
  SparseColumn apply(const SparseColumn& v) const;
  DenseMatrix to_dense(std::size_t cap) const;

 private:
  std::variant<const MonomialOperator*, const TwoBandOperator*, IdentityPlus> ref_;
};

/// Sum of coefficient * (F1 F2 ... Fk) over terms. An empty factor list is
/// the identity.
class OperatorExpr {
 public:
  explicit OperatorExpr(std::size_t dim) : dim_(dim) {}
  OperatorExpr(std::size_t dim, std::vector<Factor> product);

  OperatorExpr& add(Complex coefficient, std::vector<Factor> factors);

  std::size_t dim() const { return dim_; }

  /// Column j (0-based) of the expression, computed by structured application.
  SparseColumn column(Index j) const;
  DenseMatrix to_dense(std::size_t cap) const;

 private:
  struct Term {
    Complex coefficient;
    std::vector<Factor> factors;
  };
  std::size_t dim_;
  std::vector<Term> terms_;
};

/// Entrywise comparison of two expressions over every basis column
/// (structured engine) or on materialized matrices (dense engine).
CheckResult compare_operators(std::string name, const OperatorExpr& lhs, const OperatorExpr& rhs,
                              const VerifyOptions& opts);

}  // namespace braidforge
