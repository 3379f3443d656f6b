#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "braidforge/linalg.hpp"

namespace braidforge {

/// Signed-permutation-with-phase matrix: column j has its single nonzero
/// phase(j) in row target(j). Targets are stored 0-based; the JSON form uses
/// 1-based rows.
class MonomialOperator {
 public:
  MonomialOperator() = default;

  /// Validates that target is a permutation and every phase is unimodular.
  MonomialOperator(std::vector<Index> target, std::vector<Complex> phase);

  static MonomialOperator identity(std::size_t dim);

  /// Extracts the monomial pattern of a dense matrix; entries with modulus
  /// below tol count as zero. Throws DomainError if the matrix is not monomial.
  static MonomialOperator from_dense(const DenseMatrix& m, double tol = 1e-9);

  std::size_t dim() const { return target_.size(); }
  Index target(std::size_t col) const { return target_[col]; }
  Complex phase(std::size_t col) const { return phase_[col]; }
  std::span<const Index> targets() const { return target_; }
  std::span<const Complex> phases() const { return phase_; }

  /// Conjugate transpose, which is also the inverse.
  MonomialOperator adjoint() const;
  MonomialOperator scaled(Complex unimodular) const;
  Complex trace() const;

  /// D P D^dagger for a unitary diagonal D.
  MonomialOperator conjugated_by_diagonal(std::span<const Complex> diag) const;

  friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;

 private:
  struct Unchecked {};
  MonomialOperator(Unchecked, std::vector<Index> target, std::vector<Complex> phase)
      : target_(std::move(target)), phase_(std::move(phase))
  {
  }

  std::vector<Index> target_;
  std::vector<Complex> phase_;

  friend MonomialOperator monomial_kron(const MonomialOperator&, const MonomialOperator&);
  friend MonomialOperator monomial_compose(const MonomialOperator&, const MonomialOperator&);
};

MonomialOperator monomial_kron(const MonomialOperator& p, const MonomialOperator& q);

/// Tensor product of a list of factors, left to right.
MonomialOperator monomial_kron(std::span<const MonomialOperator> factors);

/// Matrix product P * Q.
MonomialOperator monomial_compose(const MonomialOperator& p, const MonomialOperator& q);

/// P * v in time linear in dim.
StateVector monomial_apply(const MonomialOperator& p, const StateVector& v);

DenseMatrix monomial_to_dense(const MonomialOperator& p, std::size_t cap = dense_cap());

/// Exact entrywise max |P - Q|, with the worst location.
Comparison max_difference(const MonomialOperator& p, const MonomialOperator& q,
                          double tol = kDefaultTolerance);

inline MonomialOperator operator*(const MonomialOperator& p, const MonomialOperator& q)
{
  return monomial_compose(p, q);
}

struct BandEntry {
  Index row = 0;
  Complex value{};
};

/// Operator with at most two nonzeros per column, typically alpha*1 + beta*M
/// for a monomial M.
class TwoBandOperator {
 public:
  TwoBandOperator() = default;
  explicit TwoBandOperator(const MonomialOperator& m);

  /// alpha * 1 + beta * M. Exact zeros are dropped; a fixed point of M
  /// merges into a single diagonal entry.
  static TwoBandOperator identity_plus(Complex alpha, Complex beta, const MonomialOperator& m);

  std::size_t dim() const { return count_.size(); }
  std::span<const BandEntry> column(std::size_t j) const
  {
    return {entries_.data() + 2 * j, count_[j]};
  }

  StateVector apply(const StateVector& v) const;
  DenseMatrix to_dense(std::size_t cap = dense_cap()) const;

 private:
  std::vector<BandEntry> entries_;  // two slots per column
  std::vector<std::uint8_t> count_;
};

/// Sparse column vector used for exact basis sweeps.
class SparseColumn {
 public:
  using Entry = std::pair<Index, Complex>;

  SparseColumn() = default;
  static SparseColumn basis(Index j) { return SparseColumn({{j, Complex(1.0)}}); }

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  SparseColumn& operator+=(const SparseColumn& other);
  SparseColumn scaled(Complex c) const;

  friend SparseColumn apply(const MonomialOperator& p, const SparseColumn& v);
  friend SparseColumn apply(const TwoBandOperator& b, const SparseColumn& v);
  friend SparseColumn apply_identity_plus(Complex alpha, Complex beta, const MonomialOperator& m,
                                          const SparseColumn& v);

 private:
  explicit SparseColumn(std::vector<Entry> e) : entries_(std::move(e)) {}
  void normalize();

  std::vector<Entry> entries_;  // sorted by row, unique
};

SparseColumn apply(const MonomialOperator& p, const SparseColumn& v);
SparseColumn apply(const TwoBandOperator& b, const SparseColumn& v);
SparseColumn apply_identity_plus(Complex alpha, Complex beta, const MonomialOperator& m,
                                 const SparseColumn& v);

/// max |a - b| over all rows; worst_row receives the maximizing row.
double max_difference(const SparseColumn& a, const SparseColumn& b, Index* worst_row = nullptr,
                      Complex* a_value = nullptr, Complex* b_value = nullptr);

}  // namespace braidforge
