#include "braidforge/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace braidforge {

namespace {

constexpr double kUnimodularTol = 1e-12;

void check_dim(std::size_t dim)
{
  if (dim > kMaxStructuredDim)
    throw SizeError("monomial dimension " + std::to_string(dim) + " exceeds index range");
}

}  // namespace

MonomialOperator::MonomialOperator(std::vector<Index> target, std::vector<Complex> phase)
    : target_(std::move(target)), phase_(std::move(phase))
{
  if (target_.size() != phase_.size())
    throw DimensionError("monomial: target and phase lengths differ");
  check_dim(target_.size());
  std::vector<bool> seen(target_.size(), false);
  for (std::size_t j = 0; j < target_.size(); ++j) {
    const Index t = target_[j];
    if (t >= target_.size() || seen[t])
      throw DomainError("monomial: target is not a permutation (column " + std::to_string(j + 1) +
                        ")");
    seen[t] = true;
    if (std::abs(std::abs(phase_[j]) - 1.0) > kUnimodularTol)
      throw DomainError("monomial: phase of column " + std::to_string(j + 1) +
                        " is not unimodular");
  }
}

MonomialOperator MonomialOperator::identity(std::size_t dim)
{
  check_dim(dim);
  std::vector<Index> t(dim);
  for (std::size_t j = 0; j < dim; ++j)
    t[j] = static_cast<Index>(j);
  return MonomialOperator(Unchecked{}, std::move(t), std::vector<Complex>(dim, Complex(1.0)));
}

MonomialOperator MonomialOperator::from_dense(const DenseMatrix& m, double tol)
{
  if (m.rows() != m.cols())
    throw DimensionError("from_dense: matrix is not square");
  const std::size_t dim = m.rows();
  std::vector<Index> t(dim);
  std::vector<Complex> ph(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t nonzeros = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(m(i, j)) > tol) {
        ++nonzeros;
        t[j] = static_cast<Index>(i);
        ph[j] = m(i, j);
      }
    }
    if (nonzeros != 1)
      throw DomainError("from_dense: column " + std::to_string(j + 1) + " has " +
                        std::to_string(nonzeros) + " nonzeros");
  }
  return MonomialOperator(std::move(t), std::move(ph));
}

MonomialOperator MonomialOperator::adjoint() const
{
  std::vector<Index> t(dim());
  std::vector<Complex> ph(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    t[target_[j]] = static_cast<Index>(j);
    ph[target_[j]] = std::conj(phase_[j]);
  }
  return MonomialOperator(Unchecked{}, std::move(t), std::move(ph));
}

MonomialOperator MonomialOperator::scaled(Complex unimodular) const
{
  if (std::abs(std::abs(unimodular) - 1.0) > kUnimodularTol)
    throw DomainError("monomial: scale factor is not unimodular");
  std::vector<Complex> ph(phase_);
  for (auto& p : ph)
    p *= unimodular;
  return MonomialOperator(Unchecked{}, target_, std::move(ph));
}

Complex MonomialOperator::trace() const
{
  Complex tr{};
  for (std::size_t j = 0; j < dim(); ++j)
    if (target_[j] == j)
      tr += phase_[j];
  return tr;
}

MonomialOperator MonomialOperator::conjugated_by_diagonal(std::span<const Complex> diag) const
{
  if (diag.size() != dim())
    throw DimensionError("conjugated_by_diagonal: dimension mismatch");
  std::vector<Complex> ph(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    ph[j] = diag[target_[j]] * phase_[j] * std::conj(diag[j]);
  return MonomialOperator(target_, std::move(ph));
}

MonomialOperator monomial_kron(const MonomialOperator& p, const MonomialOperator& q)
{
  const std::size_t dp = p.dim();
  const std::size_t dq = q.dim();
  if (dq != 0 && dp > kMaxStructuredDim / dq)
    throw SizeError("monomial_kron: dimension overflow");
  const std::size_t dim = dp * dq;
  std::vector<Index> t(dim);
  std::vector<Complex> ph(dim);
  for (std::size_t a = 0; a < dp; ++a) {
    const std::size_t row_base = static_cast<std::size_t>(p.target_[a]) * dq;
    const Complex pa = p.phase_[a];
    for (std::size_t b = 0; b < dq; ++b) {
      t[a * dq + b] = static_cast<Index>(row_base + q.target_[b]);
      ph[a * dq + b] = pa * q.phase_[b];
    }
  }
  return MonomialOperator(MonomialOperator::Unchecked{}, std::move(t), std::move(ph));
}

MonomialOperator monomial_kron(std::span<const MonomialOperator> factors)
{
  if (factors.empty())
    return MonomialOperator::identity(1);
  MonomialOperator out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = monomial_kron(out, factors[i]);
  return out;
}

MonomialOperator monomial_compose(const MonomialOperator& p, const MonomialOperator& q)
{
  if (p.dim() != q.dim())
    throw DimensionError("monomial_compose: dimension mismatch");
  std::vector<Index> t(q.dim());
  std::vector<Complex> ph(q.dim());
  for (std::size_t j = 0; j < q.dim(); ++j) {
    const Index mid = q.target_[j];
    t[j] = p.target_[mid];
    ph[j] = p.phase_[mid] * q.phase_[j];
  }
  return MonomialOperator(MonomialOperator::Unchecked{}, std::move(t), std::move(ph));
}

StateVector monomial_apply(const MonomialOperator& p, const StateVector& v)
{
  if (static_cast<std::size_t>(v.size()) != p.dim())
    throw DimensionError("monomial_apply: dimension mismatch");
  StateVector out(v.size());
  for (std::size_t j = 0; j < p.dim(); ++j)
    out(p.target(j)) = p.phase(j) * v(j);
  return out;
}

DenseMatrix monomial_to_dense(const MonomialOperator& p, std::size_t cap)
{
  require_dense(p.dim(), cap, "monomial_to_dense");
  DenseMatrix out = DenseMatrix::Zero(p.dim(), p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j)
    out(p.target(j), j) = p.phase(j);
  return out;
}

Comparison max_difference(const MonomialOperator& p, const MonomialOperator& q, double tol)
{
  if (p.dim() != q.dim())
    throw DimensionError("max_difference: dimension mismatch");
  Comparison c;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    double e;
    std::size_t row;
    if (p.target(j) == q.target(j)) {
      e = std::abs(p.phase(j) - q.phase(j));
      row = p.target(j);
    } else {
      // disjoint supports in this column
      e = std::max(std::abs(p.phase(j)), std::abs(q.phase(j)));
      row = p.target(j);
    }
    if (e > c.max_error) {
      c.max_error = e;
      c.row = row;
      c.col = j;
    }
  }
  c.equal = c.max_error <= tol;
  return c;
}

TwoBandOperator::TwoBandOperator(const MonomialOperator& m)
    : entries_(2 * m.dim()), count_(m.dim(), 1)
{
  for (std::size_t j = 0; j < m.dim(); ++j)
    entries_[2 * j] = {m.target(j), m.phase(j)};
}

TwoBandOperator TwoBandOperator::identity_plus(Complex alpha, Complex beta,
                                               const MonomialOperator& m)
{
  TwoBandOperator out;
  out.entries_.resize(2 * m.dim());
  out.count_.assign(m.dim(), 0);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const Index diag = static_cast<Index>(j);
    BandEntry* slot = &out.entries_[2 * j];
    std::uint8_t n = 0;
    if (m.target(j) == diag) {
      const Complex v = alpha + beta * m.phase(j);
      if (v != Complex(0.0))
        slot[n++] = {diag, v};
    } else {
      // rows kept in increasing order
      BandEntry d{diag, alpha};
      BandEntry o{m.target(j), beta * m.phase(j)};
      if (o.row < d.row)
        std::swap(d, o);
      if (d.value != Complex(0.0))
        slot[n++] = d;
      if (o.value != Complex(0.0))
        slot[n++] = o;
    }
    out.count_[j] = n;
  }
  return out;
}

StateVector TwoBandOperator::apply(const StateVector& v) const
{
  if (static_cast<std::size_t>(v.size()) != dim())
    throw DimensionError("TwoBandOperator::apply: dimension mismatch");
  StateVector out = StateVector::Zero(v.size());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const BandEntry& e : column(j))
      out(e.row) += e.value * v(j);
  return out;
}

DenseMatrix TwoBandOperator::to_dense(std::size_t cap) const
{
  require_dense(dim(), cap, "TwoBandOperator::to_dense");
  DenseMatrix out = DenseMatrix::Zero(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const BandEntry& e : column(j))
      out(e.row, j) += e.value;
  return out;
}

void SparseColumn::normalize()
{
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < entries_.size(); ++r) {
    if (w > 0 && entries_[w - 1].first == entries_[r].first)
      entries_[w - 1].second += entries_[r].second;
    else
      entries_[w++] = entries_[r];
  }
  entries_.resize(w);
}

SparseColumn& SparseColumn::operator+=(const SparseColumn& other)
{
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  normalize();
  return *this;
}

SparseColumn SparseColumn::scaled(Complex c) const
{
  SparseColumn out(entries_);
  for (auto& e : out.entries_)
    e.second *= c;
  return out;
}

SparseColumn apply(const MonomialOperator& p, const SparseColumn& v)
{
  std::vector<SparseColumn::Entry> out;
  out.reserve(v.size());
  for (const auto& [j, x] : v.entries_)
    out.emplace_back(p.target(j), p.phase(j) * x);
  SparseColumn r(std::move(out));
  r.normalize();
  return r;
}

SparseColumn apply(const TwoBandOperator& b, const SparseColumn& v)
{
  std::vector<SparseColumn::Entry> out;
  out.reserve(2 * v.size());
  for (const auto& [j, x] : v.entries_)
    for (const BandEntry& e : b.column(j))
      out.emplace_back(e.row, e.value * x);
  SparseColumn r(std::move(out));
  r.normalize();
  return r;
}

SparseColumn apply_identity_plus(Complex alpha, Complex beta, const MonomialOperator& m,
                                 const SparseColumn& v)
{
  std::vector<SparseColumn::Entry> out;
  out.reserve(2 * v.size());
  for (const auto& [j, x] : v.entries_) {
    out.emplace_back(j, alpha * x);
    out.emplace_back(m.target(j), beta * m.phase(j) * x);
  }
  SparseColumn r(std::move(out));
  r.normalize();
  return r;
}

double max_difference(const SparseColumn& a, const SparseColumn& b, Index* worst_row,
                      Complex* a_value, Complex* b_value)
{
  double worst = 0.0;
  auto note = [&](Index row, Complex x, Complex y) {
    const double e = std::abs(x - y);
    if (e > worst) {
      worst = e;
      if (worst_row)
        *worst_row = row;
      if (a_value)
        *a_value = x;
      if (b_value)
        *b_value = y;
    }
  };
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      note(ea[i].first, ea[i].second, Complex{});
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      note(eb[j].first, Complex{}, eb[j].second);
      ++j;
    } else {
      note(ea[i].first, ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
  return worst;
}

}  // namespace braidforge
