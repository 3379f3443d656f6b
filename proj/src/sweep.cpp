#include "braidforge/sweep.hpp"

namespace braidforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::size_t Factor::dim() const
{
  return std::visit(overloaded{[](const MonomialOperator* m) { return m->dim(); },
                               [](const TwoBandOperator* b) { return b->dim(); },
                               [](const IdentityPlus& ip) { return ip.m->dim(); }},
                    ref_);
}

SparseColumn Factor::apply(const SparseColumn& v) const
{
  return std::visit(
      overloaded{[&](const MonomialOperator* m) { return braidforge::apply(*m, v); },
                 [&](const TwoBandOperator* b) { return braidforge::apply(*b, v); },
                 [&](const IdentityPlus& ip) {
                   return apply_identity_plus(ip.alpha, ip.beta, *ip.m, v);
                 }},
      ref_);
}

DenseMatrix Factor::to_dense(std::size_t cap) const
{
  return std::visit(overloaded{[&](const MonomialOperator* m) { return monomial_to_dense(*m, cap); },
                               [&](const TwoBandOperator* b) { return b->to_dense(cap); },
                               [&](const IdentityPlus& ip) {
                                 DenseMatrix d = ip.beta * monomial_to_dense(*ip.m, cap);
                                 d.diagonal().array() += ip.alpha;
                                 return d;
                               }},
                    ref_);
}

OperatorExpr::OperatorExpr(std::size_t dim, std::vector<Factor> product) : dim_(dim)
{
  add(1.0, std::move(product));
}

OperatorExpr& OperatorExpr::add(Complex coefficient, std::vector<Factor> factors)
{
  for (const Factor& f : factors)
    if (f.dim() != dim_)
      throw DimensionError("operator expression: factor dimension " + std::to_string(f.dim()) +
                           " does not match " + std::to_string(dim_));
  terms_.push_back({coefficient, std::move(factors)});
  return *this;
}

SparseColumn OperatorExpr::column(Index j) const
{
  SparseColumn acc;
  for (const Term& t : terms_) {
    SparseColumn v = SparseColumn::basis(j);
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
      v = it->apply(v);
    acc += v.scaled(t.coefficient);
  }
  return acc;
}

DenseMatrix OperatorExpr::to_dense(std::size_t cap) const
{
  require_dense(dim_, cap, "operator expression");
  DenseMatrix acc = DenseMatrix::Zero(dim_, dim_);
  for (const Term& t : terms_) {
    DenseMatrix p = DenseMatrix::Identity(dim_, dim_);
    for (const Factor& f : t.factors)
      p = p * f.to_dense(cap);
    acc += t.coefficient * p;
  }
  return acc;
}

CheckResult compare_operators(std::string name, const OperatorExpr& lhs, const OperatorExpr& rhs,
                              const VerifyOptions& opts)
{
  if (lhs.dim() != rhs.dim())
    throw DimensionError("compare_operators: dimension mismatch");

  double worst = 0.0;
  Witness w;
  if (opts.engine == Engine::dense) {
    const DenseMatrix a = lhs.to_dense(opts.dense_cap);
    const DenseMatrix b = rhs.to_dense(opts.dense_cap);
    const Comparison c = approx_eq(a, b, opts.tolerance);
    worst = c.max_error;
    w = {c.row + 1, c.col + 1, a(c.row, c.col), b(c.row, c.col), {}};
  } else {
    for (std::size_t j = 0; j < lhs.dim(); ++j) {
      const SparseColumn a = lhs.column(static_cast<Index>(j));
      const SparseColumn b = rhs.column(static_cast<Index>(j));
      Index row = 0;
      Complex x{}, y{};
      const double e = max_difference(a, b, &row, &x, &y);
      if (e > worst) {
        worst = e;
        w = {static_cast<std::size_t>(row) + 1, j + 1, x, y, {}};
      }
    }
  }
  return CheckResult::from_error(std::move(name), worst, opts.tolerance, w);
}

}  // namespace braidforge
