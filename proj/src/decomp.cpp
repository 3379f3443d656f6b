#include "braidforge/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace braidforge {

namespace {

std::size_t nullity(const DenseMatrix& a)
{
  if (a.rows() == 0)
    return static_cast<std::size_t>(a.cols());
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s(0) : 0.0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-8 * top && top > 0.0)
      ++rank;
  return static_cast<std::size_t>(a.cols()) - rank;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t pow2(int e) { return std::size_t{1} << e; }

}  // namespace

Complex character(const RepSpec& spec, const GroupElement& g)
{
  return rep_of_element(spec, g).trace();
}

std::size_t multiplicity_rho1(const RepSpec& spec)
{
  if (spec.m % 2 != 0)
    throw DomainError("multiplicity_rho1 needs an even number of generators (m=" +
                      std::to_string(spec.m) + "); use commutant_dimension for odd m");
  const auto gens = generators(spec, Validation::lenient);
  const double rho_dim = std::ldexp(1.0, spec.m / 2);
  Complex sum{};
  for (const auto& g : enumerate(spec.m)) {
    const double chi_rho1 = g.exponents() == 0 ? g.sign() * rho_dim : 0.0;
    sum += rep_of_element(gens, g).trace() * chi_rho1;
  }
  const double value = sum.real() / static_cast<double>(order(spec.m));
  return static_cast<std::size_t>(std::llround(value));
}

VerificationReport noncentral_characters_vanish(const RepSpec& spec, double tol)
{
  VerificationReport report;
  report.name = "noncentral-characters " + spec.str();
  report.tolerance = tol;
  ReportTimer timer(report);

  const auto gens = generators(spec, Validation::lenient);
  const auto z = center(spec.m).elements;
  double worst = 0.0;
  Witness w;
  for (const auto& g : enumerate(spec.m)) {
    if (std::find(z.begin(), z.end(), g) != z.end())
      continue;
    const Complex chi = rep_of_element(gens, g).trace();
    if (std::abs(chi) > worst) {
      worst = std::abs(chi);
      w = {0, 0, chi, 0.0, g.str()};
    }
  }
  report.add(CheckResult::from_error("noncentral-vanish", worst, tol, w));
  return report;
}

std::size_t commutant_dimension(const RepSpec& spec, std::size_t cap)
{
  const std::size_t dim = spec.dimension();
  if (dim > cap)
    throw SizeError("commutant_dimension: dimension " + std::to_string(dim) + " exceeds cap " +
                    std::to_string(cap));
  const auto gens = generators(spec, Validation::lenient);
  const std::size_t unknowns = dim * dim;

  // For monomial A with A e_c = a_c e_{t(c)}, entry (r, c) of XA - AX is
  // a_c X[r, t(c)] - a_{s} X[s, c] with s = t^-1(r).
  struct Equation {
    std::size_t u1, u2;
    Complex c1, c2;
  };
  std::vector<Equation> eqs;
  eqs.reserve(gens.size() * unknowns);
  DisjointSets sets(unknowns);
  for (const auto& a : gens) {
    std::vector<Index> inv(dim);
    for (std::size_t c = 0; c < dim; ++c)
      inv[a.target(c)] = static_cast<Index>(c);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t s = inv[r];
      for (std::size_t c = 0; c < dim; ++c) {
        const Equation e{r * dim + a.target(c), s * dim + c, a.phase(c), -a.phase(s)};
        sets.unite(e.u1, e.u2);
        eqs.push_back(e);
      }
    }
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t u = 0; u < unknowns; ++u)
    members[sets.find(u)].push_back(u);
  std::unordered_map<std::size_t, std::vector<const Equation*>> block_eqs;
  for (const auto& e : eqs)
    block_eqs[sets.find(e.u1)].push_back(&e);

  std::size_t total = 0;
  for (const auto& [root, vars] : members) {
    std::unordered_map<std::size_t, Eigen::Index> col;
    for (std::size_t i = 0; i < vars.size(); ++i)
      col[vars[i]] = static_cast<Eigen::Index>(i);
    const auto& rows = block_eqs[root];
    DenseMatrix block = DenseMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                          static_cast<Eigen::Index>(vars.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      block(static_cast<Eigen::Index>(i), col[rows[i]->u1]) += rows[i]->c1;
      block(static_cast<Eigen::Index>(i), col[rows[i]->u2]) += rows[i]->c2;
    }
    total += nullity(block);
  }
  return total;
}

std::size_t commutant_dimension_dense(const RepSpec& spec, std::size_t cap)
{
  const std::size_t dim = spec.dimension();
  if (dim > cap)
    throw SizeError("commutant_dimension_dense: dimension " + std::to_string(dim) +
                    " exceeds cap " + std::to_string(cap));
  const auto n = static_cast<Eigen::Index>(dim);
  const DenseMatrix id = DenseMatrix::Identity(n, n);
  DenseMatrix stacked(static_cast<Eigen::Index>(spec.m) * n * n, n * n);
  for (int i = 1; i <= spec.m; ++i) {
    const DenseMatrix a = dense_generator(spec, i, cap);
    stacked.middleRows(static_cast<Eigen::Index>(i - 1) * n * n, n * n) =
        kron(a.transpose(), id, cap * cap) - kron(id, a, cap * cap);
  }
  return nullity(stacked);
}

DecompositionPrediction predict(const RepSpec& spec)
{
  DecompositionPrediction p;
  p.strands = spec.m + 1;
  p.dim = spec.dimension();
  const int n = p.strands;
  p.odd = n % 2 != 0;
  if (p.odd) {
    p.multiplicity = p.dim / pow2((n - 1) / 2);
    if (spec.rep_class == RepClass::one) {
      std::size_t kn = 1;
      for (int i = 0; i < n; ++i)
        kn *= static_cast<std::size_t>(spec.k);
      p.closed_form = kn * pow2((n + 1) / 2);
    } else {
      p.closed_form = pow2(spec.N + spec.k * (n - 2) - (n - 1) / 2);
    }
    p.commutant = p.multiplicity * p.multiplicity;
  } else {
    p.multiplicity = p.dim / pow2(n / 2);
    p.closed_form = p.multiplicity;
    p.commutant = 2 * p.multiplicity * p.multiplicity;
  }
  return p;
}

VerificationReport verify_decomposition(const RepSpec& spec, std::size_t cap)
{
  VerificationReport report;
  report.name = "decomposition " + spec.str() + " n=" + std::to_string(spec.m + 1);
  report.tolerance = 0.0;
  ReportTimer timer(report);

  const DecompositionPrediction p = predict(spec);
  auto count_check = [&](const std::string& name, std::size_t got, std::size_t want) {
    const double gap = std::abs(static_cast<double>(got) - static_cast<double>(want));
    Witness w{0, 0, static_cast<double>(got), static_cast<double>(want),
              std::to_string(got) + " vs " + std::to_string(want)};
    report.add(CheckResult::from_error(name, gap, 0.0, w));
  };
  if (p.odd) {
    count_check("rho1-multiplicity", multiplicity_rho1(spec), p.multiplicity);
    count_check("closed-form", p.closed_form, p.multiplicity);
  }
  if (p.dim <= cap)
    count_check("commutant-dimension", commutant_dimension(spec, cap), p.commutant);
  if (spec.m <= kEnumerationCap) {
    CheckResult c = noncentral_characters_vanish(spec).checks.front();
    c.tolerance = kDefaultTolerance;
    c.passed = c.max_error <= kDefaultTolerance;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace braidforge
