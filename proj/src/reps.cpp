#include "braidforge/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "braidforge/sweep.hpp"

namespace braidforge {

namespace {

std::size_t pair_of(std::size_t p, std::size_t factor_dim) { return factor_dim - 1 - p; }

/// Half-integer label of a position, e.g. "3/2" or "-1/2".
std::string label(std::size_t p, int k)
{
  const long twice = 2L * k - 1 - 2L * static_cast<long>(p);
  return std::to_string(twice) + "/2";
}

Complex entry(const MonomialOperator& p, std::size_t row, std::size_t col)
{
  return p.target(col) == row ? p.phase(col) : Complex{};
}

std::size_t checked_pow(std::size_t base, int exp)
{
  std::size_t out = 1;
  for (int e = 0; e < exp; ++e) {
    if (base != 0 && out > kMaxStructuredDim / base)
      throw SizeError("representation dimension exceeds structured index range");
    out *= base;
  }
  return out;
}

void check_index(const RepSpec& spec, int i)
{
  if (i < 1 || i > spec.m)
    throw DomainError("generator index " + std::to_string(i) + " outside 1.." +
                      std::to_string(spec.m));
}

}  // namespace

SignConvention::SignConvention(std::vector<int> eps) : eps_(std::move(eps))
{
  if (eps_.empty() || eps_.size() % 2 != 0)
    throw DomainError("sign convention needs an even, nonzero number of labels");
  for (std::size_t p = 0; p < eps_.size(); ++p) {
    if (eps_[p] != 1 && eps_[p] != -1)
      throw DomainError("sign convention values must be +1 or -1");
    if (eps_[p] * eps_[pair_of(p, eps_.size())] != -1)
      throw DomainError("sign convention violates eps(i) eps(i-bar) = -1 at position " +
                        std::to_string(p + 1));
  }
}

SignConvention SignConvention::standard(int k)
{
  if (k < 1)
    throw DomainError("sign convention needs k >= 1");
  std::vector<int> eps(2 * static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < eps.size(); ++p)
    eps[p] = p < static_cast<std::size_t>(k) ? 1 : -1;
  return SignConvention(std::move(eps));
}

PhaseParams::PhaseParams(int k, std::vector<Complex> table) : k_(k), table_(std::move(table))
{
  if (k < 1)
    throw DomainError("phase parameters need k >= 1");
  if (table_.size() != factor_dim() * factor_dim())
    throw DimensionError("phase table must have (2k)^2 entries");
}

PhaseParams PhaseParams::trivial(int k)
{
  if (k < 1)
    throw DomainError("phase parameters need k >= 1");
  return separable(std::vector<Complex>(2 * static_cast<std::size_t>(k), Complex(1.0)));
}

PhaseParams PhaseParams::separable(std::vector<Complex> per_label)
{
  if (per_label.empty() || per_label.size() % 2 != 0)
    throw DomainError("per-label phases need an even, nonzero count");
  const std::size_t f = per_label.size();
  std::vector<Complex> table(f * f);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j)
      table[i * f + j] = per_label[i] * per_label[j];
  PhaseParams p(static_cast<int>(f / 2), std::move(table));
  p.per_label_ = std::move(per_label);
  return p;
}

PhaseParams PhaseParams::from_angles(const std::vector<double>& phi)
{
  const std::size_t k = phi.size();
  std::vector<Complex> q(2 * k);
  for (std::size_t p = 0; p < k; ++p) {
    q[p] = std::polar(1.0, phi[p] / 2.0);
    q[pair_of(p, 2 * k)] = std::polar(1.0, -phi[p] / 2.0);
  }
  return separable(std::move(q));
}

RepSpec RepSpec::class1(int m, int k, std::optional<PhaseParams> phases,
                        std::optional<SignConvention> signs)
{
  if (m < 1 || k < 1)
    throw DomainError("class 1 needs m >= 1 and k >= 1");
  RepSpec s;
  s.rep_class = RepClass::one;
  s.m = m;
  s.k = k;
  s.N = 0;
  s.phases = phases ? std::move(*phases) : PhaseParams::trivial(k);
  s.signs = signs ? std::move(*signs) : SignConvention::standard(k);
  if (s.phases.k() != k || s.signs.k() != k)
    throw DimensionError("class 1 phases and signs must match k=" + std::to_string(k));
  return s;
}

RepSpec RepSpec::class2(int m, int N, int k)
{
  if (m < 1)
    throw DomainError("class 2 needs m >= 1");
  if (N < 2)
    throw DomainError("class 2 needs N >= 2");
  if (k < 1)
    throw DomainError("class 2 needs k >= 1");
  RepSpec s;
  s.rep_class = RepClass::two;
  s.m = m;
  s.N = N;
  s.k = k;
  return s;
}

std::size_t RepSpec::dimension() const
{
  if (rep_class == RepClass::one)
    return checked_pow(2 * static_cast<std::size_t>(k), m + 1);
  const long exponent = N + static_cast<long>(k) * (m - 1);
  if (exponent > 32)
    throw SizeError("class 2 dimension 2^" + std::to_string(exponent) +
                    " exceeds structured index range");
  return std::size_t{1} << exponent;
}

bool RepSpec::admissible() const
{
  if (rep_class == RepClass::one)
    return check_constraints_3constr(phases).passed();
  if (m == 1)
    return true;
  if (k < 1 || k > N - 1)
    return false;
  return m < 3 || 2 * k >= N;
}

std::string RepSpec::str() const
{
  std::ostringstream os;
  if (rep_class == RepClass::one)
    os << "class 1 (m=" << m << ", k=" << k << ")";
  else
    os << "class 2 (m=" << m << ", N=" << N << ", k=" << k << ")";
  return os.str();
}

MonomialOperator factor_m_prime(const std::vector<Complex>& q, const SignConvention& signs)
{
  const std::size_t f = q.size();
  if (signs.values().size() != f)
    throw DimensionError("factor_m_prime: signs and phases differ in size");
  std::vector<Index> t(f);
  std::vector<Complex> ph(f);
  for (std::size_t c = 0; c < f; ++c) {
    const std::size_t r = pair_of(c, f);
    t[c] = static_cast<Index>(r);
    ph[c] = static_cast<double>(signs(r)) * q[r];
  }
  return MonomialOperator(std::move(t), std::move(ph));
}

MonomialOperator factor_p_prime(const std::vector<Complex>& q)
{
  const std::size_t f = q.size();
  std::vector<Index> t(f);
  std::vector<Complex> ph(f);
  for (std::size_t c = 0; c < f; ++c) {
    const std::size_t r = pair_of(c, f);
    t[c] = static_cast<Index>(r);
    ph[c] = q[r];
  }
  return MonomialOperator(std::move(t), std::move(ph));
}

MonomialOperator build_mjj(int k, const PhaseParams& phases, const SignConvention& signs,
                           Validation v)
{
  if (phases.k() != k || signs.k() != k)
    throw DimensionError("build_mjj: phases and signs must match k=" + std::to_string(k));
  if (v == Validation::strict) {
    const VerificationReport r = check_constraints_3constr(phases);
    if (const CheckResult* bad = r.first_failure())
      throw ConstraintError("M^JJ deformation violates " + bad->name +
                            (bad->witness ? " at " + bad->witness->detail : std::string{}));
  }
  const std::size_t f = phases.factor_dim();
  std::vector<Index> t(f * f);
  std::vector<Complex> ph(f * f);
  for (std::size_t a = 0; a < f; ++a) {
    for (std::size_t b = 0; b < f; ++b) {
      const std::size_t ra = pair_of(a, f);
      const std::size_t rb = pair_of(b, f);
      t[a * f + b] = static_cast<Index>(ra * f + rb);
      ph[a * f + b] = static_cast<double>(signs(ra)) * phases.q(ra, rb);
    }
  }
  return MonomialOperator(std::move(t), std::move(ph));
}

MonomialOperator almost_complex_2n(int N)
{
  if (N < 1 || N > 32)
    throw DomainError("almost_complex_2n: N outside 1..32");
  const std::size_t dim = std::size_t{1} << N;
  const std::size_t all = dim - 1;
  const std::size_t top = dim >> 1;
  std::vector<Index> t(dim);
  std::vector<Complex> ph(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    t[c] = static_cast<Index>(c ^ all);
    // i sigma_y sends |0> to -|1> and |1> to |0>
    ph[c] = (c & top) ? 1.0 : -1.0;
  }
  return MonomialOperator(std::move(t), std::move(ph));
}

MonomialOperator class1_generator(const RepSpec& spec, int i, Validation v)
{
  if (spec.rep_class != RepClass::one)
    throw DomainError("class1_generator: spec is not class 1");
  check_index(spec, i);
  const std::size_t f = 2 * static_cast<std::size_t>(spec.k);
  const std::vector<MonomialOperator> parts{
      MonomialOperator::identity(checked_pow(f, i - 1)),
      build_mjj(spec.k, spec.phases, spec.signs, v),
      MonomialOperator::identity(checked_pow(f, spec.m - i))};
  return monomial_kron(parts);
}

MonomialOperator class2_generator(const RepSpec& spec, int i)
{
  if (spec.rep_class != RepClass::two)
    throw DomainError("class2_generator: spec is not class 2");
  if (spec.k < 1)
    throw DomainError("class2_generator: k must be >= 1");
  if (spec.N < 2)
    throw DomainError("class2_generator: N must be >= 2");
  check_index(spec, i);
  spec.dimension();  // range check
  const std::vector<MonomialOperator> parts{
      MonomialOperator::identity(std::size_t{1} << (spec.k * (i - 1))),
      almost_complex_2n(spec.N),
      MonomialOperator::identity(std::size_t{1} << (spec.k * (spec.m - i)))};
  return monomial_kron(parts);
}

MonomialOperator generator(const RepSpec& spec, int i, Validation v)
{
  return spec.rep_class == RepClass::one ? class1_generator(spec, i, v)
                                         : class2_generator(spec, i);
}

std::vector<MonomialOperator> generators(const RepSpec& spec, Validation v)
{
  std::vector<MonomialOperator> out;
  out.reserve(spec.m);
  for (int i = 1; i <= spec.m; ++i)
    out.push_back(generator(spec, i, v));
  return out;
}

DenseMatrix dense_generator(const RepSpec& spec, int i, std::size_t cap)
{
  check_index(spec, i);
  require_dense(spec.dimension(), cap, "dense_generator");
  DenseMatrix core;
  std::size_t left, right;
  if (spec.rep_class == RepClass::two) {
    core = pauli::i_sigma_y();
    for (int n = 1; n < spec.N; ++n)
      core = kron(core, pauli::sigma_x(), cap);
    left = std::size_t{1} << (spec.k * (i - 1));
    right = std::size_t{1} << (spec.k * (spec.m - i));
  } else {
    // sum over labels (i, j) of eps(i) q_ij |ij><i-bar j-bar|
    const std::size_t f = spec.phases.factor_dim();
    core = DenseMatrix::Zero(f * f, f * f);
    for (std::size_t a = 0; a < f; ++a)
      for (std::size_t b = 0; b < f; ++b)
        core(a * f + b, pair_of(a, f) * f + pair_of(b, f)) =
            static_cast<double>(spec.signs(a)) * spec.phases.q(a, b);
    left = checked_pow(f, i - 1);
    right = checked_pow(f, spec.m - i);
  }
  return kron(kron(pauli::identity(left), core, cap), pauli::identity(right), cap);
}

VerificationReport verify_esp_relations(const RepSpec& spec, const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "esp-relations " + spec.str();
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const std::size_t dim = spec.dimension();
  const auto gens = generators(spec, Validation::lenient);

  struct Worst {
    double error = 0.0;
    Witness witness;
  };
  Worst e1, e2, e3, ah;
  auto note = [](Worst& w, const Comparison& c, Complex lhs, Complex rhs,
                 const std::string& detail) {
    if (c.max_error > w.error) {
      w.error = c.max_error;
      w.witness = {c.row + 1, c.col + 1, lhs, rhs, detail};
    }
  };
  auto dense_note = [&](Worst& w, const DenseMatrix& a, const DenseMatrix& b,
                        const std::string& detail) {
    const Comparison c = approx_eq(a, b);
    note(w, c, a(c.row, c.col), b(c.row, c.col), detail);
  };
  auto mono_note = [&](Worst& w, const MonomialOperator& a, const MonomialOperator& b,
                       const std::string& detail) {
    const Comparison c = max_difference(a, b);
    note(w, c, entry(a, c.row, c.col), entry(b, c.row, c.col), detail);
  };

  if (opts.engine == Engine::dense) {
    require_dense(dim, opts.dense_cap, "verify_esp_relations");
    std::vector<DenseMatrix> d;
    for (const auto& g : gens)
      d.push_back(monomial_to_dense(g, opts.dense_cap));
    const DenseMatrix id = DenseMatrix::Identity(dim, dim);
    for (int i = 0; i < spec.m; ++i) {
      dense_note(e1, d[i] * d[i], -id, "i=" + std::to_string(i + 1));
      dense_note(ah, d[i].adjoint(), -d[i], "i=" + std::to_string(i + 1));
      for (int j = i + 1; j < spec.m; ++j) {
        const std::string detail = "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1);
        if (j == i + 1)
          dense_note(e3, d[i] * d[j], -(d[j] * d[i]), detail);
        else
          dense_note(e2, d[i] * d[j], d[j] * d[i], detail);
      }
    }
  } else {
    const MonomialOperator minus_id = MonomialOperator::identity(dim).scaled(-1.0);
    for (int i = 0; i < spec.m; ++i) {
      mono_note(e1, gens[i] * gens[i], minus_id, "i=" + std::to_string(i + 1));
      mono_note(ah, gens[i].adjoint(), gens[i].scaled(-1.0),
           "i=" + std::to_string(i + 1));
      for (int j = i + 1; j < spec.m; ++j) {
        const std::string detail = "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1);
        const MonomialOperator ij = gens[i] * gens[j];
        const MonomialOperator ji = gens[j] * gens[i];
        if (j == i + 1)
          mono_note(e3, ij, ji.scaled(-1.0), detail);
        else
          mono_note(e2, ij, ji, detail);
      }
    }
  }

  report.add(CheckResult::from_error("E1 squares", e1.error, opts.tolerance, e1.witness));
  report.add(CheckResult::from_error("E2 far-commutation", e2.error, opts.tolerance, e2.witness));
  report.add(
      CheckResult::from_error("E3 adjacent-anticommutation", e3.error, opts.tolerance, e3.witness));
  report.add(CheckResult::from_error("anti-Hermitian", ah.error, opts.tolerance, ah.witness));
  return report;
}

MonomialOperator rep_of_element(const std::vector<MonomialOperator>& gens, const GroupElement& g)
{
  if (static_cast<int>(gens.size()) != g.m())
    throw DomainError("rep_of_element: element of E_" + std::to_string(g.m()) +
                      " for a representation of E_" + std::to_string(gens.size()));
  MonomialOperator acc = MonomialOperator::identity(gens.front().dim());
  for (int i = 1; i <= g.m(); ++i)
    if (g.exponent(i))
      acc = acc * gens[i - 1];
  return g.sign() < 0 ? acc.scaled(-1.0) : acc;
}

MonomialOperator rep_of_element(const RepSpec& spec, const GroupElement& g)
{
  if (spec.m != g.m())
    throw DomainError("rep_of_element: element of E_" + std::to_string(g.m()) +
                      " for a representation of E_" + std::to_string(spec.m));
  return rep_of_element(generators(spec, Validation::lenient), g);
}

VerificationReport check_constraints_3constr(const PhaseParams& phases, double tol)
{
  VerificationReport report;
  report.name = "class-1 phase constraints";
  report.tolerance = tol;
  ReportTimer timer(report);

  const std::size_t f = phases.factor_dim();
  const int k = phases.k();
  double e1 = 0, e2 = 0, e3 = 0;
  Witness w1, w2, w3;
  for (std::size_t i = 0; i < f; ++i) {
    const std::size_t ib = pair_of(i, f);
    for (std::size_t j = 0; j < f; ++j) {
      const std::size_t jb = pair_of(j, f);
      const Complex qij = phases.q(i, j);

      const double c1 = std::abs(qij * phases.q(ib, jb) - 1.0);
      if (c1 > e1) {
        e1 = c1;
        w1 = {i + 1, j + 1, qij * phases.q(ib, jb), 1.0,
              "(i,j)=(" + label(i, k) + "," + label(j, k) + ")"};
      }

      const double c3 = std::abs(std::conj(qij) * qij - 1.0);
      if (c3 > e3) {
        e3 = c3;
        w3 = {i + 1, j + 1, std::conj(qij) * qij, 1.0,
              "(i,j)=(" + label(i, k) + "," + label(j, k) + ")"};
      }

      const Complex lhs = qij * phases.q(ib, j);
      for (std::size_t l = 0; l < f; ++l) {
        const Complex rhs = phases.q(j, l) * phases.q(j, pair_of(l, f));
        const double c2 = std::abs(lhs - rhs);
        if (c2 > e2) {
          e2 = c2;
          w2 = {i + 1, j + 1, lhs, rhs,
                "(i,j,l)=(" + label(i, k) + "," + label(j, k) + "," + label(l, k) + ")"};
        }
      }
    }
  }
  report.add(CheckResult::from_error("q_ij q_(-i)(-j) = 1", e1, tol, w1));
  report.add(CheckResult::from_error("q_ij q_(-i)j = q_jl q_j(-l)", e2, tol, w2));
  report.add(CheckResult::from_error("|q_ij| = 1", e3, tol, w3));
  return report;
}

VerificationReport check_e3prime(const RepSpec& spec, const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "E3' " + spec.str();
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const auto gens = generators(spec, Validation::lenient);
  const std::size_t dim = spec.dimension();
  double worst = 0.0;
  std::optional<Witness> witness;
  for (int i = 0; i + 1 < spec.m; ++i) {
    const auto& a = gens[i];
    const auto& b = gens[i + 1];
    OperatorExpr lhs(dim);
    lhs.add(1.0, {a}).add(1.0, {a, b, a}).add(-1.0, {b}).add(-1.0, {b, a, b});
    CheckResult c = compare_operators("E3'", lhs, OperatorExpr(dim), opts);
    if (c.max_error > worst) {
      worst = c.max_error;
      witness = c.witness;
      if (witness)
        witness->detail = "i=" + std::to_string(i + 1);
    }
  }
  report.add(CheckResult::from_error("E3'", worst, opts.tolerance, witness));
  return report;
}

std::vector<Complex> deformation_basis_change(const PhaseParams& phases)
{
  const auto& q = phases.per_label();
  if (!q)
    throw ConstraintError("basis change needs separable phases q_ij = q_i q_j");
  const std::size_t f = q->size();
  std::vector<Complex> u(f);
  for (std::size_t p = 0; p < f / 2; ++p) {
    const Complex qp = (*q)[p];
    const Complex qb = (*q)[pair_of(p, f)];
    if (std::abs(std::abs(qp) - 1.0) > 1e-12 || std::abs(qb - std::conj(qp)) > 1e-12)
      throw ConstraintError("basis change needs unimodular q_i with q_(-i) = conj(q_i) at label " +
                            label(p, phases.k()));
    u[p] = std::sqrt(qp);
    u[pair_of(p, f)] = std::conj(u[p]);
  }
  return u;
}

VerificationReport verify_homomorphism(const RepSpec& spec, double tol)
{
  VerificationReport report;
  report.name = "homomorphism " + spec.str();
  report.tolerance = tol;
  ReportTimer timer(report);

  const auto gens = generators(spec, Validation::lenient);
  const auto elements = enumerate(spec.m);
  std::vector<MonomialOperator> images;
  images.reserve(elements.size());
  for (const auto& g : elements)
    images.push_back(rep_of_element(gens, g));

  double worst = 0.0;
  std::optional<Witness> witness;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const GroupElement ab = elements[a] * elements[b];
      const auto pos = std::lower_bound(elements.begin(), elements.end(), ab) - elements.begin();
      const Comparison c = max_difference(images[pos], images[a] * images[b], tol);
      if (c.max_error > worst || !witness) {
        worst = std::max(worst, c.max_error);
        witness = Witness{c.row + 1, c.col + 1, entry(images[pos], c.row, c.col),
                          entry(images[a] * images[b], c.row, c.col),
                          elements[a].str() + " * " + elements[b].str()};
      }
    }
  }
  report.add(CheckResult::from_error("homomorphism", worst, tol, witness));
  return report;
}

}  // namespace braidforge
