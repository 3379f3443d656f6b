#include "braidforge/ybx.hpp"

#include <cmath>

#include "braidforge/ghz.hpp"
#include "braidforge/reps.hpp"
#include "braidforge/sweep.hpp"

namespace braidforge {

namespace {

void require_almost_complex(const MonomialOperator& m, const char* what)
{
  if (!is_almost_complex(m))
    throw DomainError(std::string(what) + ": operator is not an anti-Hermitian square root of -1");
}

}  // namespace

bool is_almost_complex(const MonomialOperator& m, double tol)
{
  const MonomialOperator minus_id = MonomialOperator::identity(m.dim()).scaled(-1.0);
  return max_difference(m * m, minus_id, tol).max_error <= tol &&
         max_difference(m.adjoint(), m.scaled(-1.0), tol).max_error <= tol;
}

TwoBandOperator r_of_x(const MonomialOperator& m, double x)
{
  require_almost_complex(m, "r_of_x");
  return TwoBandOperator::identity_plus((1.0 + x) * kInvSqrt2, (1.0 - x) * kInvSqrt2, m);
}

DenseMatrix r_of_x_dense(const MonomialOperator& m, double x, std::size_t cap)
{
  require_almost_complex(m, "r_of_x_dense");
  const DenseMatrix t = monomial_to_dense(m, cap);
  const DenseMatrix id = DenseMatrix::Identity(m.dim(), m.dim());
  const DenseMatrix b = kInvSqrt2 * (id + t);
  return b + x * b.inverse();
}

TwoBandOperator unitary_r(const MonomialOperator& m, double x)
{
  require_almost_complex(m, "unitary_r");
  const double s = kInvSqrt2 / std::sqrt(rho(x));
  return TwoBandOperator::identity_plus((1.0 + x) * s, (1.0 - x) * s, m);
}

TwoBandOperator b_of_theta(const MonomialOperator& m, double theta)
{
  require_almost_complex(m, "b_of_theta");
  const double a = kPi / 4 - theta;
  return TwoBandOperator::identity_plus(std::cos(a), std::sin(a), m);
}

TwoBandOperator b_of_theta_prime(const MonomialOperator& m, double theta_prime)
{
  require_almost_complex(m, "b_of_theta_prime");
  return TwoBandOperator::identity_plus(std::cos(theta_prime), -std::sin(theta_prime), m);
}

MonomialOperator hamiltonian_monomial(const MonomialOperator& m)
{
  require_almost_complex(m, "hamiltonian");
  return m.scaled(-kI);
}

DenseMatrix hamiltonian(const MonomialOperator& m, std::size_t cap)
{
  return monomial_to_dense(hamiltonian_monomial(m), cap);
}

DenseMatrix time_dependent_hamiltonian(const MonomialOperator& m, double x, std::size_t cap)
{
  return hamiltonian(m, cap) / rho(x);
}

StateVector evolve(int qubits, double theta_prime, std::size_t l)
{
  if (qubits < 2)
    throw DomainError("evolve needs at least 2 qubits");
  const std::size_t dim = std::size_t{1} << qubits;
  if (l < 1 || l > dim)
    throw DomainError("basis label " + std::to_string(l) + " outside 1.." + std::to_string(dim));
  return b_of_theta_prime(almost_complex_2n(qubits), theta_prime).apply(basis_state(dim, l));
}

StateVector evolve_closed_form(int qubits, double theta_prime, std::size_t l)
{
  const SpinWord w = spin_word(qubits, l);
  const std::size_t dim = std::size_t{1} << qubits;
  StateVector v = StateVector::Zero(dim);
  v(l - 1) += std::cos(theta_prime);
  v(conjugate_index(qubits, l) - 1) -= std::sin(theta_prime) * epsilon_prime(w[0]);
  return v;
}

VerificationReport verify_evolution(int qubits, double theta_prime, std::size_t l, double tol)
{
  VerificationReport report;
  report.name = "evolution N=" + std::to_string(qubits) + " l=" + std::to_string(l);
  report.tolerance = tol;
  ReportTimer timer(report);

  const StateVector got = evolve(qubits, theta_prime, l);
  const StateVector want = evolve_closed_form(qubits, theta_prime, l);
  Eigen::Index row = 0;
  const double err = (got - want).cwiseAbs().maxCoeff(&row);
  report.add(CheckResult::from_error(
      "closed-form", err, tol,
      Witness{static_cast<std::size_t>(row) + 1, l, got(row), want(row), {}}));
  report.add(CheckResult::from_error("norm", std::abs(got.norm() - 1.0), tol));
  return report;
}

StateVector evolve_class1(int qubits, double theta_prime, std::size_t alpha)
{
  const TwoBandOperator bell = class1_bell_matrix(qubits);
  const std::size_t dim = bell.dim();
  if (alpha < 1 || alpha > dim)
    throw DomainError("basis label " + std::to_string(alpha) + " outside 1.." +
                      std::to_string(dim));
  const int k = 1 << (qubits / 2 - 1);
  const MonomialOperator mjj =
      build_mjj(k, PhaseParams::trivial(k), SignConvention::standard(k), Validation::strict);
  return b_of_theta_prime(mjj, theta_prime).apply(basis_state(dim, alpha));
}

namespace {

struct Worst {
  double error = 0.0;
  std::optional<Witness> witness;

  void note(const CheckResult& c, int i)
  {
    if (c.max_error > error || (!witness && c.witness)) {
      error = std::max(error, c.max_error);
      witness = c.witness;
      if (witness)
        witness->detail = "i=" + std::to_string(i);
    }
  }
};

IdentityPlus multiplicative(const MonomialOperator& t, double x)
{
  return {(1.0 + x) * kInvSqrt2, (1.0 - x) * kInvSqrt2, &t};
}

}  // namespace

VerificationReport verify_qybe(const BraidRep& rep, double x, double y, const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "qybe " + rep.spec().str();
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const std::size_t dim = rep.dim();
  const double xy = x * y;
  // sqrt2 * LHS = (1+xy)(x+y) 1 + (1-xy)(y-x) T_i T_{i+1} + (1+xy)(1-xy)(T_i + T_{i+1})
  const double c0 = kInvSqrt2 * (1.0 + xy) * (x + y);
  const double c1 = kInvSqrt2 * (1.0 - xy) * (y - x);
  const double c2 = kInvSqrt2 * (1.0 + xy) * (1.0 - xy);

  Worst relation, lhs_closed, rhs_closed;
  for (int i = 1; i < rep.spec().m; ++i) {
    const MonomialOperator& a = rep.phi(i);
    const MonomialOperator& b = rep.phi(i + 1);
    const OperatorExpr lhs(dim, {multiplicative(a, x), multiplicative(b, xy), multiplicative(a, y)});
    const OperatorExpr rhs(dim, {multiplicative(b, y), multiplicative(a, xy), multiplicative(b, x)});
    OperatorExpr closed(dim);
    closed.add(c0, {}).add(c1, {a, b}).add(c2, {a}).add(c2, {b});
    relation.note(compare_operators("qybe", lhs, rhs, opts), i);
    lhs_closed.note(compare_operators("lhs", lhs, closed, opts), i);
    rhs_closed.note(compare_operators("rhs", rhs, closed, opts), i);
  }
  report.add(CheckResult::from_error("qybe", relation.error, opts.tolerance, relation.witness));
  report.add(CheckResult::from_error("lhs-closed-form", lhs_closed.error, opts.tolerance,
                                     lhs_closed.witness));
  report.add(CheckResult::from_error("rhs-closed-form", rhs_closed.error, opts.tolerance,
                                     rhs_closed.witness));
  return report;
}

VerificationReport verify_qybe_additive(const BraidRep& rep, double theta1, double theta2,
                                        const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "qybe-additive " + rep.spec().str();
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const std::size_t dim = rep.dim();
  auto r = [](const MonomialOperator& t, double theta) {
    return IdentityPlus{1.0, std::tanh(theta), &t};
  };
  const double sum = theta1 + theta2;
  Worst relation;
  for (int i = 1; i < rep.spec().m; ++i) {
    const MonomialOperator& a = rep.phi(i);
    const MonomialOperator& b = rep.phi(i + 1);
    relation.note(compare_operators("qybe-additive",
                                    OperatorExpr(dim, {r(a, theta1), r(b, sum), r(a, theta2)}),
                                    OperatorExpr(dim, {r(b, theta2), r(a, sum), r(b, theta1)}),
                                    opts),
                  i);
  }
  report.add(
      CheckResult::from_error("qybe-additive", relation.error, opts.tolerance, relation.witness));
  return report;
}

std::pair<std::size_t, std::size_t> eigen_multiplicities(const MonomialOperator& m)
{
  require_almost_complex(m, "eigen_multiplicities");
  // tr B = (dim + tr M)/sqrt2 and tr B = a zeta + (dim - a) zeta*
  const double dim = static_cast<double>(m.dim());
  const double im_trace_b = m.trace().imag() * kInvSqrt2;
  const double a = (dim + kSqrt2 * im_trace_b) / 2.0;
  const auto up = static_cast<std::size_t>(std::llround(a));
  return {up, m.dim() - up};
}

VerificationReport characteristic_check(const MonomialOperator& m, const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "characteristic";
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const std::size_t dim = m.dim();
  const IdentityPlus b{kInvSqrt2, kInvSqrt2, &m};
  OperatorExpr residual(dim);
  // (B - zeta)(B - zeta*) = B^2 - sqrt2 B + 1
  residual.add(1.0, {b, b}).add(-kSqrt2, {b}).add(1.0, {});
  report.add(compare_operators("polynomial-residual", residual, OperatorExpr(dim), opts));

  const auto [up, down] = eigen_multiplicities(m);
  const double split = std::abs(static_cast<double>(up) - static_cast<double>(down));
  Witness w;
  w.detail = "zeta x " + std::to_string(up) + ", zeta* x " + std::to_string(down);
  report.add(CheckResult::from_error("equal-multiplicities", split, opts.tolerance, w));
  return report;
}

}  // namespace braidforge
