#include "braidforge/ghz.hpp"

#include <cmath>

#include "braidforge/reps.hpp"

namespace braidforge {

namespace {

constexpr int kMaxQubits = 32;

void check_qubits(int qubits, int min)
{
  if (qubits < min || qubits > kMaxQubits)
    throw DomainError("qubit count " + std::to_string(qubits) + " outside " + std::to_string(min) +
                      ".." + std::to_string(kMaxQubits));
}

std::size_t dim_of(int qubits) { return std::size_t{1} << qubits; }

void check_label(int qubits, std::size_t k)
{
  if (k < 1 || k > dim_of(qubits))
    throw DomainError("basis label " + std::to_string(k) + " outside 1.." +
                      std::to_string(dim_of(qubits)));
}

}  // namespace

std::size_t basis_index(const SpinWord& w)
{
  const int n = static_cast<int>(w.size());
  check_qubits(n, 1);
  // 2k = 2^N + 1 - sum_i 2^{N-i} (2 m_i)
  long long twice = static_cast<long long>(dim_of(n)) + 1;
  for (int i = 1; i <= n; ++i)
    twice -= (1LL << (n - i)) * static_cast<int>(w[i - 1]);
  return static_cast<std::size_t>(twice / 2);
}

SpinWord spin_word(int qubits, std::size_t k)
{
  check_qubits(qubits, 1);
  check_label(qubits, k);
  SpinWord w(qubits);
  const std::size_t bits = k - 1;
  for (int i = 1; i <= qubits; ++i)
    w[i - 1] = (bits >> (qubits - i)) & 1u ? Spin::down : Spin::up;
  return w;
}

std::size_t conjugate_index(int qubits, std::size_t l)
{
  check_qubits(qubits, 1);
  check_label(qubits, l);
  return dim_of(qubits) - l + 1;
}

StateVector ghz_state(int qubits, std::size_t j)
{
  check_qubits(qubits, 1);
  check_label(qubits, j);
  const std::size_t dim = dim_of(qubits);
  const std::size_t half = dim / 2;
  const std::size_t l = j <= half ? j : dim - j + 1;
  const std::size_t lbar = dim - l + 1;
  StateVector v = StateVector::Zero(dim);
  v(l - 1) = kInvSqrt2;
  v(lbar - 1) = j <= half ? kInvSqrt2 : -kInvSqrt2;
  return v;
}

TwoBandOperator bell_matrix(int qubits)
{
  check_qubits(qubits, 2);
  return TwoBandOperator::identity_plus(kInvSqrt2, kInvSqrt2, almost_complex_2n(qubits));
}

TwoBandOperator class1_bell_matrix(int qubits, int k)
{
  if (qubits < 2 || qubits % 2 != 0)
    throw DomainError("class 1 Bell matrices exist only for an even number of qubits (got " +
                      std::to_string(qubits) + ")");
  check_qubits(qubits, 2);
  const int n = qubits / 2;
  const int needed = 1 << (n - 1);
  if (k != needed)
    throw DomainError("GHZ states of " + std::to_string(qubits) + " qubits need J = 2^" +
                      std::to_string(n - 1) + " - 1/2, i.e. k = " + std::to_string(needed) +
                      " (got k = " + std::to_string(k) + ")");
  const MonomialOperator mjj =
      build_mjj(k, PhaseParams::trivial(k), SignConvention::standard(k), Validation::strict);
  return TwoBandOperator::identity_plus(kInvSqrt2, kInvSqrt2, mjj);
}

TwoBandOperator class1_bell_matrix(int qubits)
{
  if (qubits < 2 || qubits % 2 != 0)
    return class1_bell_matrix(qubits, 0);
  return class1_bell_matrix(qubits, 1 << (qubits / 2 - 1));
}

VerificationReport verify_ghz_columns(int qubits, const VerifyOptions& opts, BellPath path)
{
  check_qubits(qubits, 2);
  VerificationReport report;
  report.name = "ghz-columns N=" + std::to_string(qubits) +
                (path == BellPath::class1 ? " (class 1)" : "");
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const TwoBandOperator b =
      path == BellPath::class1 ? class1_bell_matrix(qubits) : bell_matrix(qubits);
  const std::size_t dim = dim_of(qubits);

  double law = 0.0, sign = 0.0;
  Witness law_w, sign_w;
  auto note = [](double& worst, Witness& w, double e, std::size_t row, std::size_t col, Complex a,
                 Complex b) {
    if (e > worst) {
      worst = e;
      w = {row + 1, col + 1, a, b, {}};
    }
  };

  if (opts.engine == Engine::dense) {
    const DenseMatrix d = b.to_dense(opts.dense_cap);
    DenseMatrix ghz(dim, dim), signed_form = DenseMatrix::Zero(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      ghz.col(j) = ghz_state(qubits, dim - j);
      const std::size_t jbar = dim - 1 - j;
      signed_form(j, j) = kInvSqrt2;
      signed_form(jbar, j) = epsilon_prime(spin_word(qubits, j + 1)[0]) * kInvSqrt2;
    }
    const Comparison c1 = approx_eq(d, ghz, opts.tolerance);
    const Comparison c2 = approx_eq(d, signed_form, opts.tolerance);
    note(law, law_w, c1.max_error, c1.row, c1.col, d(c1.row, c1.col), ghz(c1.row, c1.col));
    note(sign, sign_w, c2.max_error, c2.row, c2.col, d(c2.row, c2.col),
         signed_form(c2.row, c2.col));
  } else {
    const std::size_t half = dim / 2;
    for (std::size_t j = 0; j < dim; ++j) {
      // expected GHZ state 2^N - j: entries at l and lbar
      const std::size_t target = dim - j;  // 1-based
      const std::size_t l = target <= half ? target : dim - target + 1;
      const std::size_t lbar = dim - l + 1;
      const Complex at_l = kInvSqrt2;
      const Complex at_lbar = target <= half ? kInvSqrt2 : -kInvSqrt2;
      const std::size_t jbar = dim - 1 - j;
      const Complex own = kInvSqrt2;
      const Spin m1 = j < half ? Spin::up : Spin::down;
      const Complex partner = static_cast<double>(epsilon_prime(m1)) * kInvSqrt2;

      Complex got_l{}, got_lbar{}, got_j{}, got_jbar{};
      for (const BandEntry& e : b.column(j)) {
        const std::size_t r = e.row;
        if (r == l - 1)
          got_l = e.value;
        else if (r == lbar - 1)
          got_lbar = e.value;
        else
          note(law, law_w, std::abs(e.value), r, j, e.value, 0.0);
        if (r == j)
          got_j = e.value;
        else if (r == jbar)
          got_jbar = e.value;
        else
          note(sign, sign_w, std::abs(e.value), r, j, e.value, 0.0);
      }
      note(law, law_w, std::abs(got_l - at_l), l - 1, j, got_l, at_l);
      note(law, law_w, std::abs(got_lbar - at_lbar), lbar - 1, j, got_lbar, at_lbar);
      note(sign, sign_w, std::abs(got_j - own), j, j, got_j, own);
      note(sign, sign_w, std::abs(got_jbar - partner), jbar, j, got_jbar, partner);
    }
  }

  report.add(CheckResult::from_error("column-law", law, opts.tolerance, law_w));
  report.add(CheckResult::from_error("eps-prime-sign", sign, opts.tolerance, sign_w));
  return report;
}

}  // namespace braidforge
