#include <gtest/gtest.h>

#include <random>

#include "braidforge/group.hpp"
#include "braidforge/reps.hpp"
#include "support.hpp"

using namespace braidforge;
using braidforge::testing::max_abs;

namespace {

std::vector<double> random_angles(int k, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> d(-kPi, kPi);
  std::vector<double> phi(k);
  for (auto& p : phi)
    p = d(rng);
  return phi;
}

std::vector<Complex> kron_diag(const std::vector<Complex>& factor, int copies)
{
  std::vector<Complex> out{1.0};
  for (int c = 0; c < copies; ++c) {
    std::vector<Complex> next;
    for (Complex a : out)
      for (Complex b : factor)
        next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(SignConvention, PairingIsValidated)
{
  EXPECT_NO_THROW(SignConvention({1, 1, -1, -1}));
  EXPECT_NO_THROW(SignConvention({-1, 1, -1, 1}));
  EXPECT_THROW(SignConvention({1, 1, 1, -1}), DomainError);
  EXPECT_THROW(SignConvention({1, 1, -1}), DomainError);
  EXPECT_EQ(SignConvention::standard(2).values(), (std::vector<int>{1, 1, -1, -1}));
}

TEST(BuildMjj, TrivialPhasesGiveISigmaYKronSigmaX)
{
  const auto m = build_mjj(1, PhaseParams::trivial(1), SignConvention::standard(1));
  EXPECT_EQ(monomial_to_dense(m), kron(pauli::i_sigma_y(), pauli::sigma_x()));
  // k = 2^{n-1}: the same pattern extended to 2n qubits
  DenseMatrix expected = pauli::i_sigma_y();
  for (int i = 0; i < 3; ++i)
    expected = kron(expected, pauli::sigma_x());
  EXPECT_EQ(monomial_to_dense(build_mjj(2, PhaseParams::trivial(2), SignConvention::standard(2))),
            expected);
}

TEST(BuildMjj, SquaresToMinusOneAndFactorizes)
{
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 4; ++k) {
    for (int t = 0; t < 5; ++t) {
      const PhaseParams q = PhaseParams::from_angles(random_angles(k, rng));
      const SignConvention s = SignConvention::standard(k);
      const auto m = build_mjj(k, q, s);
      EXPECT_LE(max_difference(m * m, MonomialOperator::identity(m.dim()).scaled(-1.0)).max_error,
                1e-12);
      EXPECT_LE(max_difference(m.adjoint(), m.scaled(-1.0)).max_error, 1e-12);
      const auto factored = monomial_kron(factor_m_prime(*q.per_label(), s),
                                          factor_p_prime(*q.per_label()));
      EXPECT_LE(max_difference(m, factored).max_error, 1e-15);
      // dense sum over labels, built independently
      const auto spec = RepSpec::class1(1, k, q);
      EXPECT_LE(max_abs(monomial_to_dense(class1_generator(spec, 1)) - dense_generator(spec, 1)),
                1e-15);
    }
  }
}

TEST(BuildMjj, ViolatedConstraintIsReported)
{
  // q_{1/2,1/2} q_{-1/2,-1/2} = exp(i pi/3)
  std::vector<Complex> table{std::polar(1.0, kPi / 3), 1.0, 1.0, 1.0};
  const PhaseParams bad(1, table);
  try {
    build_mjj(1, bad, SignConvention::standard(1));
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError& e) {
    EXPECT_NE(std::string(e.what()).find("q_ij q_(-i)(-j) = 1"), std::string::npos) << e.what();
  }
  const auto spec = RepSpec::class1(2, 1, bad);
  for (Engine engine : {Engine::structured, Engine::dense}) {
    VerifyOptions opts;
    opts.engine = engine;
    const auto r = verify_esp_relations(spec, opts);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.find("E1 squares")->passed);
  }
}

TEST(Class1, GeneratorsSatisfyRelations)
{
  const auto spec = RepSpec::class1(2, 1);
  const auto g1 = class1_generator(spec, 1);
  const auto mjj = build_mjj(1, PhaseParams::trivial(1), SignConvention::standard(1));
  EXPECT_EQ(g1, monomial_kron(mjj, MonomialOperator::identity(2)));
  EXPECT_EQ(g1 * g1, MonomialOperator::identity(8).scaled(-1.0));
  for (int k = 1; k <= 2; ++k)
    for (int m = 1; m <= 4; ++m)
      EXPECT_TRUE(verify_esp_relations(RepSpec::class1(m, k)).passed()) << k << " " << m;
  EXPECT_THROW(class1_generator(spec, 3), DomainError);
  EXPECT_THROW(class1_generator(RepSpec::class2(2, 3, 2), 1), DomainError);
}

TEST(Class1, RandomAdmissiblePhasesPassBothEngines)
{
  std::mt19937_64 rng(17);
  for (int t = 0; t < 5; ++t) {
    const auto spec = RepSpec::class1(3, 2, PhaseParams::from_angles(random_angles(2, rng)));
    EXPECT_TRUE(verify_esp_relations(spec).passed());
    VerifyOptions dense;
    dense.engine = Engine::dense;
    EXPECT_TRUE(verify_esp_relations(spec, dense).passed());
  }
}

TEST(Class2, ThreeQubitGeneratorIsM8)
{
  const auto g = class2_generator(RepSpec::class2(1, 3, 1), 1);
  const DenseMatrix b8 = braidforge::testing::printed_b8_times_sqrt2() / kSqrt2;
  EXPECT_LE(max_abs(monomial_to_dense(g) - (kSqrt2 * b8 - pauli::identity(8))), 1e-15);
}

TEST(Class2, CommutationPattern)
{
  const auto spec = RepSpec::class2(3, 3, 2);
  const auto t1 = class2_generator(spec, 1), t2 = class2_generator(spec, 2),
             t3 = class2_generator(spec, 3);
  EXPECT_EQ(t1 * t2, (t2 * t1).scaled(-1.0));
  EXPECT_EQ(t1 * t3, t3 * t1);
  const auto narrow = RepSpec::class2(3, 3, 1);
  EXPECT_NE(class2_generator(narrow, 1) * class2_generator(narrow, 3),
            class2_generator(narrow, 3) * class2_generator(narrow, 1));
}

TEST(Class2, AnticommutationMatchesPredicateExhaustively)
{
  for (int N = 2; N <= 5; ++N) {
    for (int k = 1; k <= N - 1; ++k) {
      for (int m = 1; m <= 5; ++m) {
        const auto gens = generators(RepSpec::class2(m, N, k));
        for (int i = 1; i <= m; ++i) {
          for (int j = i + 1; j <= m; ++j) {
            const auto ij = gens[i - 1] * gens[j - 1];
            const auto ji = gens[j - 1] * gens[i - 1];
            const int gap = k * (j - i);
            const bool anti = 1 <= gap && gap <= N - 1;
            EXPECT_EQ(ij == ji.scaled(-1.0), anti) << N << k << m << i << j;
            EXPECT_EQ(ij == ji, !anti) << N << k << m << i << j;
          }
        }
      }
    }
  }
}

TEST(Class2, RelationsReport)
{
  EXPECT_TRUE(verify_esp_relations(RepSpec::class2(4, 3, 2)).passed());
  const auto r = verify_esp_relations(RepSpec::class2(3, 4, 1));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("E2 far-commutation")->passed);
  EXPECT_TRUE(r.find("E1 squares")->passed);
  EXPECT_TRUE(r.find("E3 adjacent-anticommutation")->passed);
  ASSERT_TRUE(r.find("E2 far-commutation")->witness);
  EXPECT_EQ(r.find("E2 far-commutation")->witness->detail, "i=1,j=3");
  EXPECT_THROW(RepSpec::class2(2, 3, 0), DomainError);
  EXPECT_THROW(class2_generator(RepSpec::class2(2, 3, 1), 0), DomainError);
}

TEST(Class2, DenseOracleAgrees)
{
  for (int N = 2; N <= 4; ++N)
    for (int k = 1; k < N; ++k)
      for (int m = 1; m <= 3; ++m) {
        const auto spec = RepSpec::class2(m, N, k);
        for (int i = 1; i <= m; ++i)
          EXPECT_EQ(monomial_to_dense(class2_generator(spec, i)), dense_generator(spec, i));
      }
}

TEST(RepSpec, DimensionsAndAdmissibility)
{
  EXPECT_EQ(RepSpec::class1(3, 2).dimension(), 256u);
  EXPECT_EQ(RepSpec::class2(4, 3, 2).dimension(), 512u);
  EXPECT_TRUE(RepSpec::class2(5, 4, 2).admissible());
  EXPECT_FALSE(RepSpec::class2(3, 4, 1).admissible());
  EXPECT_TRUE(RepSpec::class2(2, 4, 1).admissible());
  EXPECT_THROW(RepSpec::class2(40, 3, 2).dimension(), SizeError);
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k < N; ++k)
      for (int m = 1; m <= 5; ++m) {
        const auto spec = RepSpec::class2(m, N, k);
        EXPECT_EQ(spec.admissible(), verify_esp_relations(spec).passed()) << spec.str();
      }
}

TEST(RepOfElement, SignsProductsAndHomomorphism)
{
  const auto spec = RepSpec::class2(2, 3, 2);
  const auto minus = rep_of_element(spec, GroupElement::minus_identity(2));
  EXPECT_EQ(minus, MonomialOperator::identity(spec.dimension()).scaled(-1.0));
  const auto e12 = GroupElement::generator(2, 1) * GroupElement::generator(2, 2);
  EXPECT_EQ(rep_of_element(spec, e12), class2_generator(spec, 1) * class2_generator(spec, 2));
  EXPECT_THROW(rep_of_element(spec, GroupElement::identity(3)), DomainError);

  const auto big = RepSpec::class2(6, 3, 2);
  const auto gens = generators(big);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const GroupElement a(6, (rng() & 1) ? 1 : -1, rng() & 63);
    const GroupElement b(6, (rng() & 1) ? 1 : -1, rng() & 63);
    EXPECT_EQ(rep_of_element(gens, a * b), rep_of_element(gens, a) * rep_of_element(gens, b));
  }
}

TEST(Constraints, AcceptsSeparableUnimodularPhases)
{
  EXPECT_TRUE(check_constraints_3constr(PhaseParams::trivial(3)).passed());
  for (double phi : {0.0, 0.4, -2.0, 3.1})
    EXPECT_TRUE(check_constraints_3constr(PhaseParams::from_angles({phi})).passed());
}

TEST(Constraints, RejectsNonUnimodular)
{
  const auto r = check_constraints_3constr(PhaseParams::separable({2.0, 0.5}));
  EXPECT_TRUE(r.checks[0].passed);
  EXPECT_TRUE(r.checks[1].passed);
  EXPECT_FALSE(r.checks[2].passed);
  EXPECT_FALSE(check_constraints_3constr(PhaseParams::separable({2.0, 1.0})).passed());
}

TEST(Constraints, UnitaryEquivalenceToTrivialPhases)
{
  std::mt19937_64 rng(29);
  for (int k = 1; k <= 2; ++k) {
    for (int t = 0; t < 5; ++t) {
      const PhaseParams q = PhaseParams::from_angles(random_angles(k, rng));
      const int m = 3;
      const auto u = kron_diag(deformation_basis_change(q), m + 1);
      const auto plain = RepSpec::class1(m, k);
      const auto deformed = RepSpec::class1(m, k, q);
      for (int i = 1; i <= m; ++i) {
        const auto conj = class1_generator(plain, i).conjugated_by_diagonal(u);
        EXPECT_LE(max_difference(conj, class1_generator(deformed, i)).max_error, 1e-10);
      }
    }
  }
}

TEST(E3Prime, HoldsWheneverAdjacentGeneratorsAnticommute)
{
  EXPECT_TRUE(check_e3prime(RepSpec::class2(4, 3, 2)).passed());
  EXPECT_TRUE(check_e3prime(RepSpec::class1(3, 1)).passed());
  EXPECT_FALSE(check_e3prime(RepSpec::class2(2, 3, 3)).passed());
}
