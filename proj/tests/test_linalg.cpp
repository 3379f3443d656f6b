#include <gtest/gtest.h>

#include "braidforge/linalg.hpp"
#include "braidforge/monomial.hpp"
#include "braidforge/reps.hpp"
#include "braidforge/sweep.hpp"
#include "support.hpp"

using namespace braidforge;
using braidforge::testing::max_abs;

TEST(Kron, PauliBlocksFollowIndexConvention)
{
  const DenseMatrix k = kron(pauli::i_sigma_y(), pauli::sigma_x());
  ASSERT_EQ(k.rows(), 4);
  // (A (x) B)_{ik,jl} = A_ij B_kl
  for (int i = 0; i < 2; ++i)
    for (int kk = 0; kk < 2; ++kk)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
          EXPECT_EQ(k(2 * i + kk, 2 * j + l), pauli::i_sigma_y()(i, j) * pauli::sigma_x()(kk, l));
  EXPECT_EQ(kron(pauli::identity(2), pauli::identity(2)), pauli::identity(4));
}

TEST(Kron, M8MatchesPrintedBellMatrix)
{
  const DenseMatrix m8 = kron(pauli::i_sigma_y(), kron(pauli::sigma_x(), pauli::sigma_x()));
  const DenseMatrix b8 = braidforge::testing::printed_b8_times_sqrt2() / kSqrt2;
  EXPECT_LE(max_abs(m8 - (kSqrt2 * b8 - pauli::identity(8))), 1e-15);
}

TEST(Kron, Associative)
{
  const DenseMatrix a = pauli::sigma_y(), b = pauli::sigma_x(), c = pauli::i_sigma_y();
  EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
}

TEST(Kron, CapIsEnforced)
{
  EXPECT_THROW(kron(pauli::identity(64), pauli::identity(64), 1024), SizeError);
}

TEST(ApproxEq, ReportsMaxError)
{
  const DenseMatrix x = pauli::sigma_y();
  const Comparison same = approx_eq(x, x, 1e-12);
  EXPECT_TRUE(same.equal);
  EXPECT_EQ(same.max_error, 0.0);
  const Comparison diff = approx_eq(pauli::identity(2), pauli::sigma_z(), 1e-12);
  EXPECT_FALSE(diff.equal);
  EXPECT_DOUBLE_EQ(diff.max_error, 2.0);
  EXPECT_THROW(approx_eq(pauli::identity(2), pauli::identity(3)), DimensionError);
}

TEST(Monomial, RejectsInvalidInput)
{
  EXPECT_THROW(MonomialOperator({0, 0}, {1.0, 1.0}), DomainError);
  EXPECT_THROW(MonomialOperator({1, 0}, {1.0, 2.0}), DomainError);
  EXPECT_THROW(MonomialOperator({1, 0}, {1.0}), DimensionError);
}

TEST(Monomial, KronOfIdentitiesAndSwaps)
{
  const auto id2 = MonomialOperator::identity(2);
  EXPECT_EQ(monomial_kron(id2, id2), MonomialOperator::identity(4));
  const auto x = MonomialOperator::from_dense(pauli::sigma_x());
  const auto xx = monomial_kron(x, x);
  const std::vector<Index> expected{3, 2, 1, 0};
  EXPECT_TRUE(std::equal(xx.targets().begin(), xx.targets().end(), expected.begin()));
  for (auto p : xx.phases())
    EXPECT_EQ(p, Complex(1.0));
}

TEST(Monomial, RandomKronAndComposeMatchDense)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t da = 1 + rng() % 8, db = 1 + rng() % 8;
    const auto p = braidforge::testing::random_monomial(da, rng, trial % 2 == 0);
    const auto q = braidforge::testing::random_monomial(db, rng, trial % 2 == 0);
    EXPECT_EQ(monomial_to_dense(monomial_kron(p, q)), kron(monomial_to_dense(p), monomial_to_dense(q)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng() % 64;
    const auto p = braidforge::testing::random_monomial(d, rng, false);
    const auto q = braidforge::testing::random_monomial(d, rng, false);
    EXPECT_LE(max_abs(monomial_to_dense(p * q) - monomial_to_dense(p) * monomial_to_dense(q)), 0.0);
    const StateVector v = braidforge::testing::random_state(d, rng);
    EXPECT_LE((monomial_apply(p, v) - monomial_to_dense(p) * v).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE(max_difference(p * p.adjoint(), MonomialOperator::identity(d)).max_error, 1e-15);
  }
}

TEST(Monomial, M8SendsFirstBasisVectorToMinusLast)
{
  const auto m8 = almost_complex_2n(3);
  const StateVector out = monomial_apply(m8, basis_state(8, 1));
  EXPECT_EQ(out, -basis_state(8, 8));
  EXPECT_EQ(out, monomial_to_dense(m8).col(0));
  EXPECT_EQ(m8 * m8, MonomialOperator::identity(8).scaled(-1.0));
}

TEST(Monomial, FromDenseRejectsNonMonomial)
{
  EXPECT_THROW(MonomialOperator::from_dense(pauli::identity(2) + pauli::sigma_x()), DomainError);
  const auto y = MonomialOperator::from_dense(pauli::sigma_y());
  EXPECT_EQ(monomial_to_dense(y), pauli::sigma_y());
}

TEST(TwoBand, IdentityPlusHasTwoEntriesPerColumn)
{
  const auto b = TwoBandOperator::identity_plus(kInvSqrt2, kInvSqrt2, almost_complex_2n(3));
  for (std::size_t j = 0; j < 8; ++j) {
    ASSERT_EQ(b.column(j).size(), 2u);
    for (const auto& e : b.column(j))
      EXPECT_DOUBLE_EQ(std::abs(e.value), kInvSqrt2);
  }
  const DenseMatrix d = b.to_dense();
  EXPECT_LE(max_abs(d * d.adjoint() - pauli::identity(8)), 1e-12);
  EXPECT_LE(max_abs(d / kInvSqrt2 - braidforge::testing::printed_b8_times_sqrt2()), 0.0);
}

TEST(TwoBand, FixedPointsMerge)
{
  const auto b = TwoBandOperator::identity_plus(1.0, 1.0, MonomialOperator::identity(4));
  for (std::size_t j = 0; j < 4; ++j) {
    ASSERT_EQ(b.column(j).size(), 1u);
    EXPECT_EQ(b.column(j)[0].value, Complex(2.0));
  }
  const auto z = TwoBandOperator::identity_plus(1.0, -1.0, MonomialOperator::identity(4));
  EXPECT_EQ(z.column(0).size(), 0u);
}

TEST(Sweep, StructuredAndDenseEnginesAgree)
{
  const auto spec = RepSpec::class2(2, 3, 2);
  const auto a = class2_generator(spec, 1);
  const auto b = class2_generator(spec, 2);
  const std::size_t dim = a.dim();
  const IdentityPlus ra{kInvSqrt2, kInvSqrt2, &a};
  const IdentityPlus rb{kInvSqrt2, kInvSqrt2, &b};
  const OperatorExpr lhs(dim, {ra, rb, ra});
  const OperatorExpr rhs(dim, {rb, ra, rb});
  VerifyOptions structured;
  VerifyOptions dense;
  dense.engine = Engine::dense;
  EXPECT_TRUE(compare_operators("braid", lhs, rhs, structured).passed);
  EXPECT_TRUE(compare_operators("braid", lhs, rhs, dense).passed);

  // a deliberately wrong identity fails in both engines with the same error
  const OperatorExpr wrong(dim, {ra, rb});
  const auto s = compare_operators("wrong", lhs, wrong, structured);
  const auto d = compare_operators("wrong", lhs, wrong, dense);
  EXPECT_FALSE(s.passed);
  EXPECT_FALSE(d.passed);
  EXPECT_NEAR(s.max_error, d.max_error, 1e-12);
  ASSERT_TRUE(s.witness);
  EXPECT_GE(s.witness->row, 1u);
  EXPECT_GE(s.witness->col, 1u);
}

TEST(DenseCap, SetterOverridesDefault)
{
  const std::size_t saved = dense_cap();
  set_dense_cap(16);
  EXPECT_EQ(dense_cap(), 16u);
  EXPECT_THROW(monomial_to_dense(MonomialOperator::identity(32)), SizeError);
  set_dense_cap(saved);
}
