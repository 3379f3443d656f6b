#include <gtest/gtest.h>

#include <random>

#include "braidforge/braid.hpp"
#include "support.hpp"

using namespace braidforge;
using braidforge::testing::max_abs;
using braidforge::testing::random_state;

namespace {

BraidWord random_word(int strands, int length, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::vector<BraidLetter> letters;
  for (int i = 0; i < length; ++i)
    letters.push_back({idx(rng), (rng() & 1) ? 1 : -1});
  return BraidWord(strands, letters);
}

}  // namespace

TEST(BraidWord, ParseAndPrint)
{
  const auto w = BraidWord::parse("b1 b2^-1  b1", 3);
  ASSERT_EQ(w.letters().size(), 3u);
  EXPECT_EQ(w.letters()[1], (BraidLetter{2, -1}));
  EXPECT_EQ(w.str(), "b1 b2^-1 b1");
  EXPECT_EQ(BraidWord::parse(w.str(), 3), w);
  EXPECT_TRUE(BraidWord::parse("  ", 4).empty());
  EXPECT_EQ(w.inverse().str(), "b1^-1 b2 b1^-1");
  EXPECT_THROW(BraidWord::parse("b3", 3), Error);
  EXPECT_THROW(BraidWord::parse("b0", 3), Error);
  EXPECT_THROW(BraidWord::parse("x1", 3), Error);
  EXPECT_THROW(BraidWord::parse("b1^2", 3), Error);
}

TEST(BraidGenerator, ThreeQubitMatchesPrintedB8)
{
  const BraidRep rep(RepSpec::class2(1, 3, 1));
  const DenseMatrix b = braid_generator(rep, 1).to_dense();
  EXPECT_LE(max_abs(b - braidforge::testing::printed_b8_times_sqrt2() / kSqrt2), 1e-15);
}

TEST(ApplyWord, SmallCases)
{
  const BraidRep rep(RepSpec::class2(2, 3, 2));
  std::mt19937_64 rng(3);
  const StateVector v = random_state(rep.dim(), rng);
  EXPECT_LE(max_abs(apply_word(rep, BraidWord(3, {}), v) - v), 0.0);
  EXPECT_LE(max_abs(apply_word(rep, BraidWord::parse("b1 b1^-1", 3), v) - v), 1e-14);

  const BraidRep b8(RepSpec::class2(1, 3, 1));
  StateVector expected = StateVector::Zero(8);
  expected(0) = kInvSqrt2;
  expected(7) = -kInvSqrt2;
  EXPECT_LE(max_abs(apply_word(b8, BraidWord::parse("b1", 2), basis_state(8, 1)) - expected),
            1e-15);
}

TEST(ApplyWord, RightmostLetterActsFirst)
{
  const BraidRep rep(RepSpec::class2(3, 3, 2));
  const auto w = BraidWord::parse("b1 b2 b3^-1", 4);
  const DenseMatrix expected = braid_generator(rep, 1).to_dense() *
                               braid_generator(rep, 2).to_dense() *
                               braid_generator(rep, 3, -1).to_dense();
  EXPECT_LE(max_abs(word_matrix(rep, w) - expected), 1e-13);
  std::mt19937_64 rng(4);
  const StateVector v = random_state(rep.dim(), rng);
  EXPECT_LE(max_abs(apply_word(rep, w, v) - expected * v), 1e-13);
}

TEST(ApplyWord, HomomorphismOnRandomWords)
{
  const BraidRep rep(RepSpec::class1(3, 1));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_word(4, 6, rng), b = random_word(4, 5, rng);
    std::vector<BraidLetter> ab = a.letters();
    ab.insert(ab.end(), b.letters().begin(), b.letters().end());
    EXPECT_LE(max_abs(word_matrix(rep, BraidWord(4, ab)) - word_matrix(rep, a) * word_matrix(rep, b)),
              1e-12);
    const StateVector v = random_state(rep.dim(), rng);
    EXPECT_LE(max_abs(apply_word(rep, a.inverse(), apply_word(rep, a, v)) - v), 1e-12);
  }
}

TEST(BraidRelations, AdmissibleSpecsPass)
{
  const std::vector<RepSpec> specs{RepSpec::class2(2, 3, 2), RepSpec::class2(5, 3, 2),
                                   RepSpec::class2(4, 4, 2), RepSpec::class2(1, 2, 1),
                                   RepSpec::class1(3, 1),    RepSpec::class1(2, 2)};
  for (const auto& s : specs) {
    const BraidRep rep(s);
    const auto r = verify_braid_relations(rep);
    EXPECT_TRUE(r.passed()) << s.str();
    EXPECT_LE(r.max_error(), 1e-12) << s.str();
    EXPECT_TRUE(conjugation_check(rep).passed()) << s.str();
  }
}

TEST(BraidRelations, EnginesAgree)
{
  const BraidRep rep(RepSpec::class2(3, 3, 2));
  VerifyOptions dense;
  dense.engine = Engine::dense;
  const auto a = verify_braid_relations(rep), b = verify_braid_relations(rep, dense);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
  }
  EXPECT_TRUE(conjugation_check(rep, dense).passed());
}

TEST(BraidRelations, NarrowStrideFailsFarCommutation)
{
  const BraidRep rep(RepSpec::class2(3, 4, 1));
  for (Engine e : {Engine::structured, Engine::dense}) {
    VerifyOptions opts;
    opts.engine = e;
    const auto r = verify_braid_relations(rep, opts);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.find("far-commutation")->passed);
    EXPECT_TRUE(r.find("braid-relation")->passed);
    EXPECT_TRUE(r.find("unitarity")->passed);
    EXPECT_TRUE(r.find("square-equals-phi")->passed);
  }
}

TEST(Gybe, HoldsForOverlaps)
{
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k < N; ++k)
      EXPECT_TRUE(verify_gybe(N, k).passed()) << N << " " << k;
  VerifyOptions dense;
  dense.engine = Engine::dense;
  EXPECT_TRUE(verify_gybe(3, 2, dense).passed());
  EXPECT_THROW(verify_gybe(3, 3), DomainError);
  EXPECT_THROW(verify_gybe(1, 1), DomainError);
  EXPECT_THROW(verify_gybe(3, 0), DomainError);
}

TEST(Cosets, CountIsFactorial)
{
  const std::size_t expected[] = {2, 6, 24};
  for (int n = 2; n <= 4; ++n) {
    const BraidRep rep(RepSpec::class2(n - 1, 2, 1));
    const CosetCount c = count_cosets(rep);
    EXPECT_EQ(c.subgroup_order, std::size_t{1} << n);
    EXPECT_EQ(c.group_order, c.subgroup_order * c.cosets);
    EXPECT_EQ(c.cosets, expected[n - 2]) << n;
  }
  EXPECT_THROW(count_cosets(BraidRep(RepSpec::class2(3, 2, 1)), 10), SizeError);
}

TEST(Conjugation, RandomWordsStayInImage)
{
  const BraidRep rep(RepSpec::class2(3, 3, 2));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto w = random_word(4, 8, rng);
    const DenseMatrix u = word_matrix(rep, w);
    for (int i = 1; i <= 3; ++i) {
      const auto g = conjugate_in_image(rep, w, i);
      ASSERT_TRUE(g) << w.str() << " i=" << i;
      const DenseMatrix lhs = u * monomial_to_dense(rep.phi(i)) * u.adjoint();
      EXPECT_LE(max_abs(lhs - monomial_to_dense(rep_of_element(rep.phis(), *g))), 1e-10);
    }
  }
  const auto g = conjugate_in_image(rep, BraidWord::parse("b1", 4), 2);
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, GroupElement::generator(3, 1) * GroupElement::generator(3, 2));
  EXPECT_EQ(conjugate_in_image(rep, BraidWord::parse("b1", 4), 3), GroupElement::generator(3, 3));
}
