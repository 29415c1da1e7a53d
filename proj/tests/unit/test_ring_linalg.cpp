#include <gtest/gtest.h>

#include <random>

#include "cychom/errors.hpp"
#include "cychom/linalg.hpp"
#include "oracles.hpp"

using namespace cychom;

namespace {

const RingSpec ZZ = RingSpec::integers();

SparseMatrix dense_z(const std::vector<std::vector<Scalar>>& d, std::size_t cols) {
  return SparseMatrix::from_dense(ZZ, d.size(), cols, d);
}

bool is_diagonal_chain(const SparseMatrix& d) {
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (const auto& e : d.column(j)) {
      if (e.row != j || e.value.sign() < 0) return false;
    }
  }
  Scalar prev(1);
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    Scalar x = d.at(i, i);
    if (prev.is_zero() && !x.is_zero()) return false;
    if (!x.is_zero() && !divides(prev, x)) return false;
    prev = x;
  }
  return true;
}

}  // namespace

TEST(Scalar, PromotesOnOverflowAndDemotes) {
  Scalar big(std::numeric_limits<long long>::max());
  Scalar sum = big + Scalar(1);
  EXPECT_FALSE(sum.is_small());
  EXPECT_EQ(sum.to_string(), "9223372036854775808");
  Scalar back = sum - Scalar(1);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_EQ(Scalar::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Scalar::parse("-8/4"), Scalar(-2));
  EXPECT_THROW(Scalar::parse("1.5"), ParseError);
}

TEST(Scalar, FloorDivisionAndGcd) {
  EXPECT_EQ(floor_div(Scalar(-7), Scalar(2)), Scalar(-4));
  EXPECT_EQ(floor_mod(Scalar(-7), Scalar(2)), Scalar(1));
  EXPECT_EQ(gcd(Scalar(-12), Scalar(18)), Scalar(6));
  auto x = extended_gcd(Scalar(12), Scalar(-18));
  EXPECT_EQ(x.g, Scalar(6));
  EXPECT_EQ(x.s * Scalar(12) + x.t * Scalar(-18), Scalar(6));
}

TEST(RingSpec, ParsesAndValidates) {
  EXPECT_EQ(RingSpec::parse("Z"), RingSpec::integers());
  EXPECT_EQ(RingSpec::parse("q"), RingSpec::rationals());
  EXPECT_EQ(RingSpec::parse("F5"), RingSpec::prime_field(5));
  EXPECT_EQ(RingSpec::parse("GF(3)"), RingSpec::prime_field(3));
  EXPECT_THROW(RingSpec::parse("F4"), RingError);
  EXPECT_THROW(RingSpec::parse("R"), ParseError);
}

TEST(RingSpec, PrimeFieldArithmetic) {
  RingSpec f7 = RingSpec::prime_field(7);
  EXPECT_EQ(f7.from(Scalar(-1)), Scalar(6));
  EXPECT_EQ(f7.from(Scalar::parse("1/3")), Scalar(5));
  EXPECT_THROW(f7.from(Scalar::parse("1/7")), RingError);
  for (int a = 1; a < 7; ++a) EXPECT_EQ(f7.mul(Scalar(a), f7.inverse(Scalar(a))), Scalar(1));
  EXPECT_THROW(ZZ.from(Scalar::parse("1/2")), RingError);
  EXPECT_FALSE(ZZ.is_unit(Scalar(2)));
}

TEST(SparseMatrix, BasicAlgebra) {
  auto a = dense_z({{1, 2}, {0, 3}}, 2);
  auto b = dense_z({{0, 1}, {1, 0}}, 2);
  EXPECT_EQ(a * b, dense_z({{2, 1}, {3, 0}}, 2));
  EXPECT_EQ(a + b, dense_z({{1, 3}, {1, 3}}, 2));
  EXPECT_EQ((a - a).nnz(), 0U);
  EXPECT_EQ(a.transpose(), dense_z({{1, 0}, {2, 3}}, 2));
  EXPECT_EQ(power(b, 2), SparseMatrix::identity(ZZ, 2));
  auto f2 = a.reduce_to(RingSpec::prime_field(2));
  EXPECT_EQ(f2.nnz(), 2U);
  EXPECT_THROW(a * SparseMatrix(ZZ, 3, 1), DimensionError);
  EXPECT_THROW(a * f2, RingError);
}

TEST(SparseMatrix, EmptyShapes) {
  SparseMatrix a(ZZ, 0, 3);
  SparseMatrix b(ZZ, 3, 0);
  EXPECT_EQ((b * a).rows(), 3U);
  EXPECT_TRUE((b * a).is_zero());
  EXPECT_EQ((a * b).rows(), 0U);
  EXPECT_EQ(rank(a), 0U);
  EXPECT_EQ(rank_kernel_image(a).kernel_basis.cols(), 3U);
}

TEST(SmithNormalForm, DiagonalTwoThree) {
  auto sf = smith_normal_form(dense_z({{2, 0}, {0, 3}}, 2));
  EXPECT_EQ(sf.D, dense_z({{1, 0}, {0, 6}}, 2));
  auto oracle = oracle::invariant_factors_by_minors({{2, 0}, {0, 3}});
  EXPECT_EQ(sf.diagonal, oracle);
}

TEST(SmithNormalForm, IdentityAndZero) {
  auto sf = smith_normal_form(SparseMatrix::identity(ZZ, 4));
  EXPECT_TRUE(sf.D.is_identity());
  EXPECT_TRUE(sf.U.is_identity());
  EXPECT_TRUE(sf.V.is_identity());
  auto z = smith_normal_form(SparseMatrix(ZZ, 2, 3));
  EXPECT_TRUE(z.D.is_zero());
  EXPECT_EQ(z.D.rows(), 2U);
  EXPECT_EQ(z.D.cols(), 3U);
}

TEST(SmithNormalForm, RejectsOtherRings) {
  EXPECT_THROW(smith_normal_form(SparseMatrix::identity(RingSpec::rationals(), 2)), RingError);
}

TEST(SmithNormalForm, RandomMatricesAgainstMinorsOracle) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 8;
    const std::size_t c = 1 + rng() % 8;
    auto d = oracle::random_dense(rng, r, c, 5, 0.6);
    auto a = dense_z(d, c);
    auto sf = smith_normal_form(a);
    ASSERT_EQ(sf.U * a * sf.V, sf.D);
    ASSERT_TRUE(is_diagonal_chain(sf.D));
    ASSERT_TRUE(oracle::det_cofactor(sf.U.to_dense()).abs().is_one());
    ASSERT_TRUE(oracle::det_cofactor(sf.V.to_dense()).abs().is_one());
    ASSERT_TRUE((sf.U * sf.U_inverse).is_identity());
    EXPECT_EQ(invariant_factors(a), sf.diagonal);
    if (r <= 5 && c <= 5) {
      EXPECT_EQ(sf.diagonal, oracle::invariant_factors_by_minors(d));
    }
  }
}

TEST(Rank, TransposeAndNullity) {
  std::mt19937_64 rng(7);
  for (std::int64_t p : {0, 2, 3}) {
    RingSpec ring = p == 0 ? RingSpec::rationals() : RingSpec::prime_field(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = rng() % 9;
      const std::size_t c = rng() % 9;
      auto d = oracle::random_dense(rng, r, c, 3, 0.5);
      auto a = SparseMatrix::from_dense(ring, r, c, d);
      const std::size_t rk = rank(a);
      EXPECT_EQ(rk, oracle::rank_by_gauss(d, p));
      EXPECT_EQ(rk, rank(a.transpose()));
      auto ki = rank_kernel_image(a);
      EXPECT_EQ(ki.rank, rk);
      EXPECT_EQ(ki.kernel_basis.cols() + rk, c);
      EXPECT_TRUE((a * ki.kernel_basis).is_zero());
      EXPECT_EQ(ki.image_basis.cols(), rk);
    }
  }
}

TEST(RankKernelImage, SmallExamples) {
  RingSpec f2 = RingSpec::prime_field(2);
  auto ki = rank_kernel_image(SparseMatrix::from_dense(f2, {{1, 1}}));
  EXPECT_EQ(ki.rank, 1U);
  ASSERT_EQ(ki.kernel_basis.cols(), 1U);
  EXPECT_EQ(ki.kernel_basis.at(0, 0), Scalar(1));
  EXPECT_EQ(ki.kernel_basis.at(1, 0), Scalar(1));

  auto z = rank_kernel_image(SparseMatrix(ZZ, 2, 2));
  EXPECT_EQ(z.rank, 0U);
  EXPECT_EQ(z.kernel_basis.cols(), 2U);

  auto two = rank_kernel_image(dense_z({{2}}, 1));
  EXPECT_EQ(two.rank, 1U);
  EXPECT_EQ(two.kernel_basis.cols(), 0U);
  EXPECT_EQ(two.image_basis.at(0, 0).abs(), Scalar(2));
}

TEST(ColumnEchelon, IntegerKernelIsALatticeBasis) {
  // kernel of [2 4 6] over Z is spanned by (2,-1,0),(3,0,-1); (1,1,-1) too
  auto a = dense_z({{2, 4, 6}}, 3);
  ColumnEchelon ce(a);
  auto k = ce.kernel_basis();
  ASSERT_EQ(k.cols(), 2U);
  ColumnEchelon kl(k);
  EXPECT_TRUE(kl.contains({Scalar(1), Scalar(1), Scalar(-1)}));
  EXPECT_TRUE(kl.contains({Scalar(-2), Scalar(1), Scalar(0)}));
  EXPECT_FALSE(ce.contains({Scalar(3)}));
  auto x = ce.solve({Scalar(4)});
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x)[0], Scalar(4));
}

TEST(QuotientGroup, Examples) {
  auto g = quotient_group(dense_z({{2}}, 1), 1);
  EXPECT_EQ(g.free_rank(), 0U);
  ASSERT_EQ(g.torsion().size(), 1U);
  EXPECT_EQ(g.torsion()[0], Scalar(2));

  auto free2 = quotient_group(SparseMatrix(ZZ, 2, 0), 2);
  EXPECT_EQ(free2.free_rank(), 2U);
  EXPECT_TRUE(free2.torsion().empty());

  auto h = quotient_group(dense_z({{1, 1}, {1, -1}}, 2), 2);
  EXPECT_EQ(h, HomologyGroup::abelian(0, {Scalar(2)}));
  EXPECT_EQ(oracle::invariant_factors_by_minors({{1, 1}, {1, -1}}), (std::vector<Scalar>{1, 2}));
}

TEST(HomologyPresentation, ClassesAndTorsion) {
  // 0 -> Z --2--> Z -> 0, homology at the target is Z/2
  auto d1 = dense_z({{2}}, 1);
  HomologyPresentation hp(ZZ, 1, SparseMatrix(ZZ, 0, 1), d1);
  EXPECT_EQ(hp.group(), HomologyGroup::abelian(0, {Scalar(2)}));
  EXPECT_EQ(hp.class_of({Scalar(3)}), std::vector<Scalar>{Scalar(1)});
  EXPECT_EQ(hp.class_of({Scalar(4)}), std::vector<Scalar>{Scalar(0)});
}

TEST(HomologyPresentation, InducedMapOfMultiplication) {
  // multiplication by 3 on Z (zero differentials) induces [3]
  HomologyPresentation hp(ZZ, 1, SparseMatrix(ZZ, 0, 1), SparseMatrix(ZZ, 1, 0));
  auto m = induced_map(hp, hp, dense_z({{3}}, 1));
  EXPECT_EQ(m.at(0, 0).abs(), Scalar(3));
}

TEST(Exactness, DetectsTorsionCokernel) {
  // Z --2--> Z --> 0 is not exact at the middle over Z, but is over Q
  auto f = dense_z({{2}}, 1);
  auto g = SparseMatrix(ZZ, 0, 1);
  EXPECT_FALSE(is_exact_at(f, g));
  EXPECT_TRUE(is_exact_at(f.reduce_to(RingSpec::rationals()), g.reduce_to(RingSpec::rationals())));
}

TEST(Determinant, MatchesCofactor) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto d = oracle::random_dense(rng, n, n, 4);
    EXPECT_EQ(determinant(d), oracle::det_cofactor(d));
  }
}
