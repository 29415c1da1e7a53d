#include <gtest/gtest.h>

#include "cychom/cyclic_homology.hpp"
#include "cychom/hochschild.hpp"
#include "cychom/kassel.hpp"

using namespace cychom;

namespace {

const RingSpec Z = RingSpec::integers();

bool mentions(const VerificationReport& r, const std::string& what) {
  for (const auto& v : r.violations) {
    if (v.find(what) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Qk, Shape) {
  const MixedComplex q = qk_complex(Z, 3);
  EXPECT_EQ(q.hi(), 7);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(q.rank(n), 1u);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(q.b(2 * i).at(0, 0), Scalar(1));
    EXPECT_TRUE(q.b(2 * i - 1).is_zero());
  }
  for (int i = 0; i <= 3; ++i) {
    EXPECT_EQ(q.B(2 * i).at(0, 0), Scalar(1));
    if (2 * i + 1 < 7) EXPECT_TRUE(q.B(2 * i + 1).is_zero());
  }
}

TEST(Qk, ResolutionAndSelfMap) {
  for (const RingSpec& ring : {Z, RingSpec::prime_field(2), RingSpec::prime_field(3)}) {
    for (int depth = 0; depth <= 10; ++depth) {
      const VerificationReport r = qk_check(ring, depth);
      EXPECT_TRUE(r.passed()) << ring.name() << " depth " << depth << ": "
                              << (r.violations.empty() ? "" : r.violations.front());
    }
  }
}

TEST(Qk, SelfMapSquaredShiftsByFour) {
  const MixedComplex q = qk_complex(Z, 5);
  const ChainMap s = qk_selfmap(q);
  for (int n = 0; n <= q.hi(); ++n) {
    const SparseMatrix twice = n >= 2 ? s.components.at(n - 2) * s.components.at(n) : SparseMatrix(Z, 0, 1);
    const SparseMatrix expect = n >= 4 ? SparseMatrix::identity(Z, 1) : SparseMatrix::zero(Z, twice.rows(), 1);
    EXPECT_EQ(twice, expect) << n;
  }
}

TEST(MixedFunctor, ConstantModuleOperators) {
  const MixedComplex x = mixed_complex(constant_module(Z, 8));
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(x.b(k).at(0, 0), Scalar(k % 2 == 0 ? 1 : 0)) << k;
  // B = (1 - t) s_{-1} N with t = (-1)^n: N = n + 1 or 0, then (1 - t) doubles
  for (int k = 0; k < 8; ++k) EXPECT_EQ(x.B(k).at(0, 0), Scalar(k % 2 == 0 ? 2 * (k + 1) : 0)) << k;
}

TEST(MixedFunctor, AxiomsAndAdditivity) {
  const RingSpec f3 = RingSpec::prime_field(3);
  EXPECT_TRUE(check_mixed(mixed_complex(cyclic_nerve(ground_algebra(f3), 6))).empty());
  EXPECT_TRUE(check_mixed(mixed_complex(cyclic_nerve(dual_numbers(Z), 5))).empty());

  const CyclicModule a = representable_module(Z, 1, 4);
  const CyclicModule b = cyclic_nerve(dual_numbers(Z), 4);
  const MixedComplex whole = mixed_complex(direct_sum(a, b));
  const MixedComplex parts = direct_sum(mixed_complex(a), mixed_complex(b));
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(whole.b(n), parts.b(n)) << n;
    if (n < 4) EXPECT_EQ(whole.B(n), parts.B(n)) << n;
  }
}

TEST(Kassel, TensorRanksCountColumns) {
  const MixedComplex x = mixed_complex(representable_module(Z, 1, 7));
  const QkTotal t = tensor_qk(qk_complex(Z, 4), x);
  for (int n = 0; n <= 7; ++n) {
    std::size_t expect = 0;
    for (int p = 0; 2 * p <= n; ++p) expect += x.rank(n - 2 * p);
    EXPECT_EQ(t.complex.rank(n), expect) << n;
  }
}

TEST(Kassel, IsomorphismRepresentable) {
  const CyclicModule m = representable_module(Z, 0, 6);
  for (int depth = 0; depth <= 2; ++depth) {
    const VerificationReport r = kassel_iso_check(m, depth);
    EXPECT_TRUE(r.passed()) << depth << ": " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_EQ(r.witnesses.size(), 2u);
  }
}

TEST(Kassel, IsomorphismDualNumbers) {
  const CyclicModule m = cyclic_nerve(dual_numbers(RingSpec::prime_field(2)), 5);
  for (int depth = 0; depth <= 2; ++depth) EXPECT_TRUE(kassel_iso_check(m, depth).passed()) << depth;
}

TEST(Kassel, IsomorphismRandomAlgebras) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const CyclicModule m = cyclic_nerve(random_associative_algebra(seed, 2), 4);
    EXPECT_TRUE(kassel_iso_check(m, 1).passed()) << seed;
  }
}

TEST(Kassel, CorruptedOperatorIsReported) {
  const CyclicModule m = representable_module(Z, 0, 6);
  MixedComplex x = mixed_complex(m);
  SparseMatrix bad = x.B(2);
  bad = bad + SparseMatrix::from_triplets(Z, bad.rows(), bad.cols(), {{0, 0, Scalar(1)}});
  x.set_B(2, bad);
  const VerificationReport r = kassel_iso_check(m, x, 1);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(mentions(r, "tensor: differentials differ"));
  EXPECT_TRUE(mentions(r, "hom: differentials differ"));
}

TEST(Kassel, WrongQkSignBreaksTensorSide) {
  const MixedComplex x = mixed_complex(constant_module(Z, 6));
  const MixedComplex good = qk_complex(Z, 4);
  MixedComplex flipped = good;
  flipped.set_B(2, -good.B(2));  // eps x_2 = -x_3 while b x_4 = x_3
  const Totalization tot = cyclic_total(x);
  EXPECT_EQ(tensor_qk(good, x).complex.d(4), tot.complex.d(4));
  EXPECT_NE(tensor_qk(flipped, x).complex.d(4), tot.complex.d(4));
}

TEST(Kassel, HomSideOfGroundRing) {
  const MixedComplex x = mixed_complex(constant_module(Z, 20));
  const QkTotal h = hom_qk(qk_complex(Z, 6), x, 6);
  const std::vector<HomologyGroup> got = homology_range(h.complex, -4, 0);
  for (int n = -4; n <= 0; ++n) {
    const HomologyGroup expect = n % 2 == 0 ? HomologyGroup::abelian(1, {}) : HomologyGroup::abelian(0, {});
    EXPECT_EQ(got[static_cast<std::size_t>(n + 4)], expect) << n;
  }
}

TEST(Comodule, GroundRingPeriodicityIsUnit) {
  const CyclicModule m = constant_module(Z, 8);
  const VerificationReport r = comodule_check(m, 2, 6);
  EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
  const InducedMap s = periodicity_map(m, 2);
  ASSERT_EQ(s.matrix.rows(), 1u);
  ASSERT_EQ(s.matrix.cols(), 1u);
  const Scalar e = s.matrix.at(0, 0);
  EXPECT_TRUE(e == Scalar(1) || e == Scalar(-1));
}

TEST(Comodule, AgreesWithPeriodicityOnAlgebras) {
  EXPECT_TRUE(comodule_check(cyclic_nerve(dual_numbers(Z), 6), 2, 4).passed());
  EXPECT_TRUE(comodule_check(cyclic_nerve(cyclic_group_algebra(RingSpec::prime_field(3), 3), 5), 2, 3).passed());
}
