#include <gtest/gtest.h>

#include "cychom/cyclic_module.hpp"
#include "cychom/errors.hpp"
#include "cychom/lambda.hpp"
#include "cychom/verify.hpp"

using namespace cychom;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec F2 = RingSpec::prime_field(2);
const RingSpec F3 = RingSpec::prime_field(3);
const RingSpec F5 = RingSpec::prime_field(5);

std::string first_violation(const VerificationReport& r) { return r.violations.empty() ? "" : r.violations.front(); }

bool mentions(const VerificationReport& r, const std::string& what) {
  for (const auto& v : r.violations) {
    if (v.find(what) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Bicomplexes, StaircaseColumnZero) {
  const Bicomplex k = build_K(0, 4, Z);
  for (int q = 0; q <= 4; ++q) EXPECT_EQ(k.rank(0, q), static_cast<std::size_t>(q + 1));
  EXPECT_FALSE(k.contains(1, 0));
  EXPECT_EQ(k.rank(1, 1), 1u);
  EXPECT_TRUE(check_bicomplex(k).empty());
}

TEST(Bicomplexes, PeriodicShape) {
  const Bicomplex l = build_L(1, 5, Z);
  for (auto [p, q] : l.support()) EXPECT_EQ(l.rank(p, q), hom_set_size(q, 1));
  const Bicomplex m = build_M(1, 5, Z);
  for (auto [p, q] : m.support()) EXPECT_EQ(p % 2, 1);
  EXPECT_TRUE(check_bicomplex(l).empty());
  EXPECT_TRUE(check_bicomplex(m).empty());
}

TEST(Bicomplexes, Identities) {
  for (const RingSpec& ring : {Z, F2, F3}) {
    for (int m = 0; m <= 2; ++m) {
      const VerificationReport r = check_bicomplexes(m, 6, ring);
      EXPECT_TRUE(r.passed()) << ring.name() << " m=" << m << ": " << first_violation(r);
    }
  }
}

TEST(PhiPsi, ExactSequence) {
  const VerificationReport a = check_phi_psi(0, 6, Z);
  EXPECT_TRUE(a.passed()) << first_violation(a);
  const VerificationReport b = check_phi_psi(2, 5, F2);
  EXPECT_TRUE(b.passed()) << first_violation(b);
}

TEST(PhiPsi, FlippedPsiIsCaught) {
  const VerificationReport r = check_phi_psi(0, 6, Z, true);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(mentions(r, "psi is not a chain map"));
}

TEST(RowExactness, SmallCases) {
  for (int n = 0; n <= 6; ++n) {
    for (const RingSpec& ring : {Z, F2, F3}) {
      const VerificationReport r = check_row_exactness(n, 1, ring);
      EXPECT_TRUE(r.passed()) << "n=" << n << " " << ring.name() << ": " << first_violation(r);
    }
  }
  EXPECT_TRUE(check_row_exactness(2, 2, F3).passed());
}

TEST(Resolution, TotKResolvesGround) {
  const VerificationReport r = check_resolution(0, 8, Z);
  EXPECT_TRUE(r.passed()) << first_violation(r);
  const VerificationReport s = check_resolution(3, 6, F2);
  EXPECT_TRUE(s.passed()) << first_violation(s);
}

TEST(Resolution, RationalAndOddCharacteristic) {
  EXPECT_TRUE(check_resolution(1, 6, RingSpec::rationals()).passed());
  EXPECT_TRUE(check_resolution(2, 5, F3).passed());
}

TEST(DeltaGenerator, GeneratesSecondCohomology) {
  const VerificationReport z = check_delta_generator(4, Z);
  EXPECT_TRUE(z.passed()) << first_violation(z);
  const VerificationReport f5 = check_delta_generator(5, F5);
  EXPECT_TRUE(f5.passed()) << first_violation(f5);
  EXPECT_THROW(check_delta_generator(3, Z), RangeError);
}

TEST(DeltaGenerator, HorizontalMapsOfTheDual) {
  // the dual maps are those of the constant module: b alternates 0, 1, 0, ...
  // starting at level 1, and B is 2(j + 1) on even levels
  const VerificationReport r = check_delta_generator(4, Z);
  ASSERT_GE(r.witnesses.size(), 2u);
  EXPECT_EQ(r.witnesses[0], "Hom of b by level: 0 0 1 0 1");
  EXPECT_EQ(r.witnesses[1], "Hom of B by level: 2 0 6 0");
}

TEST(Naturality, GeneratorsUpToTwo) {
  const VerificationReport r = check_naturality(5, Z);
  EXPECT_TRUE(r.passed()) << first_violation(r);
  EXPECT_TRUE(check_naturality(4, F3).passed());
}

TEST(Suite, AllChecksPass) {
  for (const auto& r : verify_suite(1, 5, F2)) EXPECT_TRUE(r.passed()) << r.name << ": " << first_violation(r);
}
