#include <gtest/gtest.h>

#include "cychom/cyclic_module.hpp"
#include "cychom/errors.hpp"

using namespace cychom;

namespace {

const RingSpec Z = RingSpec::integers();

void expect_zero(const SparseMatrix& m, const std::string& what) { EXPECT_TRUE(m.is_zero()) << what; }

}  // namespace

TEST(CyclicModule, RepresentableRanksAreHomSets) {
  auto m = representable_module(Z, 2, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(m.rank(n), hom_set_size(n, 2));
}

TEST(CyclicModule, RepresentablesAreFunctors) {
  for (int m = 0; m <= 2; ++m) {
    auto mod = representable_module(Z, m, 3);
    EXPECT_TRUE(check_functoriality(mod).empty()) << m;
  }
  EXPECT_TRUE(check_functoriality(constant_module(Z, 4)).empty());
}

TEST(CyclicModule, ActionMatchesComposition) {
  // M(phi) sends the basis element g to g . phi
  auto mod = representable_module(Z, 1, 2);
  for (int n = 0; n <= 2; ++n) {
    for (int k = 0; k <= 2; ++k) {
      const auto src = hom_set(k, 1);
      const auto dst = hom_set(n, 1);
      for (const auto& phi : hom_set(n, k)) {
        const SparseMatrix a = mod.action(phi);
        for (std::size_t j = 0; j < src.size(); ++j) {
          const auto image = compose(src[j], phi);
          const auto pos = std::find(dst.begin(), dst.end(), image) - dst.begin();
          EXPECT_EQ(a.at(static_cast<std::size_t>(pos), j), Scalar(1));
          EXPECT_EQ(a.column(j).size(), 1U);
        }
      }
    }
  }
}

TEST(CyclicModule, CorruptedFaceIsDetected) {
  auto mod = representable_module(Z, 1, 2);
  SparseMatrix f = mod.face(2, 1);
  mod.set_face(2, 1, f + f);
  EXPECT_FALSE(check_functoriality(mod).empty());
}

TEST(CyclicModule, OperatorIdentities) {
  for (int m = 0; m <= 2; ++m) {
    auto mod = representable_module(Z, m, 4);
    for (int n = 0; n <= 3; ++n) {
      auto ob = derived_operators(mod, n);
      const auto tag = std::to_string(m) + "/" + std::to_string(n);
      if (n >= 1) {
        expect_zero(hochschild_b(mod, n - 1) * ob.b, "b^2 " + tag);
        expect_zero(b_prime(mod, n - 1) * ob.b_prime, "b'^2 " + tag);
        // b(1 - t) = (1 - t) b'  and  b' N = N b
        const auto one = SparseMatrix::identity(Z, mod.rank(n));
        const auto one_below = SparseMatrix::identity(Z, mod.rank(n - 1));
        EXPECT_EQ(ob.b * (one - ob.t), (one_below - t_operator(mod, n - 1)) * ob.b_prime) << tag;
        EXPECT_EQ(ob.b_prime * ob.norm, norm_operator(mod, n - 1) * ob.b) << tag;
      }
      EXPECT_TRUE(power(ob.t, static_cast<unsigned>(n + 1)).is_identity()) << tag;
      if (n + 2 <= 4) {
        auto up = derived_operators(mod, n + 1);
        expect_zero(up.B * ob.B, "B^2 " + tag);
        // bB + Bb = 0
        SparseMatrix anti = up.b * ob.B;
        if (n >= 1) anti = anti + connes_B(mod, n - 1) * ob.b;
        expect_zero(anti, "bB+Bb " + tag);
        // s_{-1} is a contraction of b'
        SparseMatrix h = up.b_prime * ob.s_minus1;
        if (n >= 1) h = h + s_minus1(mod, n - 1) * ob.b_prime;
        EXPECT_TRUE(h.is_identity()) << "contraction " << tag;
      }
    }
  }
}

TEST(CyclicModule, NormalizedComplexHasSameHomology) {
  for (int m = 0; m <= 1; ++m) {
    auto mod = representable_module(Z, m, 4);
    auto full = hochschild_chain_complex(mod, false);
    auto norm = hochschild_chain_complex(mod, true);
    EXPECT_TRUE(check_complex(full).empty());
    EXPECT_TRUE(check_complex(norm).empty());
    // top degree is truncated, compare below it
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(homology(full, n), homology(norm, n)) << m << " " << n;
    EXPECT_LE(norm.rank(3), full.rank(3));
  }
}

TEST(CyclicModule, CircleModel) {
  auto c = circle_complex(Z);
  EXPECT_EQ(c.lo(), 0);
  EXPECT_EQ(c.hi(), 1);
  EXPECT_EQ(c.rank(0), 1U);
  EXPECT_EQ(c.rank(1), 1U);
  EXPECT_TRUE(c.d(1).is_zero());
  EXPECT_EQ(homology(c, 0), HomologyGroup::abelian(1, {}));
  EXPECT_EQ(homology(c, 1), HomologyGroup::abelian(1, {}));
}

TEST(CyclicModule, RepresentableHasCircleHomology) {
  auto c = hochschild_chain_complex(representable_module(Z, 1, 4), true);
  EXPECT_EQ(homology(c, 0), HomologyGroup::abelian(1, {}));
  EXPECT_EQ(homology(c, 1), HomologyGroup::abelian(1, {}));
  EXPECT_EQ(homology(c, 2), HomologyGroup::abelian(0, {}));
  EXPECT_EQ(homology(c, 3), HomologyGroup::abelian(0, {}));
}

TEST(CyclicModule, DirectSumAndReduction) {
  auto a = representable_module(Z, 0, 3);
  auto s = direct_sum(a, constant_module(Z, 3));
  EXPECT_EQ(s.rank(2), a.rank(2) + 1);
  EXPECT_TRUE(check_functoriality(s).empty());
  auto r = s.reduce_to(RingSpec::prime_field(3));
  EXPECT_TRUE(check_functoriality(r).empty());
  EXPECT_EQ(s.truncated(1).truncation(), 1);
}

TEST(CyclicModule, JsonRoundTrip) {
  auto a = representable_module(RingSpec::prime_field(5), 1, 2);
  auto b = cyclic_module_from_json(cyclic_module_to_json(a));
  EXPECT_EQ(b.ring(), a.ring());
  for (int n = 0; n <= 2; ++n) {
    EXPECT_EQ(b.cyclic(n), a.cyclic(n));
    for (int i = 0; n >= 1 && i <= n; ++i) EXPECT_EQ(b.face(n, i), a.face(n, i));
    for (int i = 0; n < 2 && i <= n; ++i) EXPECT_EQ(b.degeneracy(n, i), a.degeneracy(n, i));
  }
  EXPECT_THROW(cyclic_module_from_json("{\"ring\": 3}"), ParseError);
  EXPECT_THROW(cyclic_module_from_json("not json"), ParseError);
}

TEST(CyclicModule, RejectsBadAccess) {
  auto a = constant_module(Z, 2);
  EXPECT_THROW(a.face(0, 0), RangeError);
  EXPECT_THROW(a.degeneracy(2, 0), RangeError);
  EXPECT_THROW(a.rank(3), RangeError);
  EXPECT_THROW(a.set_face(1, 0, SparseMatrix(Z, 2, 2)), DimensionError);
}
