#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cychom/errors.hpp"
#include "cychom/lambda.hpp"

using namespace cychom;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return c;
}

LambdaMorphism compose_word(const std::vector<Generator>& word, int n) {
  LambdaMorphism acc = LambdaMorphism::identity(n);
  for (const auto& g : word) acc = compose(g.morphism, acc);
  return acc;
}

}  // namespace

TEST(Lambda, SmallHomSetSizes) {
  EXPECT_EQ(hom_set(0, 0).size(), 1U);
  EXPECT_EQ(hom_set(1, 1).size(), 6U);
  EXPECT_EQ(hom_set(1, 0).size(), 2U);
  EXPECT_EQ(gph_enumerate(0, 0).size(), 1U);
  EXPECT_EQ(gph_enumerate(0, 1).size(), 2U);
}

TEST(Lambda, HomSetCounts) {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const auto hs = hom_set(n, m);
      EXPECT_EQ(hs.size(), static_cast<std::size_t>(n + 1) * binomial(n + m + 1, n + 1)) << n << " " << m;
      EXPECT_EQ(hs.size(), hom_set_size(n, m));
      std::set<LambdaMorphism> distinct(hs.begin(), hs.end());
      EXPECT_EQ(distinct.size(), hs.size());
    }
  }
}

TEST(Lambda, AgreesWithGraphEnumeration) {
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      auto graphs = gph_enumerate(n, m);
      std::vector<CyclicGraphMorphism> ours;
      for (const auto& phi : hom_set(n, m)) ours.push_back(to_graph(phi));
      std::sort(ours.begin(), ours.end());
      EXPECT_EQ(ours, graphs) << n << " " << m;
    }
  }
}

TEST(Lambda, PathRoundTripMatchesNormalForm) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& phi : hom_set(n, m)) {
        EXPECT_EQ(LambdaMorphism::from_paths(n, m, phi.paths()), phi);
        // unique factorization: monotone part after rotation
        LambdaMorphism f(n, m, 0, phi.monotone());
        EXPECT_EQ(compose(f, LambdaMorphism::rotation_power(n, phi.rotation())), phi);
      }
    }
  }
}

TEST(Lambda, CompositionMatchesGraphSubstitution) {
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (int l = 0; l <= 2; ++l) {
        for (const auto& f : hom_set(n, m)) {
          for (const auto& g : hom_set(m, l)) {
            EXPECT_EQ(to_graph(compose(g, f)), compose_graph(to_graph(g), to_graph(f)));
          }
        }
      }
    }
  }
}

TEST(Lambda, CategoryLaws) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& f : hom_set(n, m)) {
        EXPECT_EQ(compose(LambdaMorphism::identity(m), f), f);
        EXPECT_EQ(compose(f, LambdaMorphism::identity(n)), f);
      }
    }
  }
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (int l = 0; l <= 3; ++l) {
        for (int k = 0; k <= 3; ++k) {
          if (hom_set_size(n, m) * hom_set_size(m, l) * hom_set_size(l, k) > 200000) continue;
          for (const auto& f : hom_set(n, m)) {
            for (const auto& g : hom_set(m, l)) {
              auto gf = compose(g, f);
              for (const auto& h : hom_set(l, k)) {
                ASSERT_EQ(compose(h, gf), compose(compose(h, g), f));
              }
            }
          }
        }
      }
    }
  }
}

TEST(Lambda, CompositionTableOfLambdaOneOneIsClosed) {
  auto hs = hom_set(1, 1);
  std::set<LambdaMorphism> all(hs.begin(), hs.end());
  for (const auto& f : hs) {
    for (const auto& g : hs) EXPECT_TRUE(all.count(compose(g, f)));
  }
}

TEST(Lambda, RotationsFormCyclicGroup) {
  EXPECT_EQ(cyclic_rotation(0), LambdaMorphism::identity(0));
  auto t = cyclic_rotation(2);
  EXPECT_EQ(compose(t, compose(t, t)), LambdaMorphism::identity(2));
  EXPECT_NE(compose(t, t), LambdaMorphism::identity(2));
  for (int n = 0; n <= 4; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        EXPECT_EQ(compose(LambdaMorphism::rotation_power(n, a), LambdaMorphism::rotation_power(n, b)),
                  LambdaMorphism::rotation_power(n, a + b));
      }
    }
  }
}

TEST(Lambda, FacesAndDegeneraciesAreSimplicial) {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(coface(n, i).rotation(), 0);
      EXPECT_EQ(codegeneracy(n, i).rotation(), 0);
      // sigma_i delta_i = id
      EXPECT_EQ(compose(codegeneracy(n, i), coface(n + 1, i)), LambdaMorphism::identity(n));
    }
  }
}

TEST(Lambda, CyclicOperatorConvention) {
  // tau . delta_0 = delta_n, which makes d_0 c = d_n on cyclic modules
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(compose(cyclic_rotation(n), coface(n, 0)), coface(n, n));
  }
}

TEST(Lambda, NormalFormWordsEvaluateBack) {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& phi : hom_set(n, m)) {
        EXPECT_EQ(compose_word(normal_form_word(phi), n), phi) << phi.to_string();
      }
    }
  }
}

TEST(Lambda, RejectsBadInput) {
  EXPECT_THROW(LambdaMorphism(1, 1, 0, {1, 0}), RangeError);
  EXPECT_THROW(compose(LambdaMorphism::identity(1), LambdaMorphism::identity(2)), DimensionError);
  EXPECT_THROW(gph_enumerate(4, 0), RangeError);
}
