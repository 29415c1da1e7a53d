#include <gtest/gtest.h>

#include <functional>

#include "cychom/algebra_io.hpp"
#include "cychom/errors.hpp"
#include "cychom/hochschild.hpp"

using namespace cychom;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec F2 = RingSpec::prime_field(2);

std::string data(const std::string& name) { return std::string(CYCHOM_DATA_DIR) + "/algebras/" + name; }

// tensors as explicit digit vectors, independent of the index arithmetic
using Tensor = std::vector<std::size_t>;

std::size_t encode(const Tensor& t, std::size_t d) {
  std::size_t idx = 0;
  for (auto a : t) idx = idx * d + a;
  return idx;
}

Tensor decode(std::size_t idx, std::size_t d, int slots) {
  Tensor t(static_cast<std::size_t>(slots));
  for (int s = slots - 1; s >= 0; --s) {
    t[static_cast<std::size_t>(s)] = idx % d;
    idx /= d;
  }
  return t;
}

SparseMatrix oracle_face(const AlgebraPresentation& a, int n, int i) {
  const std::size_t d = a.dim();
  std::size_t cols = 1;
  for (int k = 0; k <= n; ++k) cols *= d;
  std::vector<SparseMatrix::Triplet> trips;
  for (std::size_t idx = 0; idx < cols; ++idx) {
    Tensor t = decode(idx, d, n + 1);
    const std::size_t x = i < n ? t[i] : t[n];
    const std::size_t y = i < n ? t[i + 1] : t[0];
    for (std::size_t k = 0; k < d; ++k) {
      if (a.mu(x, y, k).is_zero()) continue;
      Tensor out;
      if (i < n) {
        out.assign(t.begin(), t.begin() + i);
        out.push_back(k);
        out.insert(out.end(), t.begin() + i + 2, t.end());
      } else {
        out.push_back(k);
        out.insert(out.end(), t.begin() + 1, t.end() - 1);
      }
      trips.push_back({encode(out, d), idx, a.mu(x, y, k)});
    }
  }
  return SparseMatrix::from_triplets(a.ring(), cols / d, cols, trips);
}

ChainComplex hochschild(const AlgebraPresentation& a, int truncation) {
  return hochschild_chain_complex(cyclic_nerve(a, truncation), false);
}

}  // namespace

TEST(Algebra, BundledConstructorsAreValid) {
  EXPECT_TRUE(validate_algebra(ground_algebra(Z)).empty());
  EXPECT_TRUE(validate_algebra(dual_numbers(Z)).empty());
  EXPECT_TRUE(validate_algebra(matrix_algebra(Z, 2)).empty());
  EXPECT_TRUE(validate_algebra(matrix_algebra(Z, 3)).empty());
  EXPECT_TRUE(validate_algebra(upper_triangular_algebra(Z, 3)).empty());
  EXPECT_TRUE(validate_algebra(cyclic_group_algebra(F2, 4)).empty());
  EXPECT_TRUE(validate_algebra(product_algebra(dual_numbers(Z), matrix_algebra(Z, 2))).empty());
}

TEST(Algebra, MatrixUnitRelations) {
  auto m = matrix_algebra(Z, 2);
  // E12 E21 = E11, E21 E12 = E22, E12 E12 = 0
  EXPECT_EQ(m.mu(1, 2, 0), Scalar(1));
  EXPECT_EQ(m.mu(2, 1, 3), Scalar(1));
  EXPECT_TRUE(m.product(1, 1).empty());
}

TEST(Algebra, PerturbedConstantIsReported) {
  auto m = matrix_algebra(Z, 2);
  m.set_mu(1, 2, 3, Scalar(1));
  auto report = validate_algebra(m);
  ASSERT_FALSE(report.empty());
  EXPECT_NE(report.front().find("associativity"), std::string::npos);
  auto u = dual_numbers(Z);
  u.set_unit({Scalar(1), Scalar(1)});
  EXPECT_FALSE(validate_algebra(u).empty());
  EXPECT_THROW(cyclic_nerve(m, 2), AlgebraError);
}

TEST(Algebra, RandomAlgebrasAreReproducibleAndAssociative) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto a = random_associative_algebra(s, 1 + s % 3);
    auto b = random_associative_algebra(s, 1 + s % 3);
    EXPECT_TRUE(validate_algebra(a).empty()) << s;
    EXPECT_EQ(format_algebra(a), format_algebra(b));
  }
}

TEST(CyclicNerve, RanksArePowers) {
  auto m = cyclic_nerve(dual_numbers(Z), 3);
  EXPECT_EQ(m.rank(0), 2U);
  EXPECT_EQ(m.rank(1), 4U);
  EXPECT_EQ(m.rank(2), 8U);
  EXPECT_EQ(m.rank(3), 16U);
  auto g = cyclic_nerve(ground_algebra(Z), 4);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(g.rank(n), 1U);
}

TEST(CyclicNerve, GroundRingGivesConstantModule) {
  auto g = cyclic_nerve(ground_algebra(Z), 3);
  auto c = constant_module(Z, 3);
  EXPECT_EQ(cyclic_module_to_json(g), cyclic_module_to_json(c));
}

TEST(CyclicNerve, FacesMatchTensorOracle) {
  for (auto a : {random_associative_algebra(5, 3), upper_triangular_algebra(Z, 2), dual_numbers(F2)}) {
    auto m = cyclic_nerve(a, 3);
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i <= n; ++i) EXPECT_EQ(m.face(n, i), oracle_face(a, n, i)) << n << " " << i;
    }
  }
}

TEST(CyclicNerve, IsACyclicModule) {
  std::vector<AlgebraPresentation> algebras{dual_numbers(Z), matrix_algebra(F2, 2), upper_triangular_algebra(Z, 2),
                                            cyclic_group_algebra(Z, 3)};
  for (std::uint64_t s = 0; s < 6; ++s) algebras.push_back(random_associative_algebra(100 + s, 2 + s % 2));
  for (const auto& a : algebras) {
    auto m = cyclic_nerve(a, 3);
    auto bad = check_functoriality(m);
    EXPECT_TRUE(bad.empty()) << format_algebra(a) << (bad.empty() ? "" : bad.front());
  }
}

TEST(CyclicNerve, SizeCap) {
  EXPECT_THROW(cyclic_nerve(matrix_algebra(Z, 2), 7), SizeCapError);
  EXPECT_NO_THROW(cyclic_nerve(matrix_algebra(Z, 2), 6));
  EXPECT_THROW(cyclic_nerve(dual_numbers(Z), 5, 40), SizeCapError);
}

TEST(HochschildHomology, DegreeZeroOfCommutativeAlgebraIsA) {
  for (auto a : {dual_numbers(Z), cyclic_group_algebra(Z, 3), random_associative_algebra(11, 2)}) {
    auto c = hochschild(a, 2);
    EXPECT_TRUE(c.d(1).is_zero());
    EXPECT_EQ(homology(c, 0), HomologyGroup::abelian(a.dim(), {}));
  }
}

TEST(HochschildHomology, DualNumbersMatchPeriodicResolution) {
  // k[x]/(x^2) has the periodic bimodule resolution with maps x(1) - (1)x
  // and x(1) + (1)x; on A they become 0 and multiplication by 2x
  for (auto ring : {RingSpec::rationals(), F2, RingSpec::prime_field(3), Z}) {
    auto a = dual_numbers(ring);
    SparseMatrix two_x = SparseMatrix::from_dense(ring, {{Scalar(0), Scalar(0)}, {Scalar(2), Scalar(0)}});
    SparseMatrix zero(ring, 2, 2);
    std::vector<SparseMatrix> diffs{SparseMatrix(ring, 0, 2)};
    for (int n = 1; n <= 5; ++n) diffs.push_back(n % 2 == 1 ? zero : two_x);
    ChainComplex periodic(ring, 0, std::vector<std::size_t>(6, 2), diffs);
    auto c = hochschild(a, 5);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(homology(c, n), homology(periodic, n)) << ring.name() << " " << n;
  }
}

TEST(HochschildHomology, MoritaInvarianceForTwoByTwo) {
  for (auto ring : {F2, RingSpec::prime_field(3)}) {
    auto big = hochschild(matrix_algebra(ring, 2), 4);
    auto small = hochschild(ground_algebra(ring), 4);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(homology(big, n), homology(small, n)) << ring.name() << " " << n;
  }
}

TEST(HochschildHomology, AdditiveOnProducts) {
  auto a = dual_numbers(F2);
  auto b = cyclic_group_algebra(F2, 3);
  auto ab = hochschild(product_algebra(a, b), 4);
  auto ca = hochschild(a, 4);
  auto cb = hochschild(b, 4);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(homology(ab, n).dimension(), homology(ca, n).dimension() + homology(cb, n).dimension()) << n;
  }
}

TEST(AlgebraFile, BundledFilesParse) {
  for (const char* name : {"ground.alg", "dual_numbers.alg", "group_c2.alg", "group_c3.alg", "matrix2.alg", "upper_triangular2.alg"}) {
    EXPECT_NO_THROW(parse_algebra_file(data(name))) << name;
  }
  auto g = parse_algebra_file(data("ground.alg"));
  EXPECT_EQ(g.dim(), 1U);
  auto m = parse_algebra_file(data("matrix2.alg"));
  auto ref = matrix_algebra(Z, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m.product(i, j), ref.product(i, j));
  }
  auto f5 = parse_algebra_file(data("dual_numbers.alg"), RingSpec::prime_field(5));
  EXPECT_EQ(f5.ring(), RingSpec::prime_field(5));
}

TEST(AlgebraFile, RoundTrip) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto a = random_associative_algebra(s, 3);
    auto b = parse_algebra(format_algebra(a));
    EXPECT_EQ(format_algebra(b), format_algebra(a));
  }
  auto q = parse_algebra("ring: Q\ndim: 2\nbasis: 1 x\nunit: 1 0\nmul: x x -> 1/2*1 - x\n");
  EXPECT_EQ(q.mu(1, 1, 0), Scalar::parse("1/2"));
  EXPECT_EQ(q.mu(1, 1, 1), Scalar(-1));
}

TEST(AlgebraFile, ErrorsCarryLines) {
  auto line_of = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("ring: Z\ndim: 2\nbasis: 1 x\nunit: 1 0\nmul: x y -> 0\n"), 5);
  EXPECT_EQ(line_of("ring: Z\ndim: two\n"), 2);
  EXPECT_EQ(line_of("ring: Z\n# fine\nbogus\n"), 3);
  EXPECT_EQ(line_of("ring: R\n"), 1);
  EXPECT_EQ(line_of("ring: Z\ndim: 2\nbasis: 1 x\nunit: 1 0\nmul: x x -> 2*x +\n"), 5);
  EXPECT_EQ(line_of("ring: Z\ndim: 2\nbasis: 1 x\nunit: 1 0\nmul: x x -> 1/2*x\n"), 5);
  EXPECT_THROW(parse_algebra("ring: Z\ndim: 2\n"), ParseError);
  EXPECT_THROW(parse_algebra_file("/nonexistent.alg"), ParseError);
}

TEST(AlgebraFile, NonAssociativeNamesTriple) {
  try {
    parse_algebra("ring: Z\ndim: 3\nbasis: 1 x y\nunit: 1 0 0\nmul: x x -> y\nmul: x y -> 1\n");
    FAIL() << "accepted a non-associative table";
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity fails for"), std::string::npos);
  }
}
