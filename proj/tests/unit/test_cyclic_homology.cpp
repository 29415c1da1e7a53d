#include <gtest/gtest.h>

#include "cychom/cyclic_homology.hpp"
#include "cychom/errors.hpp"
#include "cychom/hochschild.hpp"
#include "oracles.hpp"

using namespace cychom;

namespace {

const RingSpec Z = RingSpec::integers();

// hand-derived operators of the constant module k: b = 1 from even degrees
// >= 2, B = 2(k+1) from even degrees k
Scalar ground_b(int k) { return (k >= 2 && k % 2 == 0) ? Scalar(1) : Scalar(0); }
Scalar ground_B(int k) { return k % 2 == 0 ? Scalar(2 * (k + 1)) : Scalar(0); }

struct Group {
  std::size_t free = 0;
  std::vector<Scalar> torsion;
};

// homology of a complex of dense integer matrices via the minors oracle
Group oracle_homology(std::size_t dim, const oracle::Dense& d_out, const oracle::Dense& d_in) {
  auto f_out = d_out.empty() || d_out[0].empty() ? std::vector<Scalar>{} : oracle::invariant_factors_by_minors(d_out);
  auto f_in = d_in.empty() || d_in[0].empty() ? std::vector<Scalar>{} : oracle::invariant_factors_by_minors(d_in);
  Group g;
  g.free = dim - f_out.size() - f_in.size();
  for (const auto& x : f_in) {
    if (!x.is_one()) g.torsion.push_back(x);
  }
  return g;
}

// Tot of the ground-ring cyclic bicomplex, degrees 0..top: basis of degree n
// is the columns p = 0..n/2
oracle::Dense ground_bc_differential(int n) {
  if (n <= 0) return {};
  const int rows = (n - 1) / 2 + 1;
  const int cols = n / 2 + 1;
  oracle::Dense d(static_cast<std::size_t>(rows), std::vector<Scalar>(static_cast<std::size_t>(cols)));
  for (int p = 0; p <= n / 2; ++p) {
    const int k = n - 2 * p;
    if (k >= 1) d[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] += ground_b(k);  // (p, k) -> (p, k-1)
    if (p >= 1) d[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(p)] += ground_B(k);  // (p, k) -> (p-1, k+1)
  }
  return d;
}

// Tot of the depth-P negative cyclic bicomplex of k in degree n: basis j with
// component C_{n+2j}, 0 <= j <= P, n + 2j >= 0
std::vector<int> bn_basis(int n, int depth) {
  std::vector<int> js;
  for (int j = 0; j <= depth; ++j) {
    if (n + 2 * j >= 0) js.push_back(j);
  }
  return js;
}

oracle::Dense ground_bn_differential(int n, int depth) {
  const auto src = bn_basis(n, depth);
  const auto dst = bn_basis(n - 1, depth);
  oracle::Dense d(dst.size(), std::vector<Scalar>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    const int j = src[c];
    const int k = n + 2 * j;
    for (std::size_t r = 0; r < dst.size(); ++r) {
      if (dst[r] == j && k >= 1) d[r][c] += ground_b(k);
      if (dst[r] == j + 1) d[r][c] += ground_B(k);
    }
  }
  return d;
}

HomologyGroup as_group(const Group& g) { return HomologyGroup::abelian(g.free, g.torsion); }

}  // namespace

TEST(CyclicBicomplex, ShapeAndIdentities) {
  auto m = cyclic_nerve(dual_numbers(Z), 5);
  auto bc = bc_bicomplex(m);
  EXPECT_TRUE(check_bicomplex(bc).empty());
  auto x = mixed_complex(m);
  EXPECT_TRUE(check_mixed(x).empty());
  // column 0 is the Hochschild complex
  auto col = column_complex(bc, 0);
  auto hoch = hochschild_chain_complex(m, false);
  for (int q = 0; q <= 5; ++q) {
    EXPECT_EQ(col.rank(q), hoch.rank(q));
    EXPECT_EQ(col.d(q), hoch.d(q));
  }
  auto g = bc_bicomplex(cyclic_nerve(ground_algebra(Z), 6));
  for (auto [p, q] : g.support()) EXPECT_EQ(g.rank(p, q), 1U);
  auto tot = cyclic_total(mixed_complex(cyclic_nerve(ground_algebra(Z), 4)));
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(tot.complex.rank(n), static_cast<std::size_t>(n / 2 + 1));
  EXPECT_TRUE(check_complex(tot.complex).empty());
}

TEST(CyclicBicomplex, NegativeColumns) {
  auto x = mixed_complex(cyclic_nerve(dual_numbers(Z), 5));
  auto bn0 = bn_bicomplex(x, 0);
  EXPECT_EQ(bn0.min_p(), 0);
  EXPECT_EQ(bn0.max_p(), 0);
  auto bn2 = bn_bicomplex(x, 2);
  auto bn4 = bn_bicomplex(x, 4);
  EXPECT_TRUE(check_bicomplex(bn4).empty());
  // the deeper one has a smaller degree window; compare on its support
  for (auto [p, q] : bn4.support()) {
    if (!bn2.contains(p, q)) continue;
    EXPECT_EQ(bn2.rank(p, q), x.rank(q - p));
    EXPECT_EQ(bn4.rank(p, q), bn2.rank(p, q));
    EXPECT_EQ(bn4.v(p, q), bn2.v(p, q));
    if (p - 1 >= -2) EXPECT_EQ(bn4.h(p, q), bn2.h(p, q));
  }
}

TEST(GroundRing, HochschildHomology) {
  auto t = hh(cyclic_nerve(ground_algebra(Z), 7), 0, 5);
  EXPECT_EQ(t.at(0), HomologyGroup::abelian(1, {}));
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(t.at(n).is_zero()) << n;
  // normalized chains of k are k in degree 0
  auto norm = hochschild_chain_complex(cyclic_nerve(ground_algebra(Z), 5), true);
  EXPECT_EQ(norm.rank(0), 1U);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(norm.rank(n), 0U);
}

TEST(GroundRing, CyclicHomologyMatchesOracle) {
  auto t = hc(cyclic_nerve(ground_algebra(Z), 8), 0, 5);
  for (int n = 0; n <= 5; ++n) {
    const auto expected = oracle_homology(static_cast<std::size_t>(n / 2 + 1), ground_bc_differential(n), ground_bc_differential(n + 1));
    EXPECT_EQ(t.at(n), as_group(expected)) << n;
    EXPECT_EQ(t.at(n), n % 2 == 0 ? HomologyGroup::abelian(1, {}) : HomologyGroup::abelian(0, {})) << n;
  }
}

TEST(GroundRing, NegativeCyclicHomologyMatchesOracle) {
  auto m = cyclic_nerve(ground_algebra(Z), hn_required_truncation(0, 10));
  auto t = hn(m, -4, 0);
  EXPECT_EQ(t.depth, 6);
  for (int n = -4; n <= 0; ++n) {
    const auto expected = oracle_homology(bn_basis(n, 6).size(), ground_bn_differential(n, 6), ground_bn_differential(n + 1, 6));
    EXPECT_EQ(t.at(n), as_group(expected)) << n;
    EXPECT_EQ(t.at(n), n % 2 == 0 ? HomologyGroup::abelian(1, {}) : HomologyGroup::abelian(0, {})) << n;
    EXPECT_TRUE(t.stabilized[static_cast<std::size_t>(n + 4)]);
  }
}

TEST(GroundRing, Periodicity) {
  auto m = cyclic_nerve(ground_algebra(Z), 7);
  for (int n : {2, 4}) {
    auto s = periodicity_map(m, n);
    ASSERT_EQ(s.matrix.rows(), 1U);
    ASSERT_EQ(s.matrix.cols(), 1U);
    EXPECT_TRUE(s.matrix.at(0, 0) == Scalar(1) || s.matrix.at(0, 0) == Scalar(-1));
  }
  auto s1 = periodicity_map(m, 1);
  EXPECT_EQ(s1.matrix.rows(), 0U);
  EXPECT_EQ(s1.matrix.cols(), 0U);
}

TEST(CyclicHomology, DegreeZeroAgrees) {
  for (auto a : {dual_numbers(Z), matrix_algebra(RingSpec::prime_field(3), 2), random_associative_algebra(3, 3)}) {
    auto m = cyclic_nerve(a, 3);
    EXPECT_EQ(hh(m, 0, 1).at(0), hc(m, 0, 1).at(0));
  }
}

TEST(CyclicHomology, TruncationSoundness) {
  auto a = dual_numbers(Z);
  auto small = hc(cyclic_nerve(a, 5), 0, 3);
  auto large = hc(cyclic_nerve(a, 7), 0, 3);
  EXPECT_EQ(small.groups, large.groups);
  auto hsmall = hh(cyclic_nerve(a, 5), 0, 3);
  auto hlarge = hh(cyclic_nerve(a, 7), 0, 3);
  EXPECT_EQ(hsmall.groups, hlarge.groups);
}

TEST(CyclicHomology, ReliableWindowIsEnforced) {
  auto m = cyclic_nerve(dual_numbers(Z), 4);
  EXPECT_THROW(hc(m, 0, 3), RangeError);
  EXPECT_THROW(hh(m, 0, 4), RangeError);
  EXPECT_NO_THROW(hc(m, 0, 2));
  EXPECT_THROW(hn(m, -2, 0), RangeError);
}

TEST(CyclicHomology, SbiSequenceIsExact) {
  for (auto ring : {RingSpec::prime_field(2), RingSpec::prime_field(5), Z}) {
    for (auto a : {ground_algebra(ring), dual_numbers(ring), cyclic_group_algebra(ring, 2), upper_triangular_algebra(ring, 2)}) {
      auto r = sbi_check(cyclic_nerve(a, 5), 0, 3);
      EXPECT_TRUE(r.passed()) << ring.name() << " " << a.dim() << (r.passed() ? "" : r.violations.front());
    }
  }
}

TEST(CyclicHomology, SbiRankBookkeeping) {
  // over a field the long exact sequence forces an alternating rank identity
  auto m = cyclic_nerve(dual_numbers(RingSpec::prime_field(2)), 6);
  auto h = hh(m, 0, 4);
  auto c = hc(m, 0, 4);
  for (int n = 2; n <= 4; ++n) {
    auto s = periodicity_map(m, n);
    EXPECT_LE(rank(s.matrix), c.at(n).dimension());
  }
  // dim HC_0 = dim HH_0 and dim HC_1 <= dim HH_1 + dim HC_{-1}
  EXPECT_EQ(c.at(0).dimension(), h.at(0).dimension());
  EXPECT_LE(c.at(1).dimension(), h.at(1).dimension());
}

TEST(CyclicHomology, HnStabilizationFlags) {
  auto m = cyclic_nerve(ground_algebra(Z), 30);
  auto t = hn(m, -2, 0, DepthSchedule{2, 6});
  EXPECT_EQ(t.depth, 2);
  EXPECT_EQ(t.stabilized, std::vector<bool>(3, true));
  EXPECT_THROW(hn(m, -2, 0, DepthSchedule{6, 6}), RangeError);
}

TEST(CyclicHomology, TableSerialization) {
  auto t = hc(cyclic_nerve(dual_numbers(Z), 6), 0, 3);
  auto json = table_to_json(t);
  EXPECT_NE(json.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(json.find("\"kind\": \"HC\""), std::string::npos);
  auto csv = table_to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "degree,free_rank,torsion,stabilized");
  EXPECT_NE(csv.find("1,0,2,"), std::string::npos);
  auto f = hc(cyclic_nerve(dual_numbers(RingSpec::prime_field(2)), 4), 0, 2);
  EXPECT_NE(table_to_json(f).find("\"dimension\""), std::string::npos);
}
