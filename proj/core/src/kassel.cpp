#include "cychom/kassel.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "cychom/cyclic_homology.hpp"
#include "cychom/errors.hpp"
#include "cychom/linalg.hpp"

namespace cychom {

namespace {

// d x_{2i} = beta_i eps x_{2i-2}; beta_0 unused
std::vector<Scalar> qk_coefficients(const MixedComplex& q) {
  if (q.lo() != 0) throw DimensionError("Qk must start in degree 0");
  const RingSpec& ring = q.ring();
  const int gens = (q.hi() + 1) / 2;  // x_0, x_2, ..., each with eps x_{2i} present
  std::vector<Scalar> beta(static_cast<std::size_t>(gens), Scalar(0));
  for (int n = 0; n <= q.hi(); ++n) {
    if (q.rank(n) != 1) throw DimensionError("Qk must have rank one in every degree");
  }
  std::vector<Scalar> eps(static_cast<std::size_t>(gens));
  for (int i = 0; i < gens; ++i) {
    eps[i] = q.B(2 * i).at(0, 0);
    if (!ring.is_unit(eps[i])) throw DimensionError("Qk: eps x_" + std::to_string(2 * i) + " is not a generator");
  }
  for (int i = 1; i < gens; ++i) beta[i] = ring.divide_exact(q.b(2 * i).at(0, 0), eps[i - 1]);
  return beta;
}

struct BlockSpec {
  int n;
  int i;
  std::size_t size;
};

// Lays out blocks per degree and fills the differential from a block rule:
// entry(n, i_src, i_dst) is the map from block i_src in degree n to block
// i_dst in degree n - 1 (or nothing).
QkTotal assemble(const RingSpec& ring, const std::vector<BlockSpec>& blocks,
                 const std::function<std::optional<SparseMatrix>(int, int, int)>& entry) {
  QkTotal t;
  for (const auto& b : blocks) t.layout[b.n].push_back({b.i, 0, b.size});
  if (t.layout.empty()) {
    t.complex = ChainComplex(ring, 0, {}, {});
    return t;
  }
  for (auto& [n, list] : t.layout) {
    std::sort(list.begin(), list.end(), [](const QkBlock& a, const QkBlock& b) { return a.i < b.i; });
    std::size_t off = 0;
    for (auto& b : list) {
      b.offset = off;
      off += b.size;
    }
  }
  const int lo = t.layout.begin()->first;
  const int hi = t.layout.rbegin()->first;
  auto total = [&](int n) -> std::size_t {
    auto it = t.layout.find(n);
    if (it == t.layout.end() || it->second.empty()) return 0;
    return it->second.back().offset + it->second.back().size;
  };
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(total(n));
    const std::size_t rows = n == lo ? 0 : total(n - 1);
    std::vector<SparseMatrix::Triplet> trips;
    auto src = t.layout.find(n);
    auto dst = t.layout.find(n - 1);
    if (n != lo && src != t.layout.end() && dst != t.layout.end()) {
      for (const auto& s : src->second) {
        for (const auto& d : dst->second) {
          auto m = entry(n, s.i, d.i);
          if (!m) continue;
          if (m->rows() != d.size || m->cols() != s.size) throw DimensionError("Qk complex: block shape mismatch");
          for (std::size_t c = 0; c < m->cols(); ++c) {
            for (const auto& e : m->column(c)) trips.push_back({d.offset + e.row, s.offset + c, e.value});
          }
        }
      }
    }
    diffs.push_back(SparseMatrix::from_triplets(ring, rows, total(n), std::move(trips)));
  }
  t.complex = ChainComplex(ring, lo, std::move(ranks), std::move(diffs));
  return t;
}

struct Target {
  int p;
  int q;
  bool negate;
};

// The basis bijection Qk side -> Tot side in degree n, or an explanation.
std::optional<SparseMatrix> bijection(const QkTotal& s, const Totalization& tot, int n,
                                      const std::function<Target(int, int)>& where, std::string& why) {
  const std::size_t cols = s.complex.rank(n);
  const std::size_t rows = tot.complex.rank(n);
  if (rows != cols) {
    why = "degree " + std::to_string(n) + ": ranks " + std::to_string(cols) + " vs " + std::to_string(rows);
    return std::nullopt;
  }
  std::vector<SparseMatrix::Triplet> trips;
  std::size_t hit = 0;
  auto it = s.layout.find(n);
  if (it != s.layout.end()) {
    for (const auto& b : it->second) {
      const Target t = where(n, b.i);
      const TotalBlock* blk = tot.find(t.p, t.q);
      if (blk == nullptr || blk->size != b.size) {
        why = "degree " + std::to_string(n) + ": block " + std::to_string(b.i) + " has no partner (" +
              std::to_string(t.p) + ", " + std::to_string(t.q) + ")";
        return std::nullopt;
      }
      for (std::size_t k = 0; k < b.size; ++k) trips.push_back({blk->offset + k, b.offset + k, Scalar(t.negate ? -1 : 1)});
      hit += b.size;
    }
  }
  if (hit != rows) {
    why = "degree " + std::to_string(n) + ": bijection misses part of the total complex";
    return std::nullopt;
  }
  return SparseMatrix::from_triplets(s.complex.ring(), rows, cols, std::move(trips));
}

void compare_complexes(VerificationReport& r, const std::string& side, const QkTotal& s, const Totalization& tot,
                       const std::function<Target(int, int)>& where) {
  const ChainComplex& a = s.complex;
  const ChainComplex& b = tot.complex;
  if (a.lo() != b.lo() || a.hi() != b.hi()) {
    r.fail(side + ": degree ranges " + std::to_string(a.lo()) + ".." + std::to_string(a.hi()) + " vs " +
           std::to_string(b.lo()) + ".." + std::to_string(b.hi()));
    return;
  }
  std::map<int, SparseMatrix> phi;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    std::string why;
    auto m = bijection(s, tot, n, where, why);
    if (!m) {
      r.fail(side + ": " + why);
      return;
    }
    phi.emplace(n, std::move(*m));
  }
  int mismatches = 0;
  for (int n = a.lo() + 1; n <= a.hi(); ++n) {
    if (!(b.d(n) * phi.at(n) == phi.at(n - 1) * a.d(n))) {
      r.fail(side + ": differentials differ in degree " + std::to_string(n));
      ++mismatches;
    }
  }
  if (mismatches == 0) {
    r.note(side + ": isomorphic in degrees " + std::to_string(a.lo()) + ".." + std::to_string(a.hi()));
  }
}

SparseMatrix qk_block_shift(const QkTotal& t, int n, int di) {
  const int m = n + 2 * di;
  const std::size_t cols = t.complex.rank(n);
  const std::size_t rows = t.complex.rank(m);
  std::vector<SparseMatrix::Triplet> trips;
  auto it = t.layout.find(n);
  if (it != t.layout.end()) {
    for (const auto& b : it->second) {
      const QkBlock* dst = t.find(m, b.i + di);
      if (dst == nullptr) continue;
      for (std::size_t k = 0; k < b.size; ++k) trips.push_back({dst->offset + k, b.offset + k, Scalar(1)});
    }
  }
  return SparseMatrix::from_triplets(t.complex.ring(), rows, cols, std::move(trips));
}

bool same_mod_orders(const SparseMatrix& a, const SparseMatrix& b, const std::vector<Scalar>& orders) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const RingSpec& ring = a.ring();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar diff = ring.sub(a.at(i, j), b.at(i, j));
      if (diff.is_zero()) continue;
      if (orders[i].is_zero() || !ring.divides(orders[i], diff)) return false;
    }
  }
  return true;
}

HomologyPresentation presentation(const ChainComplex& c, int n) {
  return HomologyPresentation(c.ring(), c.rank(n), c.d(n), c.d(n + 1));
}

}  // namespace

const QkBlock* QkTotal::find(int n, int i) const {
  auto it = layout.find(n);
  if (it == layout.end()) return nullptr;
  for (const auto& b : it->second) {
    if (b.i == i) return &b;
  }
  return nullptr;
}

MixedComplex qk_complex(const RingSpec& ring, int depth) {
  if (depth < 0) throw RangeError("qk_complex: negative depth");
  const int top = 2 * depth + 1;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 1);
  std::vector<SparseMatrix> diffs;
  std::vector<SparseMatrix> eps;
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      diffs.push_back(SparseMatrix::zero(ring, 0, 1));
    } else if (n % 2 == 0) {
      diffs.push_back(SparseMatrix::identity(ring, 1));  // x_n -> x_{n-1}
    } else {
      diffs.push_back(SparseMatrix::zero(ring, 1, 1));
    }
    if (n < top) eps.push_back(n % 2 == 0 ? SparseMatrix::identity(ring, 1) : SparseMatrix::zero(ring, 1, 1));
  }
  return MixedComplex(ChainComplex(ring, 0, std::move(ranks), std::move(diffs)), std::move(eps));
}

QkTotal tensor_qk(const MixedComplex& q, const MixedComplex& x, int max_degree) {
  if (x.lo() != 0) throw RangeError("tensor_qk: mixed complex must start in degree 0");
  const std::vector<Scalar> beta = qk_coefficients(q);
  const int gens = static_cast<int>(beta.size());
  if (max_degree < 0) max_degree = x.hi();
  std::vector<BlockSpec> blocks;
  for (int n = 0; n <= max_degree; ++n) {
    for (int i = 0; i < gens && 2 * i <= n; ++i) {
      if (n - 2 * i <= x.hi()) blocks.push_back({n, i, x.rank(n - 2 * i)});
    }
  }
  // d(x_{2i} (x) y) = x_{2i} (x) b y + beta_i x_{2i-2} (x) B y
  return assemble(x.ring(), blocks, [&](int n, int is, int id) -> std::optional<SparseMatrix> {
    if (id == is) return x.b(n - 2 * is);
    if (id == is - 1) return x.B(n - 2 * is).scaled(beta[is]);
    return std::nullopt;
  });
}

QkTotal hom_qk(const MixedComplex& q, const MixedComplex& x, int depth) {
  if (depth < 0) throw RangeError("hom_qk: negative depth");
  if (x.lo() != 0) throw RangeError("hom_qk: mixed complex must start in degree 0");
  const std::vector<Scalar> beta = qk_coefficients(q);
  if (depth >= static_cast<int>(beta.size())) throw RangeError("hom_qk: Qk is truncated below the requested depth");
  std::vector<BlockSpec> blocks;
  for (int n = -2 * depth; n + 2 * depth <= x.hi(); ++n) {
    for (int i = 0; i <= depth; ++i) {
      if (n + 2 * i >= 0) blocks.push_back({n, i, x.rank(n + 2 * i)});
    }
  }
  // (D f)_i = b f_i - beta_i B f_{i-1}
  return assemble(x.ring(), blocks, [&](int n, int is, int id) -> std::optional<SparseMatrix> {
    if (id == is) return x.b(n + 2 * is);
    if (id == is + 1) return x.B(n + 2 * is).scaled(x.ring().neg(beta[id]));
    return std::nullopt;
  });
}

VerificationReport kassel_iso_check(const CyclicModule& m, int depth) {
  return kassel_iso_check(m, mixed_complex(m), depth);
}

VerificationReport kassel_iso_check(const CyclicModule& m, const MixedComplex& x, int depth) {
  VerificationReport r;
  r.name = "kassel";
  r.parameters = {{"ring", m.ring().name()}, {"truncation", std::to_string(m.truncation())},
                  {"depth", std::to_string(depth)}};
  for (const auto& v : check_mixed(x)) r.fail("K(M): " + v);

  const MixedComplex km = mixed_complex(m);
  const MixedComplex q = qk_complex(m.ring(), std::max(m.truncation() / 2 + 1, depth));

  const Totalization bc = cyclic_total(km);
  const QkTotal tensor = tensor_qk(q, x, m.truncation());
  compare_complexes(r, "tensor", tensor, bc, [](int n, int i) { return Target{i, n - i, false}; });

  const Totalization bn = negative_cyclic_total(km, depth);
  const QkTotal hom = hom_qk(q, x, depth);
  compare_complexes(r, "hom", hom, bn, [](int n, int i) { return Target{-i, n + i, i % 2 != 0}; });
  return r;
}

ChainMap qk_selfmap(const MixedComplex& q) {
  ChainMap f;
  f.degree = -2;
  for (int n = q.lo(); n <= q.hi(); ++n) {
    const std::size_t rows = n - 2 >= q.lo() ? q.rank(n - 2) : 0;
    f.components.emplace(n, n - 2 >= q.lo() ? SparseMatrix::identity(q.ring(), 1)
                                            : SparseMatrix::zero(q.ring(), rows, q.rank(n)));
  }
  return f;
}

VerificationReport qk_check(const RingSpec& ring, int depth) {
  VerificationReport r;
  r.name = "qk";
  r.parameters = {{"ring", ring.name()}, {"depth", std::to_string(depth)}};
  const MixedComplex q = qk_complex(ring, depth);
  for (const auto& v : check_mixed(q)) r.fail(v);

  // augmentation x_0 -> 1; the top class x_{2 depth + 1} is a truncation artifact
  const ChainComplex& c = q.complex();
  const ChainComplex ground(ring, 0, {1}, {SparseMatrix::zero(ring, 0, 1)});
  const HomologyPresentation h0 = presentation(c, 0);
  const HomologyPresentation k0 = presentation(ground, 0);
  const SparseMatrix aug = induced_map(h0, k0, SparseMatrix::identity(ring, 1));
  if (!(h0.group() == HomologyGroup::over(ring, 1)) || aug.rows() != 1 || aug.cols() != 1 ||
      !ring.is_unit(aug.at(0, 0))) {
    r.fail("augmentation is not an isomorphism on H_0");
  }
  for (int n = 1; n <= 2 * depth; ++n) {
    const HomologyGroup g = homology(c, n);
    if (!g.is_zero()) r.fail("H_" + std::to_string(n) + "(Qk) = " + g.to_string());
  }
  r.note("H_*(Qk) = k in degree 0 and 0 in degrees 1.." + std::to_string(2 * depth));

  const ChainMap sigma = qk_selfmap(q);
  for (int n : check_chain_map(c, c, sigma)) r.fail("sigma does not commute with b in degree " + std::to_string(n));
  for (int n = q.lo(); n + 1 <= q.hi(); ++n) {
    const SparseMatrix& s_n = sigma.components.at(n);
    const SparseMatrix& s_n1 = sigma.components.at(n + 1);
    const SparseMatrix lhs = s_n1 * q.B(n);
    const SparseMatrix rhs = n - 2 >= q.lo() ? q.B(n - 2) * s_n : SparseMatrix::zero(ring, lhs.rows(), lhs.cols());
    if (!(lhs == rhs)) r.fail("sigma does not commute with eps in degree " + std::to_string(n));
  }
  return r;
}

ChainMap induced_comodule_map(const QkTotal& t) {
  ChainMap f;
  f.degree = -2;
  for (int n = t.complex.lo(); n <= t.complex.hi(); ++n) f.components.emplace(n, qk_block_shift(t, n, -1));
  return f;
}

VerificationReport comodule_check(const CyclicModule& m, int lo, int hi) {
  VerificationReport r;
  r.name = "comodule";
  r.parameters = {{"ring", m.ring().name()}, {"truncation", std::to_string(m.truncation())},
                  {"degrees", std::to_string(lo) + ".." + std::to_string(hi)}};
  const MixedComplex x = mixed_complex(m);
  const MixedComplex q = qk_complex(m.ring(), m.truncation() / 2 + 1);
  const QkTotal t = tensor_qk(q, x);
  const ChainComplex& c = t.complex;
  const ChainMap sigma = induced_comodule_map(t);
  for (int n : check_chain_map(c, c, sigma)) r.fail("sigma (x) id is not a chain map in degree " + std::to_string(n));

  const Totalization tot = cyclic_total(x);
  for (int n = std::max(c.lo() + 2, 2); n <= c.hi(); ++n) {
    std::string why;
    const auto src = bijection(t, tot, n, [](int k, int i) { return Target{i, k - i, false}; }, why);
    const auto dst = bijection(t, tot, n - 2, [](int k, int i) { return Target{i, k - i, false}; }, why);
    if (!src || !dst) {
      r.fail(why);
      continue;
    }
    if (!(*dst * sigma.components.at(n) == periodicity_chain_map(tot, n) * *src)) {
      r.fail("sigma (x) id differs from S in degree " + std::to_string(n));
    }
  }

  for (int n = std::max(lo, 2); n <= hi; ++n) {
    const InducedMap s = periodicity_map(m, n);
    const HomologyPresentation src = presentation(c, n);
    const HomologyPresentation dst = presentation(c, n - 2);
    const SparseMatrix ours = induced_map(src, dst, sigma.components.at(n));
    if (!(src.group() == s.source) || !(dst.group() == s.target) || !(ours == s.matrix)) {
      r.fail("induced map on HC_" + std::to_string(n) + " differs from the periodicity map");
    } else {
      r.note("HC_" + std::to_string(n) + " -> HC_" + std::to_string(n - 2) + ": " + ours.to_string());
    }
    if (n - 4 < c.lo() || n < 4) continue;
    const HomologyPresentation dst4 = presentation(c, n - 4);
    const SparseMatrix twice = sigma.components.at(n - 2) * sigma.components.at(n);
    if (!(twice == qk_block_shift(t, n, -2))) r.fail("sigma^2 is not the 4-shift in degree " + std::to_string(n));
    const SparseMatrix composed = induced_map(dst, dst4, sigma.components.at(n - 2)) * ours;
    if (!same_mod_orders(induced_map(src, dst4, twice), composed, dst4.orders())) {
      r.fail("induced sigma^2 differs from the square of induced sigma in degree " + std::to_string(n));
    }
  }
  return r;
}

}  // namespace cychom
