#include "cychom/complexes.hpp"

#include <algorithm>

#include "cychom/errors.hpp"
#include "cychom/parallel.hpp"

namespace cychom {

namespace {

std::string at(int p, int q) { return "(" + std::to_string(p) + ", " + std::to_string(q) + ")"; }

}  // namespace

ChainComplex::ChainComplex(RingSpec ring, int lo, std::vector<std::size_t> ranks, std::vector<SparseMatrix> diffs)
    : ring_(ring), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (diffs_.size() != ranks_.size()) throw DimensionError("ChainComplex: need one differential per degree");
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    const std::size_t below = k == 0 ? 0 : ranks_[k - 1];
    if (diffs_[k].cols() != ranks_[k] || diffs_[k].rows() != below) {
      throw DimensionError("ChainComplex: d(" + std::to_string(lo_ + static_cast<int>(k)) + ") has shape " +
                           std::to_string(diffs_[k].rows()) + "x" + std::to_string(diffs_[k].cols()));
    }
    if (!(diffs_[k].ring() == ring_)) throw RingError("ChainComplex: differential over the wrong ring");
  }
}

std::size_t ChainComplex::rank(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

SparseMatrix ChainComplex::d(int n) const {
  if (n < lo_ || n > hi()) return SparseMatrix(ring_, rank(n - 1), rank(n));
  return diffs_[static_cast<std::size_t>(n - lo_)];
}

ChainComplex ChainComplex::reduce_to(const RingSpec& target) const {
  std::vector<SparseMatrix> diffs;
  diffs.reserve(diffs_.size());
  for (const auto& m : diffs_) diffs.push_back(m.reduce_to(target));
  return ChainComplex(target, lo_, ranks_, std::move(diffs));
}

std::vector<int> check_complex(const ChainComplex& c) {
  std::vector<int> bad;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    if (!(c.d(n - 1) * c.d(n)).is_zero()) bad.push_back(n);
  }
  return bad;
}

HomologyGroup homology(const ChainComplex& c, int n) {
  return homology_at(c.ring(), c.rank(n), c.d(n), c.d(n + 1));
}

std::vector<HomologyGroup> homology_range(const ChainComplex& c, int lo, int hi) {
  if (hi < lo) return {};
  std::vector<HomologyGroup> out(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(out.size(), [&](std::size_t i) { out[i] = homology(c, lo + static_cast<int>(i)); });
  return out;
}

ChainComplex shift(const ChainComplex& c, int s) {
  if (c.empty()) return ChainComplex(c.ring(), c.lo() + s, {}, {});
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  const bool odd = (s % 2) != 0;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    ranks.push_back(c.rank(n));
    SparseMatrix d = n == c.lo() ? SparseMatrix(c.ring(), 0, c.rank(n)) : c.d(n);
    diffs.push_back(odd ? -d : d);
  }
  return ChainComplex(c.ring(), c.lo() + s, std::move(ranks), std::move(diffs));
}

ChainComplex hom_to_ground(const ChainComplex& c) {
  if (c.empty()) return ChainComplex(c.ring(), 0, {}, {});
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  // degree m = -n, from m = -hi up to m = -lo
  for (int n = c.hi(); n >= c.lo(); --n) {
    ranks.push_back(c.rank(n));
    if (n == c.hi()) {
      diffs.push_back(SparseMatrix(c.ring(), 0, c.rank(n)));
    } else {
      diffs.push_back(c.d(n + 1).transpose());
    }
  }
  return ChainComplex(c.ring(), -c.hi(), std::move(ranks), std::move(diffs));
}

std::vector<int> check_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f) {
  auto comp = [&](int n) {
    auto it = f.components.find(n);
    if (it != f.components.end()) return it->second;
    return SparseMatrix(source.ring(), target.rank(n + f.degree), source.rank(n));
  };
  std::vector<int> bad;
  const bool odd = (f.degree % 2) != 0;
  for (int n = source.lo(); n <= source.hi() + 1; ++n) {
    SparseMatrix lhs = target.d(n + f.degree) * comp(n);
    SparseMatrix rhs = comp(n - 1) * source.d(n);
    if (odd) rhs = -rhs;
    if (!(lhs == rhs)) bad.push_back(n);
  }
  return bad;
}

void Bicomplex::set_rank(int p, int q, std::size_t r) { ranks_[{p, q}] = r; }

void Bicomplex::set_h(int p, int q, SparseMatrix m) {
  if (m.cols() != rank(p, q) || m.rows() != rank(p - 1, q)) throw DimensionError("Bicomplex: h" + at(p, q) + " has the wrong shape");
  if (!(m.ring() == ring_)) throw RingError("Bicomplex: h over the wrong ring");
  h_[{p, q}] = std::move(m);
}

void Bicomplex::set_v(int p, int q, SparseMatrix m) {
  if (m.cols() != rank(p, q) || m.rows() != rank(p, q - 1)) throw DimensionError("Bicomplex: v" + at(p, q) + " has the wrong shape");
  if (!(m.ring() == ring_)) throw RingError("Bicomplex: v over the wrong ring");
  v_[{p, q}] = std::move(m);
}

std::size_t Bicomplex::rank(int p, int q) const {
  auto it = ranks_.find({p, q});
  return it == ranks_.end() ? 0 : it->second;
}

SparseMatrix Bicomplex::h(int p, int q) const {
  auto it = h_.find({p, q});
  if (it != h_.end()) return it->second;
  return SparseMatrix(ring_, rank(p - 1, q), rank(p, q));
}

SparseMatrix Bicomplex::v(int p, int q) const {
  auto it = v_.find({p, q});
  if (it != v_.end()) return it->second;
  return SparseMatrix(ring_, rank(p, q - 1), rank(p, q));
}

std::vector<Bicomplex::Index> Bicomplex::support() const {
  std::vector<Index> out;
  out.reserve(ranks_.size());
  for (const auto& [k, r] : ranks_) out.push_back(k);
  return out;
}

int Bicomplex::min_p() const { return ranks_.empty() ? 0 : ranks_.begin()->first.first; }
int Bicomplex::max_p() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first.first; }

std::vector<std::string> check_bicomplex(const Bicomplex& b) {
  std::vector<std::string> bad;
  for (auto [p, q] : b.support()) {
    if (!(b.h(p - 1, q) * b.h(p, q)).is_zero()) bad.push_back("h^2 != 0 at " + at(p, q));
    if (!(b.v(p, q - 1) * b.v(p, q)).is_zero()) bad.push_back("v^2 != 0 at " + at(p, q));
    SparseMatrix hv = b.h(p, q - 1) * b.v(p, q);
    SparseMatrix vh = b.v(p - 1, q) * b.h(p, q);
    if (b.mode() == CommutationMode::commuting) {
      if (!(hv == vh)) bad.push_back("hv != vh at " + at(p, q));
    } else if (!(hv + vh).is_zero()) {
      bad.push_back("hv + vh != 0 at " + at(p, q));
    }
  }
  return bad;
}

const TotalBlock* Totalization::find(int p, int q) const {
  auto it = layout.find(p + q);
  if (it == layout.end()) return nullptr;
  for (const auto& blk : it->second) {
    if (blk.p == p && blk.q == q) return &blk;
  }
  return nullptr;
}

Totalization totalize(const Bicomplex& b, TotalMode mode, const TruncationWindow& window) {
  if (window.column_depth < 0) throw RangeError("totalize: negative column depth");
  const int p_floor = mode == TotalMode::product ? b.max_p() - window.column_depth : INT_MIN;
  auto keep = [&](int p, int q) {
    return b.contains(p, q) && p >= p_floor && static_cast<long long>(p) + q <= window.max_total_degree;
  };

  Totalization tot;
  for (auto [p, q] : b.support()) {
    if (!keep(p, q)) continue;
    tot.layout[p + q].push_back({p, q, 0, b.rank(p, q)});
  }
  if (tot.layout.empty()) {
    tot.complex = ChainComplex(b.ring(), 0, {}, {});
    return tot;
  }
  for (auto& [n, blocks] : tot.layout) {
    std::sort(blocks.begin(), blocks.end(), [](const TotalBlock& x, const TotalBlock& y) { return x.p < y.p; });
    std::size_t off = 0;
    for (auto& blk : blocks) {
      blk.offset = off;
      off += blk.size;
    }
  }
  const int lo = tot.layout.begin()->first;
  const int hi = tot.layout.rbegin()->first;
  auto total_rank = [&](int n) -> std::size_t {
    auto it = tot.layout.find(n);
    if (it == tot.layout.end() || it->second.empty()) return 0;
    return it->second.back().offset + it->second.back().size;
  };

  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t cols = total_rank(n);
    const std::size_t rows = n == lo ? 0 : total_rank(n - 1);
    ranks.push_back(cols);
    std::vector<SparseMatrix::Triplet> trips;
    auto it = tot.layout.find(n);
    if (n != lo && it != tot.layout.end()) {
      for (const auto& blk : it->second) {
        auto place = [&](const SparseMatrix& m, int tp, int tq, bool negate) {
          const TotalBlock* target = tot.find(tp, tq);
          if (target == nullptr) return;
          for (std::size_t j = 0; j < m.cols(); ++j) {
            for (const auto& e : m.column(j)) {
              trips.push_back({target->offset + e.row, blk.offset + j, negate ? -e.value : e.value});
            }
          }
        };
        if (keep(blk.p - 1, blk.q)) place(b.h(blk.p, blk.q), blk.p - 1, blk.q, false);
        if (keep(blk.p, blk.q - 1)) {
          const bool negate = b.mode() == CommutationMode::commuting && (blk.p % 2 != 0);
          place(b.v(blk.p, blk.q), blk.p, blk.q - 1, negate);
        }
      }
    }
    diffs.push_back(SparseMatrix::from_triplets(b.ring(), rows, cols, std::move(trips)));
  }
  tot.complex = ChainComplex(b.ring(), lo, std::move(ranks), std::move(diffs));
  return tot;
}

ChainComplex column_complex(const Bicomplex& b, int p) {
  int lo = INT_MAX, hi = INT_MIN;
  for (auto [pp, q] : b.support()) {
    if (pp == p) lo = std::min(lo, q), hi = std::max(hi, q);
  }
  if (lo > hi) return ChainComplex(b.ring(), 0, {}, {});
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  for (int q = lo; q <= hi; ++q) {
    ranks.push_back(b.rank(p, q));
    diffs.push_back(q == lo ? SparseMatrix(b.ring(), 0, b.rank(p, q)) : b.v(p, q));
  }
  return ChainComplex(b.ring(), lo, std::move(ranks), std::move(diffs));
}

ChainComplex row_complex(const Bicomplex& b, int q) {
  int lo = INT_MAX, hi = INT_MIN;
  for (auto [p, qq] : b.support()) {
    if (qq == q) lo = std::min(lo, p), hi = std::max(hi, p);
  }
  if (lo > hi) return ChainComplex(b.ring(), 0, {}, {});
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  for (int p = lo; p <= hi; ++p) {
    ranks.push_back(b.rank(p, q));
    diffs.push_back(p == lo ? SparseMatrix(b.ring(), 0, b.rank(p, q)) : b.h(p, q));
  }
  return ChainComplex(b.ring(), lo, std::move(ranks), std::move(diffs));
}

}  // namespace cychom
