#include "cychom/mixed.hpp"

#include "cychom/errors.hpp"
#include "cychom/parallel.hpp"

namespace cychom {

MixedComplex::MixedComplex(ChainComplex c, std::vector<SparseMatrix> Bs) : c_(std::move(c)) {
  const std::size_t levels = c_.empty() ? 0 : static_cast<std::size_t>(c_.hi() - c_.lo() + 1);
  if (Bs.size() == levels && levels > 0) {
    if (Bs.back().rows() != 0) throw DimensionError("MixedComplex: B out of the top degree must be the zero map");
    Bs.pop_back();
  }
  if (Bs.size() + 1 != levels && !(levels == 0 && Bs.empty())) {
    throw DimensionError("MixedComplex: need one B per degree below the top");
  }
  B_ = std::move(Bs);
  for (std::size_t k = 0; k < B_.size(); ++k) {
    const int n = c_.lo() + static_cast<int>(k);
    if (B_[k].rows() != c_.rank(n + 1) || B_[k].cols() != c_.rank(n)) {
      throw DimensionError("MixedComplex: B(" + std::to_string(n) + ") has the wrong shape");
    }
  }
}

SparseMatrix MixedComplex::B(int n) const {
  if (n < lo() || n >= hi()) return SparseMatrix(ring(), rank(n + 1), rank(n));
  return B_[static_cast<std::size_t>(n - lo())];
}

void MixedComplex::set_B(int n, SparseMatrix m) {
  if (n < lo() || n >= hi()) throw RangeError("set_B: degree outside the stored range");
  if (m.rows() != rank(n + 1) || m.cols() != rank(n)) throw DimensionError("set_B: wrong shape");
  B_[static_cast<std::size_t>(n - lo())] = std::move(m);
}

std::vector<std::string> check_mixed(const MixedComplex& x) {
  std::vector<std::string> bad;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    const std::string at = " at degree " + std::to_string(n);
    if (n - 1 >= x.lo() && !(x.b(n - 1) * x.b(n)).is_zero()) bad.push_back("b^2 != 0" + at);
    if (n + 2 <= x.hi() && !(x.B(n + 1) * x.B(n)).is_zero()) bad.push_back("B^2 != 0" + at);
    // bB + Bb on C_n, both terms land in C_n
    if (n + 1 <= x.hi()) {
      SparseMatrix anti = x.b(n + 1) * x.B(n);
      if (n - 1 >= x.lo()) anti = anti + x.B(n - 1) * x.b(n);
      if (!anti.is_zero()) bad.push_back("bB + Bb != 0" + at);
    }
  }
  return bad;
}

MixedComplex mixed_complex(const CyclicModule& m) {
  ChainComplex c = hochschild_chain_complex(m, false);
  std::vector<SparseMatrix> Bs(static_cast<std::size_t>(m.truncation()));
  parallel_for(Bs.size(), [&](std::size_t n) { Bs[n] = connes_B(m, static_cast<int>(n)); });
  return MixedComplex(std::move(c), std::move(Bs));
}

MixedComplex direct_sum(const MixedComplex& x, const MixedComplex& y) {
  if (x.lo() != y.lo() || x.hi() != y.hi() || !(x.ring() == y.ring())) {
    throw DimensionError("direct_sum: mixed complexes differ in range or ring");
  }
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  std::vector<SparseMatrix> Bs;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    ranks.push_back(x.rank(n) + y.rank(n));
    diffs.push_back(block_diagonal({x.b(n), y.b(n)}));
    if (n < x.hi()) Bs.push_back(block_diagonal({x.B(n), y.B(n)}));
  }
  return MixedComplex(ChainComplex(x.ring(), x.lo(), ranks, diffs), Bs);
}

}  // namespace cychom
