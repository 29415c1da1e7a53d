#pragma once

#include <string>
#include <vector>

#include "cychom/complexes.hpp"
#include "cychom/cyclic_module.hpp"

namespace cychom {

/// A chain complex (C, b) with a degree +1 operator B such that
/// B^2 = 0 and bB + Bb = 0: a dg module over k[eps] with eps acting by B.
class MixedComplex {
 public:
  MixedComplex() = default;
  /// Bs[k] is B(lo + k): C_{lo+k} -> C_{lo+k+1}. The top one may be omitted
  /// (truncation); it is then treated as the map into the zero module.
  MixedComplex(ChainComplex c, std::vector<SparseMatrix> Bs);

  const ChainComplex& complex() const noexcept { return c_; }
  const RingSpec& ring() const noexcept { return c_.ring(); }
  int lo() const noexcept { return c_.lo(); }
  int hi() const noexcept { return c_.hi(); }
  std::size_t rank(int n) const { return c_.rank(n); }
  SparseMatrix b(int n) const { return c_.d(n); }
  SparseMatrix B(int n) const;
  void set_B(int n, SparseMatrix m);

 private:
  ChainComplex c_;
  std::vector<SparseMatrix> B_;
};

/// Degrees where b^2, B^2 or bB + Bb fails to vanish, as readable lines.
std::vector<std::string> check_mixed(const MixedComplex& x);

/// K(M) = (C_*(M), b, B) on the unnormalized chains, degrees 0..N. B(N) is
/// not available at truncation N and is left as the zero map.
MixedComplex mixed_complex(const CyclicModule& m);

MixedComplex direct_sum(const MixedComplex& x, const MixedComplex& y);

}  // namespace cychom
