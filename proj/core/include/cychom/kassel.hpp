#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cychom/complexes.hpp"
#include "cychom/cyclic_module.hpp"
#include "cychom/mixed.hpp"
#include "cychom/report.hpp"

namespace cychom {

/// Qk: basis x_0, x_1, ... with x_j in degree j, eps x_{2i} = x_{2i+1} and
/// b x_{2i} = eps x_{2i-2} = x_{2i-1}. Free over k[eps] on the even x's.
/// Truncated after x_{2 depth + 1}.
MixedComplex qk_complex(const RingSpec& ring, int depth);

/// A complex assembled from copies of X, one per even generator x_{2i} of Qk.
struct QkBlock {
  int i;
  std::size_t offset;
  std::size_t size;
};
struct QkTotal {
  ChainComplex complex;
  std::map<int, std::vector<QkBlock>> layout;  // blocks sorted by i ascending

  const QkBlock* find(int n, int i) const;
};

/// Qk (x)_{k[eps]} X: degree n is the sum of x_{2i} (x) X_{n-2i}, computed
/// from the generators and differential of q. Degrees above max_degree are
/// dropped (a subcomplex); max_degree < 0 means X's top degree.
QkTotal tensor_qk(const MixedComplex& q, const MixedComplex& x, int max_degree = -1);

/// Hom_{k[eps]}(Qk, X): a degree-n map f is determined by f_i = f(x_{2i}) in
/// X_{n+2i}; (D f)_i = b f_i - (-1)^n f(d x_{2i}). Only i <= depth is kept
/// (a quotient) and only degrees with every component inside X.
QkTotal hom_qk(const MixedComplex& q, const MixedComplex& x, int depth);

/// Builds Tot BC(M) and Tot BN(M) at the given depth from M, and the two Qk
/// complexes from K(M); checks that the basis bijections (identity on the
/// tensor side, x_{2i} <-> column -i with sign (-1)^i on the Hom side)
/// intertwine the differentials exactly.
VerificationReport kassel_iso_check(const CyclicModule& m, int depth);
/// Same, with the Qk side built from x instead of K(M).
VerificationReport kassel_iso_check(const CyclicModule& m, const MixedComplex& x, int depth);

/// sigma: x_{2i} -> x_{2i-2}, x_{2i+1} -> x_{2i-1} (x_0, x_1 -> 0), as a
/// degree -2 self-map of qk_complex(ring, depth).
ChainMap qk_selfmap(const MixedComplex& q);

/// Mixed-complex axioms, augmentation Qk -> k a quasi-isomorphism below the
/// truncation, and sigma commuting with b and eps.
VerificationReport qk_check(const RingSpec& ring, int depth);

/// sigma (x) id on Qk (x)_{k[eps]} K(M), a degree -2 chain map.
ChainMap induced_comodule_map(const QkTotal& t);

/// The comodule map on Qk (x) K(M) is a chain map, agrees with S under the
/// tensor bijection, induces periodicity_map on HC_n for n in [lo, hi], and
/// its square induces the degree -4 shift.
VerificationReport comodule_check(const CyclicModule& m, int lo, int hi);

}  // namespace cychom
