#pragma once

#include <climits>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cychom/linalg.hpp"
#include "cychom/sparse_matrix.hpp"

namespace cychom {

/// A bounded chain complex of free modules, C_lo ... C_hi, with
/// d(n): C_n -> C_{n-1}. Degrees outside [lo, hi] hold the zero module.
class ChainComplex {
 public:
  ChainComplex() : ring_(RingSpec::integers()) {}
  /// diffs[k] is d(lo + k); d(lo) must have zero rows. Shapes are checked.
  ChainComplex(RingSpec ring, int lo, std::vector<std::size_t> ranks, std::vector<SparseMatrix> diffs);

  const RingSpec& ring() const noexcept { return ring_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const noexcept { return ranks_.empty(); }
  std::size_t rank(int n) const;
  /// d(n): C_n -> C_{n-1}; a correctly shaped zero matrix outside the support.
  SparseMatrix d(int n) const;
  ChainComplex reduce_to(const RingSpec& target) const;

 private:
  RingSpec ring_;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> diffs_;
};

/// Degrees n with d(n-1) d(n) != 0. Empty means the complex is valid.
std::vector<int> check_complex(const ChainComplex& c);

HomologyGroup homology(const ChainComplex& c, int n);
/// Homology in degrees lo..hi, computed in parallel, returned in order.
std::vector<HomologyGroup> homology_range(const ChainComplex& c, int lo, int hi);

/// shift(C, s)_n = C_{n-s} with differential (-1)^s d.
ChainComplex shift(const ChainComplex& c, int s);
/// D_{-n} = Hom(C_n, k) with differential the transpose of d, so that
/// H_{-n}(D) is the n-th cohomology of C.
ChainComplex hom_to_ground(const ChainComplex& c);

/// Chain map f: C -> C' given degreewise (f(n): C_n -> C'_{n+degree}).
struct ChainMap {
  int degree = 0;
  std::map<int, SparseMatrix> components;
};
/// Degrees n where d' f(n) != f(n-1) d (with the sign (-1)^degree on d').
std::vector<int> check_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f);

enum class CommutationMode { commuting, anticommuting };

/// A bicomplex with finite support. h(p,q): (p,q) -> (p-1,q),
/// v(p,q): (p,q) -> (p,q-1). Entries not in the support are zero.
class Bicomplex {
 public:
  using Index = std::pair<int, int>;

  Bicomplex() : ring_(RingSpec::integers()) {}
  Bicomplex(RingSpec ring, CommutationMode mode) : ring_(ring), mode_(mode) {}

  const RingSpec& ring() const noexcept { return ring_; }
  CommutationMode mode() const noexcept { return mode_; }

  void set_rank(int p, int q, std::size_t r);
  /// Shapes are checked against ranks already set.
  void set_h(int p, int q, SparseMatrix m);
  void set_v(int p, int q, SparseMatrix m);

  bool contains(int p, int q) const { return ranks_.count({p, q}) > 0; }
  std::size_t rank(int p, int q) const;
  SparseMatrix h(int p, int q) const;
  SparseMatrix v(int p, int q) const;
  /// Support in (p, q) lexicographic order.
  std::vector<Index> support() const;
  int min_p() const;
  int max_p() const;

 private:
  RingSpec ring_;
  CommutationMode mode_ = CommutationMode::anticommuting;
  std::map<Index, std::size_t> ranks_;
  std::map<Index, SparseMatrix> h_;
  std::map<Index, SparseMatrix> v_;
};

/// Human-readable list of failed identities (h^2, v^2, commutation).
std::vector<std::string> check_bicomplex(const Bicomplex& b);

struct TruncationWindow {
  int max_total_degree = INT_MAX;  // keep p + q <= N
  int column_depth = 0;            // product mode keeps p >= max_p - P
};

enum class TotalMode { direct_sum, product };

struct TotalBlock {
  int p;
  int q;
  std::size_t offset;
  std::size_t size;
};

/// Totalization plus the position of each bicomplex entry inside Tot_n
/// (blocks sorted by p ascending).
struct Totalization {
  ChainComplex complex;
  std::map<int, std::vector<TotalBlock>> layout;

  const TotalBlock* find(int p, int q) const;
};

/// d = h + v (anticommuting) or d = h + (-1)^p v (commuting).
/// Direct-sum mode keeps the entries with p + q <= N (a subcomplex); product
/// mode additionally keeps only the columns p >= max_p - P (a quotient).
Totalization totalize(const Bicomplex& b, TotalMode mode, const TruncationWindow& window = {});

/// The complex in column p (vertical differential only), degrees indexed by q.
ChainComplex column_complex(const Bicomplex& b, int p);
/// The complex in row q (horizontal differential only), degrees indexed by p.
ChainComplex row_complex(const Bicomplex& b, int q);

}  // namespace cychom
