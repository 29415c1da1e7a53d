#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cychom/sparse_matrix.hpp"

namespace cychom {

/// D = U A V with U, V unimodular and D diagonal with d_1 | d_2 | ... .
/// U_inverse is provided so homology classes can be pushed back to chains.
struct SmithForm {
  SparseMatrix U;
  SparseMatrix D;
  SparseMatrix V;
  SparseMatrix U_inverse;
  /// Nonzero diagonal entries of D, in order.
  std::vector<Scalar> diagonal;
};

/// Smith normal form over Z. Pivot: minimal absolute value, ties broken by
/// (row, col). Throws RingError for matrices over other rings.
SmithForm smith_normal_form(const SparseMatrix& a);

/// Same algorithm over any supported ring (over a field every nonzero
/// diagonal entry is normalized to 1). Used internally for presentations.
SmithForm diagonalize(const SparseMatrix& a);

/// Nonzero invariant factors of a, in divisibility order. Over a field
/// these are rank-many ones. Computed by sparse unit-pivot elimination with
/// a dense Smith form on whatever is left.
std::vector<Scalar> invariant_factors(const SparseMatrix& a);
/// Rank over the fraction field.
std::size_t rank(const SparseMatrix& a);

struct KernelImage {
  std::size_t rank = 0;
  SparseMatrix kernel_basis;  // columns span ker(a)
  SparseMatrix image_basis;   // columns span im(a)
};
/// Over Z the bases are lattice bases of the kernel and of the image.
KernelImage rank_kernel_image(const SparseMatrix& a);

/// Column reduction A V = R with V unimodular and the nonzero columns of R
/// having pairwise distinct lowest nonzero rows. Supports membership and
/// solving in the column span (lattice span over Z).
class ColumnEchelon {
 public:
  explicit ColumnEchelon(const SparseMatrix& a);

  std::size_t rank() const noexcept { return pivots_.size(); }
  const SparseMatrix& reduced() const noexcept { return reduced_; }
  const SparseMatrix& transform() const noexcept { return transform_; }
  SparseMatrix kernel_basis() const;
  SparseMatrix image_basis() const;
  /// Some x with A x = y, or nothing when y is not in the span.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& y) const;
  bool contains(const std::vector<Scalar>& y) const { return solve(y).has_value(); }

 private:
  SparseMatrix reduced_;
  SparseMatrix transform_;
  std::vector<std::size_t> pivots_;        // reduced columns that are nonzero
  std::vector<std::int64_t> owner_of_row_;  // row -> reduced column with that low, or -1
};

/// A finitely generated module: Z^free_rank + sum Z/torsion_i over Z, or a
/// vector space of the given dimension over a field.
class HomologyGroup {
 public:
  HomologyGroup() = default;
  static HomologyGroup vector_space(std::size_t dim) {
    HomologyGroup g;
    g.field_ = true;
    g.free_rank_ = dim;
    return g;
  }
  /// Torsion factors equal to 1 are dropped; the rest must form a chain.
  static HomologyGroup abelian(std::size_t free_rank, std::vector<Scalar> torsion);
  static HomologyGroup over(const RingSpec& ring, std::size_t free_rank, std::vector<Scalar> torsion = {});

  bool over_field() const noexcept { return field_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t dimension() const noexcept { return free_rank_; }
  const std::vector<Scalar>& torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  /// Number of generators in the canonical presentation.
  std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

 private:
  bool field_ = false;
  std::size_t free_rank_ = 0;
  std::vector<Scalar> torsion_;
};

inline std::ostream& operator<<(std::ostream& os, const HomologyGroup& g) { return os << g.to_string(); }

/// Cokernel of image -> ring^ambient_rank.
HomologyGroup quotient_group(const SparseMatrix& image, std::size_t ambient_rank);

/// ker(d_out) / im(d_in) on a free module of rank dim, where d_out leaves the
/// module and d_in lands in it. Either map may have zero columns/rows.
HomologyGroup homology_at(const RingSpec& ring, std::size_t dim, const SparseMatrix& d_out,
                          const SparseMatrix& d_in);

/// X --f--> Y --g--> Z is exact at Y (g f = 0 and ker g = im f).
bool is_exact_at(const SparseMatrix& f, const SparseMatrix& g);

/// Explicit presentation of ker(d_out)/im(d_in) with chosen generators,
/// so chains can be converted to coordinates and maps can be induced.
class HomologyPresentation {
 public:
  HomologyPresentation(const RingSpec& ring, std::size_t dim, const SparseMatrix& d_out,
                       const SparseMatrix& d_in);

  const HomologyGroup& group() const noexcept { return group_; }
  /// Representative cycles, one column per generator: free part first,
  /// then torsion generators in increasing order.
  const SparseMatrix& generators() const noexcept { return generators_; }
  /// Coordinates of the class of a cycle (torsion coordinates reduced mod
  /// their order). Throws DimensionError if z is not a cycle.
  std::vector<Scalar> class_of(const std::vector<Scalar>& z) const;
  /// Order of each generator, 0 for free generators.
  const std::vector<Scalar>& orders() const noexcept { return orders_; }

 private:
  RingSpec ring_;
  std::size_t dim_;
  SparseMatrix d_out_;
  SparseMatrix cycle_basis_;
  ColumnEchelon cycles_;
  SparseMatrix coord_change_;  // U from the relation Smith form, restricted
  std::vector<std::size_t> kept_;
  std::vector<Scalar> orders_;
  SparseMatrix generators_;
  HomologyGroup group_;
};

/// Matrix of the map induced by a chain map f: C -> C' on the given
/// presentations (columns: source generators, rows: target coordinates).
SparseMatrix induced_map(const HomologyPresentation& source, const HomologyPresentation& target,
                         const SparseMatrix& f);

/// Projection onto ring^rows / span(d) together with a section.
/// projection * lift = id and projection * d = 0. Over Z the span must be a
/// direct summand (RingError otherwise).
struct QuotientMap {
  SparseMatrix projection;
  SparseMatrix lift;
};
QuotientMap quotient_by_span(const SparseMatrix& d);

/// Determinant over Z or Q by fraction-free elimination (square, dense).
Scalar determinant(const std::vector<std::vector<Scalar>>& m);

}  // namespace cychom
