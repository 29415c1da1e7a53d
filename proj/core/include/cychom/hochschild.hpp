#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cychom/cyclic_module.hpp"
#include "cychom/ring.hpp"
#include "cychom/sparse_matrix.hpp"

namespace cychom {

/// A unital algebra on the free module k^d, given by structure constants:
/// e_i e_j = sum_k mu(i, j, k) e_k.
class AlgebraPresentation {
 public:
  AlgebraPresentation() : ring_(RingSpec::integers()) {}
  /// All products start at zero; labels default to e0, e1, ...
  AlgebraPresentation(RingSpec ring, std::size_t dim);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Scalar>& unit() const noexcept { return unit_; }
  const Scalar& mu(std::size_t i, std::size_t j, std::size_t k) const { return mu_[(i * dim_ + j) * dim_ + k]; }
  /// e_i e_j as a sparse column.
  const SparseMatrix::Column& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

  void set_labels(std::vector<std::string> labels);
  void set_unit(std::vector<Scalar> unit);
  void set_product(std::size_t i, std::size_t j, const std::vector<Scalar>& value);
  void set_mu(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  /// Product of two coordinate vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  /// The same constants read in another ring (Z into F_p, Z into Q, ...).
  AlgebraPresentation reduce_to(const RingSpec& target) const;
  /// Structure constants in the basis given by the columns of an invertible
  /// matrix P (new e'_j = sum_i P_ij e_i). Pinv must be P^{-1}.
  AlgebraPresentation change_basis(const SparseMatrix& p, const SparseMatrix& p_inverse) const;

 private:
  void refresh(std::size_t i, std::size_t j);

  RingSpec ring_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> unit_;
  std::vector<Scalar> mu_;
  std::vector<SparseMatrix::Column> products_;
};

/// Associativity and unit-law violations, one line each naming the basis
/// elements involved. Empty when the algebra is valid.
std::vector<std::string> validate_algebra(const AlgebraPresentation& a);

constexpr std::size_t default_size_cap = 20000;

/// The cyclic module A# truncated at level N: level n is A^{(n+1)} with the
/// slot-major lexicographic tensor basis.
CyclicModule cyclic_nerve(const AlgebraPresentation& a, int truncation, std::size_t size_cap = default_size_cap);

AlgebraPresentation ground_algebra(const RingSpec& ring);
/// k[x]/(x^2), basis 1, x.
AlgebraPresentation dual_numbers(const RingSpec& ring);
/// k[C_m], basis g^0 .. g^{m-1}.
AlgebraPresentation cyclic_group_algebra(const RingSpec& ring, int m);
/// M_n(k) in the matrix-unit basis E_ij (row-major).
AlgebraPresentation matrix_algebra(const RingSpec& ring, int n);
/// Upper-triangular n x n matrices, basis E_ij with i <= j (row-major).
AlgebraPresentation upper_triangular_algebra(const RingSpec& ring, int n);
/// A x B with componentwise product.
AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// A reproducible associative algebra over Z of dimension dim (1..3):
/// unit e_0, small random constants for the other products, rejected until
/// associative, then moved by a random unimodular change of basis.
AlgebraPresentation random_associative_algebra(std::uint64_t seed, std::size_t dim);

}  // namespace cychom
