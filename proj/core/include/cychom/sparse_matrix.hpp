#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cychom/ring.hpp"
#include "cychom/scalar.hpp"

namespace cychom {

/// Sparse matrix over a RingSpec, stored column by column.
///
/// Each column is a list of (row, value) pairs sorted by row with no zero
/// values and every value canonical for the ring. 0 x n and n x 0 shapes are
/// allowed everywhere.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  SparseMatrix() : ring_(RingSpec::integers()) {}
  SparseMatrix(RingSpec ring, std::size_t rows, std::size_t cols);

  static SparseMatrix zero(RingSpec ring, std::size_t rows, std::size_t cols) {
    return SparseMatrix(ring, rows, cols);
  }
  static SparseMatrix identity(RingSpec ring, std::size_t n);
  /// Duplicates are summed; values are mapped into the ring.
  static SparseMatrix from_triplets(RingSpec ring, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);
  /// Row-major dense input.
  static SparseMatrix from_dense(RingSpec ring, const std::vector<std::vector<Scalar>>& rows);
  static SparseMatrix from_dense(RingSpec ring, std::size_t rows, std::size_t cols,
                                 const std::vector<std::vector<Scalar>>& data);
  /// Columns must already be sorted and canonical.
  static SparseMatrix from_columns(RingSpec ring, std::size_t rows, std::vector<Column> cols);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  std::size_t nnz() const;
  const Column& column(std::size_t j) const { return cols_[j]; }
  Scalar at(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  bool is_identity() const;

  /// Replaces column j (entries are canonicalized and zeros dropped).
  void set_column(std::size_t j, Column col);

  SparseMatrix transpose() const;
  /// Z to Q or F_p, Q to F_p, or any ring to itself.
  SparseMatrix reduce_to(const RingSpec& target) const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseMatrix select_columns(const std::vector<std::size_t>& idx) const;
  SparseMatrix select_rows(const std::vector<std::size_t>& idx) const;
  SparseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  std::vector<std::vector<Scalar>> to_dense() const;
  /// y = A x for a dense vector x.
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  std::string to_string() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix operator-() const { return scaled(Scalar(-1)); }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::vector<Column> cols_;
};

inline std::ostream& operator<<(std::ostream& os, const SparseMatrix& m) { return os << m.to_string(); }

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix block_diagonal(const std::vector<SparseMatrix>& blocks);
/// a^k for square a, k >= 0.
SparseMatrix power(const SparseMatrix& a, unsigned k);

/// Dense vector helpers in a given ring.
std::vector<Scalar> canonical_vector(const RingSpec& ring, std::vector<Scalar> v);
bool is_zero_vector(const std::vector<Scalar>& v);

}  // namespace cychom
