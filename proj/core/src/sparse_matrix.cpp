#include "cychom/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cychom/errors.hpp"

namespace cychom {

namespace {

void require_same_ring(const SparseMatrix& a, const SparseMatrix& b, const char* op) {
  if (!(a.ring() == b.ring())) {
    throw RingError(std::string(op) + ": ring mismatch (" + a.ring().name() + " vs " + b.ring().name() + ")");
  }
}

std::string shape(const SparseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Merges two sorted columns: a + c*b.
SparseMatrix::Column axpy(const RingSpec& ring, const SparseMatrix::Column& a, const Scalar& c,
                          const SparseMatrix::Column& b) {
  SparseMatrix::Column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].row < a[i].row) {
      Scalar v = ring.mul(c, b[j].value);
      if (!v.is_zero()) out.push_back({b[j].row, std::move(v)});
      ++j;
    } else {
      Scalar v = ring.add(a[i].value, ring.mul(c, b[j].value));
      if (!v.is_zero()) out.push_back({a[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix::SparseMatrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols) {
  if (rows > UINT32_MAX) throw DimensionError("matrix too tall");
}

SparseMatrix SparseMatrix::identity(RingSpec ring, std::size_t n) {
  SparseMatrix m(ring, n, n);
  for (std::size_t j = 0; j < n; ++j) m.cols_[j].push_back({static_cast<std::uint32_t>(j), Scalar(1)});
  return m;
}

SparseMatrix SparseMatrix::from_triplets(RingSpec ring, std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  SparseMatrix m(ring, rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::size_t k = 0;
  while (k < triplets.size()) {
    const std::size_t r = triplets[k].row;
    const std::size_t c = triplets[k].col;
    if (r >= rows || c >= cols) {
      throw DimensionError("triplet (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    }
    Scalar sum;
    while (k < triplets.size() && triplets[k].row == r && triplets[k].col == c) {
      sum = ring.add(sum, ring.from(triplets[k].value));
      ++k;
    }
    if (!sum.is_zero()) m.cols_[c].push_back({static_cast<std::uint32_t>(r), std::move(sum)});
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(RingSpec ring, const std::vector<std::vector<Scalar>>& data) {
  const std::size_t nc = data.empty() ? 0 : data.front().size();
  return from_dense(ring, data.size(), nc, data);
}

SparseMatrix SparseMatrix::from_dense(RingSpec ring, std::size_t rows, std::size_t cols,
                                      const std::vector<std::vector<Scalar>>& data) {
  if (data.size() != rows) throw DimensionError("dense data has wrong row count");
  SparseMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) throw DimensionError("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar v = ring.from(data[i][j]);
      if (!v.is_zero()) m.cols_[j].push_back({static_cast<std::uint32_t>(i), std::move(v)});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(RingSpec ring, std::size_t rows, std::vector<Column> cols) {
  SparseMatrix m(ring, rows, 0);
  m.cols_ = std::move(cols);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& c = cols_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != c.end() && it->row == i) return it->value;
  return Scalar();
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_.size()) return false;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j].size() != 1 || cols_[j][0].row != j || !cols_[j][0].value.is_one()) return false;
  }
  return true;
}

void SparseMatrix::set_column(std::size_t j, Column col) {
  std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  Column clean;
  clean.reserve(col.size());
  for (auto& e : col) {
    if (e.row >= rows_) throw DimensionError("row index out of range");
    Scalar v = ring_.from(e.value);
    if (!clean.empty() && clean.back().row == e.row) {
      clean.back().value = ring_.add(clean.back().value, v);
      if (clean.back().value.is_zero()) clean.pop_back();
    } else if (!v.is_zero()) {
      clean.push_back({e.row, std::move(v)});
    }
  }
  cols_.at(j) = std::move(clean);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(ring_, cols_.size(), rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& e : cols_[j]) t.cols_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
  }
  return t;
}

SparseMatrix SparseMatrix::reduce_to(const RingSpec& target) const {
  if (target == ring_) return *this;
  bool ok = (ring_.is_integers()) || (ring_.kind() == RingSpec::Kind::rationals &&
                                      target.kind() == RingSpec::Kind::prime_field);
  if (!ok) throw RingError("cannot reduce a matrix over " + ring_.name() + " to " + target.name());
  SparseMatrix m(target, rows_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& e : cols_[j]) {
      Scalar v = target.from(e.value);
      if (!v.is_zero()) m.cols_[j].push_back({e.row, std::move(v)});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  Scalar cc = ring_.from(c);
  SparseMatrix m(ring_, rows_, cols_.size());
  if (cc.is_zero()) return m;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    m.cols_[j].reserve(cols_[j].size());
    for (const auto& e : cols_[j]) {
      Scalar v = ring_.mul(cc, e.value);
      if (!v.is_zero()) m.cols_[j].push_back({e.row, std::move(v)});
    }
  }
  return m;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  SparseMatrix m(ring_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) m.cols_[k] = cols_.at(idx[k]);
  return m;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  std::vector<std::int64_t> where(rows_, -1);
  for (std::size_t k = 0; k < idx.size(); ++k) where.at(idx[k]) = static_cast<std::int64_t>(k);
  SparseMatrix m(ring_, idx.size(), cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& e : cols_[j]) {
      if (where[e.row] >= 0) m.cols_[j].push_back({static_cast<std::uint32_t>(where[e.row]), e.value});
    }
    std::sort(m.cols_[j].begin(), m.cols_[j].end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  }
  return m;
}

SparseMatrix SparseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_.size()) throw DimensionError("block outside " + shape(*this));
  SparseMatrix m(ring_, nr, nc);
  for (std::size_t j = 0; j < nc; ++j) {
    for (const auto& e : cols_[c0 + j]) {
      if (e.row >= r0 && e.row < r0 + nr) m.cols_[j].push_back({static_cast<std::uint32_t>(e.row - r0), e.value});
    }
  }
  return m;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_.size()));
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& e : cols_[j]) d[e.row][j] = e.value;
  }
  return d;
}

std::vector<Scalar> SparseMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_.size()) throw DimensionError("apply: vector length mismatch");
  std::vector<Scalar> y(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& e : cols_[j]) y[e.row] = ring_.add(y[e.row], ring_.mul(e.value, x[j]));
  }
  return y;
}

std::string SparseMatrix::to_string() const {
  std::ostringstream os;
  auto d = to_dense();
  os << shape(*this) << " over " << ring_.name() << "\n";
  for (const auto& row : d) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].to_string();
    os << "]\n";
  }
  return os.str();
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  require_same_ring(a, b, "multiply");
  if (a.cols() != b.rows()) throw DimensionError("multiply: " + shape(a) + " * " + shape(b));
  const RingSpec& ring = a.ring_;
  SparseMatrix m(ring, a.rows(), b.cols());
  std::vector<Scalar> acc(a.rows());
  std::vector<char> used(a.rows(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    touched.clear();
    for (const auto& eb : b.cols_[j]) {
      for (const auto& ea : a.cols_[eb.row]) {
        if (!used[ea.row]) {
          used[ea.row] = 1;
          touched.push_back(ea.row);
          acc[ea.row] = ring.mul(ea.value, eb.value);
        } else {
          acc[ea.row] = ring.add(acc[ea.row], ring.mul(ea.value, eb.value));
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& col = m.cols_[j];
    for (auto r : touched) {
      if (!acc[r].is_zero()) col.push_back({r, acc[r]});
      acc[r] = Scalar();
      used[r] = 0;
    }
  }
  return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  require_same_ring(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: " + shape(a) + " + " + shape(b));
  SparseMatrix m(a.ring_, a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) m.cols_[j] = axpy(a.ring_, a.cols_[j], Scalar(1), b.cols_[j]);
  return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  require_same_ring(a, b, "subtract");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("subtract: " + shape(a) + " - " + shape(b));
  SparseMatrix m(a.ring_, a.rows(), a.cols());
  const Scalar minus_one = a.ring_.from(Scalar(-1));
  for (std::size_t j = 0; j < a.cols(); ++j) m.cols_[j] = axpy(a.ring_, a.cols_[j], minus_one, b.cols_[j]);
  return m;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return SparseMatrix();
  std::vector<SparseMatrix::Column> cols;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw DimensionError("hstack: row counts differ");
    if (!(b.ring() == blocks.front().ring())) throw RingError("hstack: ring mismatch");
    for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
  }
  return SparseMatrix::from_columns(blocks.front().ring(), blocks.front().rows(), std::move(cols));
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return SparseMatrix();
  const std::size_t nc = blocks.front().cols();
  std::vector<SparseMatrix::Column> cols(nc);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    if (b.cols() != nc) throw DimensionError("vstack: column counts differ");
    if (!(b.ring() == blocks.front().ring())) throw RingError("vstack: ring mismatch");
    for (std::size_t j = 0; j < nc; ++j) {
      for (const auto& e : b.column(j)) cols[j].push_back({static_cast<std::uint32_t>(e.row + offset), e.value});
    }
    offset += b.rows();
  }
  return SparseMatrix::from_columns(blocks.front().ring(), offset, std::move(cols));
}

SparseMatrix block_diagonal(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) return SparseMatrix();
  std::vector<SparseMatrix::Column> cols;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    if (!(b.ring() == blocks.front().ring())) throw RingError("block_diagonal: ring mismatch");
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseMatrix::Column c;
      for (const auto& e : b.column(j)) c.push_back({static_cast<std::uint32_t>(e.row + offset), e.value});
      cols.push_back(std::move(c));
    }
    offset += b.rows();
  }
  return SparseMatrix::from_columns(blocks.front().ring(), offset, std::move(cols));
}

SparseMatrix power(const SparseMatrix& a, unsigned k) {
  if (a.rows() != a.cols()) throw DimensionError("power of a non-square matrix");
  SparseMatrix result = SparseMatrix::identity(a.ring(), a.rows());
  SparseMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<Scalar> canonical_vector(const RingSpec& ring, std::vector<Scalar> v) {
  for (auto& x : v) x = ring.from(x);
  return v;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

}  // namespace cychom
