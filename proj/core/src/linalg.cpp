#include "cychom/linalg.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "cychom/errors.hpp"

namespace cychom {

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense identity_dense(std::size_t n) {
  Dense d(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Scalar(1);
  return d;
}

// Dense Smith reduction. Row operations are mirrored on U (rows) and on
// U^{-1} (inverse column operations); column operations on V.
class DenseSmith {
 public:
  DenseSmith(const RingSpec& ring, Dense m, std::size_t rows, std::size_t cols, bool track)
      : ring_(ring), m_(std::move(m)), rows_(rows), cols_(cols), track_(track) {
    if (track_) {
      u_ = identity_dense(rows_);
      uinv_ = identity_dense(rows_);
      v_ = identity_dense(cols_);
    }
  }

  void run() {
    const std::size_t lim = std::min(rows_, cols_);
    for (std::size_t t = 0; t < lim; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (m_[i][t].is_zero()) continue;
          add_row(i, t, ring_.neg(quotient(m_[i][t], m_[t][t])));
          if (!m_[i][t].is_zero()) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (m_[t][j].is_zero()) continue;
          add_col(j, t, ring_.neg(quotient(m_[t][j], m_[t][t])));
          if (!m_[t][j].is_zero()) clean = false;
        }
        if (!clean) {
          // a remainder is smaller than the pivot: move the smallest one in
          std::size_t bi = t, bj = t;
          Scalar best = m_[t][t].abs();
          for (std::size_t i = t + 1; i < rows_; ++i) {
            if (!m_[i][t].is_zero() && m_[i][t].abs() < best) best = m_[i][t].abs(), bi = i, bj = t;
          }
          for (std::size_t j = t + 1; j < cols_; ++j) {
            if (!m_[t][j].is_zero() && m_[t][j].abs() < best) best = m_[t][j].abs(), bi = t, bj = j;
          }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        if (ring_.is_integers()) {
          std::size_t bad_row = rows_;
          for (std::size_t i = t + 1; i < rows_ && bad_row == rows_; ++i) {
            for (std::size_t j = t + 1; j < cols_; ++j) {
              if (!divides(m_[t][t], m_[i][j])) {
                bad_row = i;
                break;
              }
            }
          }
          if (bad_row != rows_) {
            add_row(t, bad_row, Scalar(1));
            continue;
          }
        }
        break;
      }
      if (ring_.is_integers()) {
        if (m_[t][t].sign() < 0) scale_row(t, Scalar(-1), Scalar(-1));
      } else if (!m_[t][t].is_one()) {
        Scalar p = m_[t][t];
        scale_row(t, ring_.inverse(p), p);
      }
      diag_.push_back(m_[t][t]);
    }
  }

  const std::vector<Scalar>& diagonal() const { return diag_; }
  const Dense& matrix() const { return m_; }
  const Dense& u() const { return u_; }
  const Dense& uinv() const { return uinv_; }
  const Dense& v() const { return v_; }

 private:
  Scalar quotient(const Scalar& a, const Scalar& b) const {
    if (ring_.is_integers()) return floor_div(a, b);
    return ring_.divide_exact(a, b);
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Scalar best;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        const Scalar& x = m_[i][j];
        if (x.is_zero()) continue;
        if (!ring_.is_integers()) {
          pi = i, pj = j;
          return true;
        }
        Scalar a = x.abs();
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i, pj = j;
        }
      }
    }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(m_[a], m_[b]);
    if (track_) {
      std::swap(u_[a], u_[b]);
      for (auto& row : uinv_) std::swap(row[a], row[b]);
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m_) std::swap(row[a], row[b]);
    if (track_) {
      for (auto& row : v_) std::swap(row[a], row[b]);
    }
  }

  // row_i += q * row_t
  void add_row(std::size_t i, std::size_t t, const Scalar& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!m_[t][j].is_zero()) m_[i][j] = ring_.add(m_[i][j], ring_.mul(q, m_[t][j]));
    }
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) {
        if (!u_[t][j].is_zero()) u_[i][j] = ring_.add(u_[i][j], ring_.mul(q, u_[t][j]));
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (!uinv_[r][i].is_zero()) uinv_[r][t] = ring_.sub(uinv_[r][t], ring_.mul(q, uinv_[r][i]));
      }
    }
  }

  // col_j += q * col_t
  void add_col(std::size_t j, std::size_t t, const Scalar& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!m_[i][t].is_zero()) m_[i][j] = ring_.add(m_[i][j], ring_.mul(q, m_[i][t]));
    }
    if (track_) {
      for (std::size_t i = 0; i < cols_; ++i) {
        if (!v_[i][t].is_zero()) v_[i][j] = ring_.add(v_[i][j], ring_.mul(q, v_[i][t]));
      }
    }
  }

  // row_t *= c, where c_inv is the inverse of c
  void scale_row(std::size_t t, const Scalar& c, const Scalar& c_inv) {
    for (auto& x : m_[t]) x = ring_.mul(c, x);
    if (track_) {
      for (auto& x : u_[t]) x = ring_.mul(c, x);
      for (auto& row : uinv_) row[t] = ring_.mul(c_inv, row[t]);
    }
  }

  RingSpec ring_;
  Dense m_;
  std::size_t rows_, cols_;
  bool track_;
  Dense u_, uinv_, v_;
  std::vector<Scalar> diag_;
};

struct EliminationResult {
  std::size_t pivots = 0;
  SparseMatrix remainder;
};

// Sparse Gaussian elimination using only unit pivots. Rows are eliminated
// against each pivot; whatever cannot be pivoted on (non-unit entries over
// Z) is returned as a compact remainder.
EliminationResult unit_pivot_elimination(const SparseMatrix& a) {
  const RingSpec& ring = a.ring();
  using RowEntry = std::pair<std::uint32_t, Scalar>;
  using Row = std::vector<RowEntry>;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::vector<Row> rows(nr);
  std::vector<std::vector<std::uint32_t>> col_rows(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    for (const auto& e : a.column(j)) {
      rows[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
      col_rows[j].push_back(e.row);
    }
  }
  std::vector<char> row_active(nr, 1);
  std::vector<char> col_done(nc, 0);

  auto find_in_row = [](const Row& r, std::uint32_t c) -> const Scalar* {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const RowEntry& e, std::uint32_t x) { return e.first < x; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
  };
  auto clean_column = [&](std::uint32_t c) {
    auto& list = col_rows[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](std::uint32_t r) { return !row_active[r] || find_in_row(rows[r], c) == nullptr; }),
               list.end());
    return list.size();
  };

  EliminationResult result;
  using Item = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::uint32_t c = 0; c < nc; ++c) {
    if (!col_rows[c].empty()) heap.push({col_rows[c].size(), c});
  }
  std::vector<std::uint32_t> deferred;
  Row merged;
  for (;;) {
    std::size_t pivots_before = result.pivots;
    while (!heap.empty()) {
      auto [count, c] = heap.top();
      heap.pop();
      if (col_done[c]) continue;
      std::size_t actual = clean_column(c);
      if (actual == 0) continue;
      if (actual != count) {
        heap.push({actual, c});
        continue;
      }
      std::int64_t pivot_row = -1;
      for (auto r : col_rows[c]) {
        const Scalar* v = find_in_row(rows[r], c);
        if (!ring.is_unit(*v)) continue;
        if (pivot_row < 0 || rows[r].size() < rows[pivot_row].size()) pivot_row = r;
      }
      if (pivot_row < 0) {
        deferred.push_back(c);
        continue;
      }
      const auto p = static_cast<std::uint32_t>(pivot_row);
      const Row& prow = rows[p];
      const Scalar inv = ring.inverse(*find_in_row(prow, c));
      for (auto o : std::vector<std::uint32_t>(col_rows[c])) {
        if (o == p) continue;
        Row& orow = rows[o];
        const Scalar factor = ring.neg(ring.mul(*find_in_row(orow, c), inv));
        merged.clear();
        merged.reserve(orow.size() + prow.size());
        std::size_t i = 0, j = 0;
        while (i < orow.size() || j < prow.size()) {
          if (j == prow.size() || (i < orow.size() && orow[i].first < prow[j].first)) {
            merged.push_back(std::move(orow[i++]));
          } else if (i == orow.size() || prow[j].first < orow[i].first) {
            Scalar v = ring.mul(factor, prow[j].second);
            if (!v.is_zero()) {
              merged.push_back({prow[j].first, std::move(v)});
              col_rows[prow[j].first].push_back(o);
            }
            ++j;
          } else {
            Scalar v = ring.add(orow[i].second, ring.mul(factor, prow[j].second));
            if (!v.is_zero()) merged.push_back({orow[i].first, std::move(v)});
            ++i;
            ++j;
          }
        }
        orow.swap(merged);
      }
      row_active[p] = 0;
      col_done[c] = 1;
      ++result.pivots;
    }
    if (deferred.empty() || result.pivots == pivots_before) break;
    for (auto c : deferred) heap.push({clean_column(c), c});
    deferred.clear();
  }

  // compact remainder
  std::vector<std::int64_t> col_index(nc, -1);
  std::size_t rc = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!col_done[c] && clean_column(static_cast<std::uint32_t>(c)) > 0) col_index[c] = static_cast<std::int64_t>(rc++);
  }
  std::vector<SparseMatrix::Triplet> trips;
  std::size_t rr = 0;
  for (std::size_t r = 0; r < nr; ++r) {
    if (!row_active[r] || rows[r].empty()) continue;
    bool any = false;
    for (const auto& [c, v] : rows[r]) {
      if (col_index[c] >= 0) {
        trips.push_back({rr, static_cast<std::size_t>(col_index[c]), v});
        any = true;
      }
    }
    if (any) ++rr;
  }
  result.remainder = SparseMatrix::from_triplets(ring, rr, rc, std::move(trips));
  return result;
}

SparseMatrix to_sparse(const RingSpec& ring, const Dense& d, std::size_t rows, std::size_t cols) {
  return SparseMatrix::from_dense(ring, rows, cols, d);
}

SparseMatrix::Column combine(const RingSpec& ring, const Scalar& alpha, const SparseMatrix::Column& x,
                             const Scalar& beta, const SparseMatrix::Column& y) {
  SparseMatrix::Column out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Scalar v;
    std::uint32_t r;
    if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
      r = x[i].row;
      v = ring.mul(alpha, x[i++].value);
    } else if (i == x.size() || y[j].row < x[i].row) {
      r = y[j].row;
      v = ring.mul(beta, y[j++].value);
    } else {
      r = x[i].row;
      v = ring.add(ring.mul(alpha, x[i++].value), ring.mul(beta, y[j++].value));
    }
    if (!v.is_zero()) out.push_back({r, std::move(v)});
  }
  return out;
}

}  // namespace

SmithForm diagonalize(const SparseMatrix& a) {
  DenseSmith s(a.ring(), a.to_dense(), a.rows(), a.cols(), true);
  s.run();
  SmithForm f;
  f.U = to_sparse(a.ring(), s.u(), a.rows(), a.rows());
  f.U_inverse = to_sparse(a.ring(), s.uinv(), a.rows(), a.rows());
  f.V = to_sparse(a.ring(), s.v(), a.cols(), a.cols());
  f.D = to_sparse(a.ring(), s.matrix(), a.rows(), a.cols());
  f.diagonal = s.diagonal();
  return f;
}

SmithForm smith_normal_form(const SparseMatrix& a) {
  if (!a.ring().is_integers()) throw RingError("smith_normal_form requires a matrix over Z, got " + a.ring().name());
  return diagonalize(a);
}

std::vector<Scalar> invariant_factors(const SparseMatrix& a) {
  EliminationResult e = unit_pivot_elimination(a);
  std::vector<Scalar> out(e.pivots, Scalar(1));
  if (e.remainder.rows() > 0 && e.remainder.cols() > 0) {
    DenseSmith s(a.ring(), e.remainder.to_dense(), e.remainder.rows(), e.remainder.cols(), false);
    s.run();
    out.insert(out.end(), s.diagonal().begin(), s.diagonal().end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Scalar& x, const Scalar& y) { return x < y; });
  return out;
}

std::size_t rank(const SparseMatrix& a) {
  if (a.ring().is_integers()) {
    // rank over Z equals rank over Q; eliminate over Q would blow up less
    // predictably than unit pivots plus a small dense remainder
    return invariant_factors(a).size();
  }
  EliminationResult e = unit_pivot_elimination(a);
  return e.pivots;  // over a field every nonzero entry is a unit
}

KernelImage rank_kernel_image(const SparseMatrix& a) {
  ColumnEchelon ce(a);
  return {ce.rank(), ce.kernel_basis(), ce.image_basis()};
}

ColumnEchelon::ColumnEchelon(const SparseMatrix& a) : owner_of_row_(a.rows(), -1) {
  const RingSpec& ring = a.ring();
  const std::size_t n = a.cols();
  std::vector<SparseMatrix::Column> red(n), tr(n);
  const Scalar one(1);
  for (std::size_t j = 0; j < n; ++j) {
    SparseMatrix::Column v = a.column(j);
    SparseMatrix::Column w{{static_cast<std::uint32_t>(j), one}};
    while (!v.empty()) {
      const std::uint32_t low = v.back().row;
      const std::int64_t owner = owner_of_row_[low];
      if (owner < 0) {
        owner_of_row_[low] = static_cast<std::int64_t>(j);
        break;
      }
      auto& u = red[owner];
      auto& tu = tr[owner];
      const Scalar& a_low = u.back().value;
      const Scalar& b_low = v.back().value;
      if (ring.divides(a_low, b_low)) {
        Scalar q = ring.neg(ring.divide_exact(b_low, a_low));
        v = combine(ring, one, v, q, u);
        w = combine(ring, one, w, q, tu);
      } else {
        ExtendedGcd x = extended_gcd(a_low, b_low);
        Scalar ag = a_low / x.g;
        Scalar bg = b_low / x.g;
        auto new_u = combine(ring, x.s, u, x.t, v);
        auto new_tu = combine(ring, x.s, tu, x.t, w);
        auto new_v = combine(ring, ag, v, -bg, u);
        auto new_w = combine(ring, ag, w, -bg, tu);
        u = std::move(new_u);
        tu = std::move(new_tu);
        v = std::move(new_v);
        w = std::move(new_w);
      }
    }
    red[j] = std::move(v);
    tr[j] = std::move(w);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!red[j].empty()) pivots_.push_back(j);
  }
  reduced_ = SparseMatrix::from_columns(ring, a.rows(), std::move(red));
  transform_ = SparseMatrix::from_columns(ring, n, std::move(tr));
}

SparseMatrix ColumnEchelon::kernel_basis() const {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < reduced_.cols(); ++j) {
    if (reduced_.column(j).empty()) idx.push_back(j);
  }
  return transform_.select_columns(idx);
}

SparseMatrix ColumnEchelon::image_basis() const { return reduced_.select_columns(pivots_); }

std::optional<std::vector<Scalar>> ColumnEchelon::solve(const std::vector<Scalar>& y_in) const {
  const RingSpec& ring = reduced_.ring();
  if (y_in.size() != reduced_.rows()) throw DimensionError("solve: vector length mismatch");
  std::vector<Scalar> y = canonical_vector(ring, y_in);
  std::vector<Scalar> coef(reduced_.cols());
  std::size_t top = y.size();
  while (top > 0) {
    if (y[top - 1].is_zero()) {
      --top;
      continue;
    }
    const std::size_t low = top - 1;
    const std::int64_t owner = owner_of_row_[low];
    if (owner < 0) return std::nullopt;
    const auto& u = reduced_.column(static_cast<std::size_t>(owner));
    const Scalar& a_low = u.back().value;
    if (!ring.divides(a_low, y[low])) return std::nullopt;
    Scalar q = ring.divide_exact(y[low], a_low);
    for (const auto& e : u) y[e.row] = ring.sub(y[e.row], ring.mul(q, e.value));
    coef[owner] = ring.add(coef[owner], q);
    --top;
  }
  return transform_.apply(coef);
}

HomologyGroup HomologyGroup::abelian(std::size_t free_rank, std::vector<Scalar> torsion) {
  HomologyGroup g;
  g.free_rank_ = free_rank;
  for (auto& t : torsion) {
    Scalar a = t.abs();
    if (a.is_zero()) throw DimensionError("torsion factor 0");
    if (!a.is_one()) g.torsion_.push_back(a);
  }
  for (std::size_t i = 1; i < g.torsion_.size(); ++i) {
    if (!divides(g.torsion_[i - 1], g.torsion_[i])) throw DimensionError("torsion factors do not form a divisibility chain");
  }
  return g;
}

HomologyGroup HomologyGroup::over(const RingSpec& ring, std::size_t free_rank, std::vector<Scalar> torsion) {
  if (ring.is_field()) return vector_space(free_rank);
  return abelian(free_rank, std::move(torsion));
}

std::string HomologyGroup::to_string() const {
  if (field_) return free_rank_ == 0 ? "0" : "k^" + std::to_string(free_rank_);
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    os << (first ? "" : " + ") << "Z/" << t.to_string();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HomologyGroup quotient_group(const SparseMatrix& image, std::size_t ambient_rank) {
  if (image.rows() != ambient_rank) throw DimensionError("quotient_group: image rows differ from ambient rank");
  auto factors = invariant_factors(image);
  const std::size_t free_rank = ambient_rank - factors.size();
  return HomologyGroup::over(image.ring(), free_rank, std::move(factors));
}

HomologyGroup homology_at(const RingSpec& ring, std::size_t dim, const SparseMatrix& d_out,
                          const SparseMatrix& d_in) {
  if (d_out.cols() != dim || d_in.rows() != dim) throw DimensionError("homology_at: differential shapes do not match");
  if (!(d_out.ring() == ring) || !(d_in.ring() == ring)) throw RingError("homology_at: ring mismatch");
  const std::size_t r_out = rank(d_out);
  auto factors = invariant_factors(d_in);
  if (r_out + factors.size() > dim) throw DimensionError("homology_at: d_out * d_in is not zero");
  const std::size_t free_rank = dim - r_out - factors.size();
  return HomologyGroup::over(ring, free_rank, std::move(factors));
}

bool is_exact_at(const SparseMatrix& f, const SparseMatrix& g) {
  if (g.cols() != f.rows()) throw DimensionError("is_exact_at: maps are not composable");
  if (!(g * f).is_zero()) return false;
  auto factors = invariant_factors(f);
  if (factors.size() + rank(g) != f.rows()) return false;
  return std::all_of(factors.begin(), factors.end(), [](const Scalar& x) { return x.is_one(); });
}

HomologyPresentation::HomologyPresentation(const RingSpec& ring, std::size_t dim, const SparseMatrix& d_out,
                                           const SparseMatrix& d_in)
    : ring_(ring),
      dim_(dim),
      d_out_(d_out),
      cycle_basis_(ColumnEchelon(d_out).kernel_basis()),
      cycles_(cycle_basis_) {
  if (d_out.cols() != dim || d_in.rows() != dim) throw DimensionError("HomologyPresentation: shapes do not match");
  const std::size_t k = cycle_basis_.cols();
  std::vector<SparseMatrix::Triplet> rel;
  for (std::size_t j = 0; j < d_in.cols(); ++j) {
    std::vector<Scalar> y(dim);
    for (const auto& e : d_in.column(j)) y[e.row] = e.value;
    auto x = cycles_.solve(y);
    if (!x) throw DimensionError("HomologyPresentation: a boundary is not a cycle");
    for (std::size_t i = 0; i < k; ++i) {
      if (!(*x)[i].is_zero()) rel.push_back({i, j, (*x)[i]});
    }
  }
  SparseMatrix relations = SparseMatrix::from_triplets(ring, k, d_in.cols(), std::move(rel));
  SmithForm sf = diagonalize(relations);
  const std::size_t r = sf.diagonal.size();
  for (std::size_t i = r; i < k; ++i) {
    kept_.push_back(i);
    orders_.push_back(Scalar(0));
  }
  std::vector<Scalar> torsion;
  for (std::size_t i = 0; i < r; ++i) {
    if (!sf.diagonal[i].is_one()) {
      kept_.push_back(i);
      orders_.push_back(sf.diagonal[i]);
      torsion.push_back(sf.diagonal[i]);
    }
  }
  coord_change_ = sf.U.select_rows(kept_);
  generators_ = cycle_basis_ * sf.U_inverse.select_columns(kept_);
  group_ = HomologyGroup::over(ring, k - r, torsion);
}

std::vector<Scalar> HomologyPresentation::class_of(const std::vector<Scalar>& z) const {
  if (z.size() != dim_) throw DimensionError("class_of: wrong chain length");
  std::vector<Scalar> zc = canonical_vector(ring_, z);
  if (!is_zero_vector(d_out_.apply(zc))) throw DimensionError("class_of: chain is not a cycle");
  auto x = cycles_.solve(zc);
  if (!x) throw DimensionError("class_of: cycle outside the cycle lattice");
  std::vector<Scalar> c = coord_change_.apply(*x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!orders_[i].is_zero()) c[i] = floor_mod(c[i], orders_[i]);
  }
  return c;
}

SparseMatrix induced_map(const HomologyPresentation& source, const HomologyPresentation& target,
                         const SparseMatrix& f) {
  const SparseMatrix images = f * source.generators();
  const std::size_t nt = target.orders().size();
  std::vector<SparseMatrix::Triplet> trips;
  for (std::size_t j = 0; j < images.cols(); ++j) {
    std::vector<Scalar> y(images.rows());
    for (const auto& e : images.column(j)) y[e.row] = e.value;
    auto c = target.class_of(y);
    for (std::size_t i = 0; i < nt; ++i) {
      if (!c[i].is_zero()) trips.push_back({i, j, c[i]});
    }
  }
  return SparseMatrix::from_triplets(f.ring(), nt, images.cols(), std::move(trips));
}

QuotientMap quotient_by_span(const SparseMatrix& d) {
  const RingSpec& ring = d.ring();
  const std::size_t n = d.rows();
  std::vector<SparseMatrix::Column> piv_cols;
  std::vector<std::int64_t> piv_of_row(n, -1);
  std::vector<SparseMatrix::Column> leftover;
  const Scalar one(1);

  auto reduce = [&](SparseMatrix::Column v) {
    std::vector<std::pair<std::uint32_t, Scalar>> hits;
    for (const auto& e : v) {
      if (piv_of_row[e.row] >= 0) hits.push_back({e.row, e.value});
    }
    for (const auto& [row, val] : hits) {
      v = combine(ring, one, v, ring.neg(val), piv_cols[static_cast<std::size_t>(piv_of_row[row])]);
    }
    return v;
  };

  for (std::size_t j = 0; j < d.cols(); ++j) {
    SparseMatrix::Column v = reduce(d.column(j));
    if (v.empty()) continue;
    auto unit = std::find_if(v.begin(), v.end(), [&](const SparseMatrix::Entry& e) { return ring.is_unit(e.value); });
    if (unit == v.end()) {
      leftover.push_back(std::move(v));
      continue;
    }
    const std::uint32_t rho = unit->row;
    v = combine(ring, ring.inverse(unit->value), v, Scalar(0), {});
    for (auto& w : piv_cols) {
      auto it = std::lower_bound(w.begin(), w.end(), rho, [](const SparseMatrix::Entry& e, std::uint32_t r) { return e.row < r; });
      if (it != w.end() && it->row == rho) w = combine(ring, one, w, ring.neg(it->value), v);
    }
    piv_of_row[rho] = static_cast<std::int64_t>(piv_cols.size());
    piv_cols.push_back(std::move(v));
  }

  std::vector<std::int64_t> free_index(n, -1);
  std::size_t nfree = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (piv_of_row[r] < 0) free_index[r] = static_cast<std::int64_t>(nfree++);
  }
  auto restrict_free = [&](const SparseMatrix::Column& v, bool negate) {
    SparseMatrix::Column out;
    for (const auto& e : v) {
      if (free_index[e.row] >= 0) out.push_back({static_cast<std::uint32_t>(free_index[e.row]), negate ? ring.neg(e.value) : e.value});
    }
    return out;
  };

  std::vector<SparseMatrix::Column> p1(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (free_index[r] >= 0) {
      p1[r] = {{static_cast<std::uint32_t>(free_index[r]), one}};
    } else {
      p1[r] = restrict_free(piv_cols[static_cast<std::size_t>(piv_of_row[r])], true);
    }
  }
  SparseMatrix proj1 = SparseMatrix::from_columns(ring, nfree, std::move(p1));

  std::vector<SparseMatrix::Column> rest;
  for (auto& v : leftover) {
    auto w = restrict_free(reduce(v), false);
    if (!w.empty()) rest.push_back(std::move(w));
  }
  SparseMatrix tail_proj = SparseMatrix::identity(ring, nfree);
  SparseMatrix tail_lift = SparseMatrix::identity(ring, nfree);
  if (!rest.empty()) {
    SmithForm sf = diagonalize(SparseMatrix::from_columns(ring, nfree, std::move(rest)));
    for (const auto& x : sf.diagonal) {
      if (!ring.is_unit(x)) throw RingError("quotient_by_span: the span is not a direct summand");
    }
    std::vector<std::size_t> tail;
    for (std::size_t i = sf.diagonal.size(); i < nfree; ++i) tail.push_back(i);
    tail_proj = sf.U.select_rows(tail);
    tail_lift = sf.U_inverse.select_columns(tail);
  }
  std::vector<SparseMatrix::Column> emb(nfree);
  for (std::size_t r = 0; r < n; ++r) {
    if (free_index[r] >= 0) emb[static_cast<std::size_t>(free_index[r])] = {{static_cast<std::uint32_t>(r), one}};
  }
  SparseMatrix embed = SparseMatrix::from_columns(ring, n, std::move(emb));
  return {tail_proj * proj1, embed * tail_lift};
}

Scalar determinant(const std::vector<std::vector<Scalar>>& in) {
  const std::size_t n = in.size();
  if (n == 0) return Scalar(1);
  auto m = in;
  Scalar sign(1);
  Scalar prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return Scalar(0);
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Scalar(0);
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace cychom
