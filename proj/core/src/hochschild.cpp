#include "cychom/hochschild.hpp"

#include <random>

#include "cychom/errors.hpp"
#include "cychom/parallel.hpp"

namespace cychom {

AlgebraPresentation::AlgebraPresentation(RingSpec ring, std::size_t dim)
    : ring_(ring), dim_(dim), unit_(dim), mu_(dim * dim * dim), products_(dim * dim) {
  if (dim == 0) throw DimensionError("algebra of dimension 0");
  for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
}

void AlgebraPresentation::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw DimensionError("need " + std::to_string(dim_) + " basis labels");
  labels_ = std::move(labels);
}

void AlgebraPresentation::set_unit(std::vector<Scalar> unit) {
  if (unit.size() != dim_) throw DimensionError("unit needs " + std::to_string(dim_) + " coordinates");
  for (auto& x : unit) x = ring_.from(x);
  unit_ = std::move(unit);
}

void AlgebraPresentation::set_product(std::size_t i, std::size_t j, const std::vector<Scalar>& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) throw DimensionError("set_product: bad index or length");
  for (std::size_t k = 0; k < dim_; ++k) mu_[(i * dim_ + j) * dim_ + k] = ring_.from(value[k]);
  refresh(i, j);
}

void AlgebraPresentation::set_mu(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("set_mu: index out of range");
  mu_[(i * dim_ + j) * dim_ + k] = ring_.from(value);
  refresh(i, j);
}

void AlgebraPresentation::refresh(std::size_t i, std::size_t j) {
  auto& col = products_[i * dim_ + j];
  col.clear();
  for (std::size_t k = 0; k < dim_; ++k) {
    const Scalar& x = mu_[(i * dim_ + j) * dim_ + k];
    if (!x.is_zero()) col.push_back({static_cast<std::uint32_t>(k), x});
  }
}

std::vector<Scalar> AlgebraPresentation::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = ring_.mul(x[i], y[j]);
      for (const auto& e : product(i, j)) out[e.row] = ring_.add(out[e.row], ring_.mul(xy, e.value));
    }
  }
  return out;
}

AlgebraPresentation AlgebraPresentation::reduce_to(const RingSpec& target) const {
  AlgebraPresentation out(target, dim_);
  out.labels_ = labels_;
  out.set_unit(unit_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out.set_product(i, j, std::vector<Scalar>(mu_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                                                mu_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_)));
    }
  }
  return out;
}

AlgebraPresentation AlgebraPresentation::change_basis(const SparseMatrix& p, const SparseMatrix& p_inverse) const {
  if (p.rows() != dim_ || p.cols() != dim_ || !(p * p_inverse).is_identity()) {
    throw DimensionError("change_basis: not an invertible matrix of the right size");
  }
  auto coords = [&](const SparseMatrix::Column& c) {
    std::vector<Scalar> v(dim_);
    for (const auto& e : c) v[e.row] = e.value;
    return v;
  };
  auto apply_inverse = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& e : p_inverse.column(j)) out[e.row] = ring_.add(out[e.row], ring_.mul(e.value, v[j]));
    }
    return out;
  };
  AlgebraPresentation out(ring_, dim_);
  out.set_unit(apply_inverse(unit_));
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) out.set_product(a, b, apply_inverse(multiply(coords(p.column(a)), coords(p.column(b)))));
  }
  return out;
}

std::vector<std::string> validate_algebra(const AlgebraPresentation& a) {
  std::vector<std::string> bad;
  const std::size_t d = a.dim();
  const auto& names = a.labels();
  auto basis = [&](std::size_t i) {
    std::vector<Scalar> v(d);
    v[i] = Scalar(1);
    return v;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto ij = a.multiply(basis(i), basis(j));
      for (std::size_t k = 0; k < d; ++k) {
        if (a.multiply(ij, basis(k)) != a.multiply(basis(i), a.multiply(basis(j), basis(k)))) {
          bad.push_back("associativity fails for (" + names[i] + ", " + names[j] + ", " + names[k] + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (a.multiply(a.unit(), basis(i)) != basis(i)) bad.push_back("unit * " + names[i] + " != " + names[i]);
    if (a.multiply(basis(i), a.unit()) != basis(i)) bad.push_back(names[i] + " * unit != " + names[i]);
  }
  return bad;
}

CyclicModule cyclic_nerve(const AlgebraPresentation& a, int truncation, std::size_t size_cap) {
  if (truncation < 0) throw RangeError("cyclic_nerve: negative truncation");
  const auto problems = validate_algebra(a);
  if (!problems.empty()) throw AlgebraError("cyclic_nerve: " + problems.front());
  const std::size_t d = a.dim();
  std::vector<std::size_t> pw{1};
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= truncation; ++n) {
    if (pw.back() > size_cap / d) {
      throw SizeCapError("cyclic_nerve: level " + std::to_string(n) + " exceeds the size cap " + std::to_string(size_cap));
    }
    pw.push_back(pw.back() * d);
  }
  for (int n = 0; n <= truncation; ++n) {
    if (pw[n + 1] > size_cap) {
      throw SizeCapError("cyclic_nerve: level " + std::to_string(n) + " has rank " + std::to_string(pw[n + 1]) +
                         ", above the cap " + std::to_string(size_cap));
    }
    ranks.push_back(pw[n + 1]);
  }
  const RingSpec& ring = a.ring();
  CyclicModule out(ring, truncation, ranks);

  // one job per operator matrix
  struct Job {
    GeneratorKind kind;
    int n;
    int i;
  };
  std::vector<Job> jobs;
  for (int n = 0; n <= truncation; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) jobs.push_back({GeneratorKind::face, n, i});
    for (int i = 0; n < truncation && i <= n; ++i) jobs.push_back({GeneratorKind::degeneracy, n, i});
    jobs.push_back({GeneratorKind::cyclic, n, 0});
  }
  std::vector<SparseMatrix> built(jobs.size());
  SparseMatrix::Column unit;
  for (std::size_t k = 0; k < d; ++k) {
    if (!a.unit()[k].is_zero()) unit.push_back({static_cast<std::uint32_t>(k), a.unit()[k]});
  }

  parallel_for(jobs.size(), [&](std::size_t job) {
    const auto [kind, n, i] = jobs[job];
    const std::size_t cols = pw[n + 1];
    std::vector<SparseMatrix::Triplet> trips;
    trips.reserve(cols * (kind == GeneratorKind::cyclic ? 1 : d));
    for (std::size_t idx = 0; idx < cols; ++idx) {
      switch (kind) {
        case GeneratorKind::face: {
          if (i < n) {
            const std::size_t high = idx / pw[n + 1 - i];
            const std::size_t low = idx % pw[n - 1 - i];
            const std::size_t x = (idx / pw[n - i]) % d;
            const std::size_t y = (idx / pw[n - 1 - i]) % d;
            for (const auto& e : a.product(x, y)) trips.push_back({high * pw[n - i] + e.row * pw[n - 1 - i] + low, idx, e.value});
          } else {
            const std::size_t first = idx / pw[n];
            const std::size_t last = idx % d;
            const std::size_t middle = (idx / d) % pw[n - 1];
            for (const auto& e : a.product(last, first)) trips.push_back({e.row * pw[n - 1] + middle, idx, e.value});
          }
          break;
        }
        case GeneratorKind::degeneracy: {
          const std::size_t high = idx / pw[n - i];
          const std::size_t low = idx % pw[n - i];
          for (const auto& e : unit) trips.push_back({high * pw[n + 1 - i] + e.row * pw[n - i] + low, idx, e.value});
          break;
        }
        case GeneratorKind::cyclic:
          trips.push_back({(idx % d) * pw[n] + idx / d, idx, Scalar(1)});
          break;
      }
    }
    const std::size_t rows = kind == GeneratorKind::face ? pw[n] : kind == GeneratorKind::degeneracy ? pw[n + 2] : cols;
    built[job] = SparseMatrix::from_triplets(ring, rows, cols, std::move(trips));
  });

  for (std::size_t job = 0; job < jobs.size(); ++job) {
    const auto [kind, n, i] = jobs[job];
    if (kind == GeneratorKind::face) out.set_face(n, i, std::move(built[job]));
    if (kind == GeneratorKind::degeneracy) out.set_degeneracy(n, i, std::move(built[job]));
    if (kind == GeneratorKind::cyclic) out.set_cyclic(n, std::move(built[job]));
  }
  return out;
}

AlgebraPresentation ground_algebra(const RingSpec& ring) {
  AlgebraPresentation a(ring, 1);
  a.set_labels({"1"});
  a.set_unit({Scalar(1)});
  a.set_product(0, 0, {Scalar(1)});
  return a;
}

AlgebraPresentation dual_numbers(const RingSpec& ring) {
  AlgebraPresentation a(ring, 2);
  a.set_labels({"1", "x"});
  a.set_unit({Scalar(1), Scalar(0)});
  a.set_product(0, 0, {Scalar(1), Scalar(0)});
  a.set_product(0, 1, {Scalar(0), Scalar(1)});
  a.set_product(1, 0, {Scalar(0), Scalar(1)});
  return a;
}

AlgebraPresentation cyclic_group_algebra(const RingSpec& ring, int m) {
  if (m < 1) throw RangeError("cyclic_group_algebra: order must be positive");
  const auto d = static_cast<std::size_t>(m);
  AlgebraPresentation a(ring, d);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("g" + std::to_string(i));
  a.set_labels(std::move(labels));
  std::vector<Scalar> unit(d);
  unit[0] = Scalar(1);
  a.set_unit(unit);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a.set_mu(i, j, (i + j) % d, Scalar(1));
  }
  return a;
}

AlgebraPresentation matrix_algebra(const RingSpec& ring, int n) {
  if (n < 1) throw RangeError("matrix_algebra: size must be positive");
  const auto s = static_cast<std::size_t>(n);
  AlgebraPresentation a(ring, s * s);
  std::vector<std::string> labels;
  std::vector<Scalar> unit(s * s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    unit[i * s + i] = Scalar(1);
  }
  a.set_labels(std::move(labels));
  a.set_unit(unit);
  // E_ij E_kl = [j == k] E_il
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t l = 0; l < s; ++l) a.set_mu(i * s + j, j * s + l, i * s + l, Scalar(1));
    }
  }
  return a;
}

AlgebraPresentation upper_triangular_algebra(const RingSpec& ring, int n) {
  if (n < 1) throw RangeError("upper_triangular_algebra: size must be positive");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  AlgebraPresentation a(ring, cells.size());
  std::vector<std::string> labels;
  std::vector<Scalar> unit(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    labels.push_back("E" + std::to_string(cells[c].first + 1) + std::to_string(cells[c].second + 1));
    if (cells[c].first == cells[c].second) unit[c] = Scalar(1);
  }
  a.set_labels(std::move(labels));
  a.set_unit(unit);
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = 0; y < cells.size(); ++y) {
      if (cells[x].second != cells[y].first) continue;
      for (std::size_t z = 0; z < cells.size(); ++z) {
        if (cells[z] == std::make_pair(cells[x].first, cells[y].second)) a.set_mu(x, y, z, Scalar(1));
      }
    }
  }
  return a;
}

AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!(a.ring() == b.ring())) throw RingError("product_algebra: factors over different rings");
  const std::size_t da = a.dim();
  AlgebraPresentation out(a.ring(), da + b.dim());
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  out.set_labels(std::move(labels));
  std::vector<Scalar> unit(a.unit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  out.set_unit(unit);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < da; ++k) out.set_mu(i, j, k, a.mu(i, j, k));
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) out.set_mu(da + i, da + j, da + k, b.mu(i, j, k));
    }
  }
  return out;
}

AlgebraPresentation random_associative_algebra(std::uint64_t seed, std::size_t dim) {
  if (dim < 1 || dim > 3) throw RangeError("random_associative_algebra: dimension must be 1, 2 or 3");
  const RingSpec z = RingSpec::integers();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::bernoulli_distribution nonzero(0.35);
  AlgebraPresentation a(z, dim);
  for (int attempt = 0;; ++attempt) {
    a = AlgebraPresentation(z, dim);
    std::vector<Scalar> unit(dim);
    unit[0] = Scalar(1);
    a.set_unit(unit);
    for (std::size_t i = 0; i < dim; ++i) {
      a.set_mu(0, i, i, Scalar(1));
      a.set_mu(i, 0, i, Scalar(1));
    }
    for (std::size_t i = 1; i < dim; ++i) {
      for (std::size_t j = 1; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) a.set_mu(i, j, k, nonzero(rng) ? Scalar(coeff(rng)) : Scalar(0));
      }
    }
    if (validate_algebra(a).empty()) break;
    if (attempt > 100000) throw AlgebraError("random_associative_algebra: no associative sample found");
  }
  // random unimodular basis change built from elementary column operations
  SparseMatrix p = SparseMatrix::identity(z, dim);
  SparseMatrix p_inv = p;
  std::uniform_int_distribution<std::size_t> slot(0, dim - 1);
  for (int step = 0; dim > 1 && step < 3; ++step) {
    const std::size_t i = slot(rng);
    std::size_t j = slot(rng);
    if (i == j) j = (j + 1) % dim;
    const Scalar c(coeff(rng));
    // column j += c * column i
    SparseMatrix e = SparseMatrix::from_triplets(z, dim, dim, {{i, j, c}}) + SparseMatrix::identity(z, dim);
    SparseMatrix e_inv = SparseMatrix::from_triplets(z, dim, dim, {{i, j, -c}}) + SparseMatrix::identity(z, dim);
    p = p * e;
    p_inv = e_inv * p_inv;
  }
  return a.change_basis(p, p_inv);
}

}  // namespace cychom
