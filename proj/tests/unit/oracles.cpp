#include "oracles.hpp"

#include <functional>

namespace oracle {

Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound, double density) {
  std::uniform_int_distribution<int> val(-bound, bound);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Dense d(rows, std::vector<Scalar>(cols));
  for (auto& row : d) {
    for (auto& x : row) {
      if (coin(rng) < density) x = Scalar(val(rng));
    }
  }
  return d;
}

Scalar det_cofactor(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 0) return Scalar(1);
  if (n == 1) return a[0][0];
  Scalar total;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(row);
    }
    Scalar term = a[0][j] * det_cofactor(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<Scalar> invariant_factors_by_minors(const Dense& a) {
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  std::vector<Scalar> out;
  Scalar prev(1);
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Scalar g;
    subsets(r, k, [&](const std::vector<std::size_t>& rows) {
      subsets(c, k, [&](const std::vector<std::size_t>& cols) {
        Dense m(k, std::vector<Scalar>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[rows[i]][cols[j]];
        }
        g = cychom::gcd(g, det_cofactor(m));
      });
    });
    if (g.is_zero()) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::size_t rank_by_gauss(const Dense& in, std::int64_t p) {
  Dense a = in;
  auto norm = [p](const Scalar& x) {
    if (p == 0) return x;
    return cychom::floor_mod(x, Scalar(static_cast<long long>(p)));
  };
  for (auto& row : a) {
    for (auto& x : row) x = norm(x);
  }
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < c && rank < r; ++j) {
    std::size_t piv = rank;
    while (piv < r && a[piv][j].is_zero()) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || a[i][j].is_zero()) continue;
      // a_i <- a_rank[j] * a_i - a_i[j] * a_rank, stays integral
      Scalar f = a[i][j];
      Scalar g = a[rank][j];
      for (std::size_t k = 0; k < c; ++k) a[i][k] = norm(g * a[i][k] - f * a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
