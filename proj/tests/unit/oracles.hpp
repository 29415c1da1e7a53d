#pragma once

// Independent reference computations used to check the library.

#include <cstdint>
#include <random>
#include <vector>

#include "cychom/scalar.hpp"
#include "cychom/sparse_matrix.hpp"

namespace oracle {

using cychom::Scalar;
using Dense = std::vector<std::vector<Scalar>>;

Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound, double density = 1.0);

/// Invariant factors d_k = g_k / g_{k-1}, g_k = gcd of all k x k minors.
std::vector<Scalar> invariant_factors_by_minors(const Dense& a);

/// Rank by plain Gaussian elimination over Q (or F_p when p > 0).
std::size_t rank_by_gauss(const Dense& a, std::int64_t p = 0);

/// Determinant by cofactor expansion.
Scalar det_cofactor(const Dense& a);

}  // namespace oracle
