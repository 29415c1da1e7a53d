#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cychom/complexes.hpp"
#include "cychom/lambda.hpp"
#include "cychom/sparse_matrix.hpp"

namespace cychom {

/// A cyclic k-module truncated at level N: free modules M_0..M_N with faces
/// d_i(n): M_n -> M_{n-1}, degeneracies s_i(n): M_n -> M_{n+1} (n < N) and
/// the cyclic operator c(n): M_n -> M_n.
class CyclicModule {
 public:
  CyclicModule() : ring_(RingSpec::integers()) {}
  CyclicModule(RingSpec ring, int truncation, std::vector<std::size_t> ranks);

  const RingSpec& ring() const noexcept { return ring_; }
  int truncation() const noexcept { return n_; }
  std::size_t rank(int n) const;

  const SparseMatrix& face(int n, int i) const;
  const SparseMatrix& degeneracy(int n, int i) const;
  const SparseMatrix& cyclic(int n) const;
  /// Matrix of the operator induced by a generator.
  const SparseMatrix& op(const Generator& g) const;

  void set_face(int n, int i, SparseMatrix m);
  void set_degeneracy(int n, int i, SparseMatrix m);
  void set_cyclic(int n, SparseMatrix m);

  /// Matrix of M(phi): M_m -> M_n for phi: [n] -> [m], via the normal-form
  /// word of phi.
  SparseMatrix action(const LambdaMorphism& phi) const;

  CyclicModule reduce_to(const RingSpec& target) const;
  /// Keeps levels 0..n.
  CyclicModule truncated(int n) const;

 private:
  void check_level(int n) const;

  RingSpec ring_;
  int n_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<SparseMatrix>> faces_;  // faces_[n][i], n >= 1
  std::vector<std::vector<SparseMatrix>> degens_;  // degens_[n][i], n < N
  std::vector<SparseMatrix> cyclic_;
};

/// Levelwise direct sum.
CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b);

/// k[Lambda(-, m)] truncated at level N: level n has basis hom_set(n, m),
/// operators act by precomposition.
CyclicModule representable_module(const RingSpec& ring, int m, int truncation);
/// Every level k, every operator the identity (the cyclic nerve of k).
CyclicModule constant_module(const RingSpec& ring, int truncation);

/// Violations of the presheaf relations: for every composable pair of
/// generators the product of their matrices must equal the matrix of the
/// normal form of the composite; also c^{n+1} = id.
std::vector<std::string> check_functoriality(const CyclicModule& m);

/// The operators built from faces, degeneracies and c at level n.
struct OperatorBundle {
  int level = 0;
  SparseMatrix b;         // M_n -> M_{n-1}
  SparseMatrix b_prime;   // b - (-1)^n d_n
  SparseMatrix t;         // (-1)^n c
  SparseMatrix norm;      // sum_i t^i
  SparseMatrix s_minus1;  // c s_n: M_n -> M_{n+1} (n < N)
  SparseMatrix B;         // (1 - t) s_{-1} N: M_n -> M_{n+1} (n < N)
};
OperatorBundle derived_operators(const CyclicModule& m, int n);
/// Cheaper single-operator accessors.
SparseMatrix hochschild_b(const CyclicModule& m, int n);
SparseMatrix b_prime(const CyclicModule& m, int n);
SparseMatrix t_operator(const CyclicModule& m, int n);
SparseMatrix norm_operator(const CyclicModule& m, int n);
SparseMatrix s_minus1(const CyclicModule& m, int n);
SparseMatrix connes_B(const CyclicModule& m, int n);

/// (C_*(M), b) in degrees 0..N, or its quotient by the degenerate chains.
ChainComplex hochschild_chain_complex(const CyclicModule& m, bool normalized);

/// The normalized chains of the simplicial set underlying Lambda^0
/// (ranks 1, 1, then 0): a model of the circle.
ChainComplex circle_complex(const RingSpec& ring);

std::string cyclic_module_to_json(const CyclicModule& m);
CyclicModule cyclic_module_from_json(const std::string& text);

}  // namespace cychom
