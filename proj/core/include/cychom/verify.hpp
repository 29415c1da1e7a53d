#pragma once

#include <vector>

#include "cychom/complexes.hpp"
#include "cychom/report.hpp"
#include "cychom/ring.hpp"

namespace cychom {

// Everything below is evaluated at a fixed object [m] of the cyclic
// category, on the representable cyclic module k[Lambda(-, m)] truncated at
// level N.

/// K: C_{q-p} at (p, q) for q >= p >= 0, vertical b, horizontal B
/// (anticommuting), entries with p + q <= N.
Bicomplex build_K(int m, int truncation, const RingSpec& ring);
/// L: C_q at (p, q) for p, q >= 0, p + q <= N. Vertical b in even columns and
/// -b' in odd ones; horizontal id - t out of odd columns, N out of even ones.
Bicomplex build_L(int m, int truncation, const RingSpec& ring);
/// L with the even columns annihilated.
Bicomplex build_M(int m, int truncation, const RingSpec& ring);

/// Shapes and identities of K, L, M: column ranks, anticommutation, delta
/// (identity (p, q) -> (p - 1, q - 1)) commuting with both differentials of K,
/// (id - t) N = N (id - t) = 0, s_{-1} b' + b' s_{-1} = id on every column of M.
VerificationReport check_bicomplexes(int m, int truncation, const RingSpec& ring);

/// phi = (id, s_{-1} N): Tot K -> Tot L and psi = -s_{-1} N + id: Tot L ->
/// Tot M are chain maps, 0 -> Tot K -> Tot L -> Tot M -> 0 is exact in every
/// degree, and the augmentations to k are compatible. flip_psi uses
/// +s_{-1} N instead (a negative control).
VerificationReport check_phi_psi(int m, int truncation, const RingSpec& ring, bool flip_psi = false);

/// ... -> k[C_{n+1}] --(id - t)--> k[C_{n+1}] --N--> k[C_{n+1}] -> ... is
/// exact, with the explicit preimages x = x_0 N on ker(id - t) and
/// y_0 = x_0, y_i = x_i + (-1)^n y_{i-1} on ker N checked by substitution;
/// im(id - t) is the kernel of x -> sum (-1)^{ni} x_{n-i}. The same row on
/// k[Lambda(n, m)] is exact with free H_0 of rank |Delta(n, m)|.
VerificationReport check_row_exactness(int n, int m, const RingSpec& ring);

/// Tot K -> k and Tot L -> k induce isomorphisms on H_0 and H_i = 0 for
/// 1 <= i <= N - 2; Tot M is acyclic there; the complex of row H_0's of L
/// with the map induced by -b is acyclic above degree 0.
VerificationReport check_resolution(int m, int truncation, const RingSpec& ring);

/// Hom(Tot K, k) in cocyclic modules (one copy of k per entry by Yoneda, the
/// maps read off the representables): H^1 = 0, H^2 is k, and the cocycle
/// augmentation . delta generates it. Over Z also compares with the F_2 and
/// F_5 computations entrywise.
VerificationReport check_delta_generator(int truncation, const RingSpec& ring);

/// For every generator phi: [m] -> [m'] with m, m' <= 2, postcomposition with
/// phi commutes with faces, degeneracies, c, b, b', t, N, s_{-1} and B, and
/// preserves the augmentation.
VerificationReport check_naturality(int truncation, const RingSpec& ring);

/// All of the above at (m, N, ring); row exactness for n = 0 .. N - 1.
std::vector<VerificationReport> verify_suite(int m, int truncation, const RingSpec& ring);

}  // namespace cychom
