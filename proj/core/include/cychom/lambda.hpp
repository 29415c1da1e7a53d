#pragma once

// Connes' cyclic category. A morphism [n] -> [m] is stored in normal form
// f . rho^r, where rho is the rotation v -> v+1 of the n+1 vertices of [n]
// and f is weakly monotone. Composition goes through the description of
// [n] as an oriented cycle with n+1 vertices and edges e_i: i -> i+1: a
// morphism sends every edge to a path in the target cycle so that each
// target edge is passed through exactly once.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cychom {

/// Path data of a cycle morphism: image of vertex 0 and the length of the
/// path assigned to each source edge (the lengths sum to m + 1).
struct CyclePaths {
  int start = 0;
  std::vector<int> lengths;
  friend bool operator==(const CyclePaths&, const CyclePaths&) = default;
};

class LambdaMorphism {
 public:
  LambdaMorphism() = default;
  /// Throws RangeError unless f is weakly increasing into [0, m] and has
  /// n + 1 entries.
  LambdaMorphism(int n, int m, int rotation, std::vector<int> monotone);

  static LambdaMorphism identity(int n);
  /// rho^r on [n].
  static LambdaMorphism rotation_power(int n, int r);
  static LambdaMorphism from_paths(int n, int m, const CyclePaths& paths);

  int source() const noexcept { return n_; }
  int target() const noexcept { return m_; }
  int rotation() const noexcept { return r_; }
  const std::vector<int>& monotone() const noexcept { return f_; }
  bool is_monotone() const noexcept { return r_ == 0; }

  CyclePaths paths() const;
  /// Image of vertex v (the morphism is not determined by this alone).
  int vertex(int v) const;
  std::string to_string() const;

  friend bool operator==(const LambdaMorphism&, const LambdaMorphism&) = default;
  friend std::strong_ordering operator<=>(const LambdaMorphism& a, const LambdaMorphism& b);

 private:
  int n_ = 0;
  int m_ = 0;
  int r_ = 0;
  std::vector<int> f_{0};
};

/// g . f for f: [n] -> [m], g: [m] -> [l]. Throws DimensionError when the
/// objects do not match.
LambdaMorphism compose(const LambdaMorphism& g, const LambdaMorphism& f);

/// All morphisms [n] -> [m], monotone parts in lexicographic order, then by
/// rotation.
std::vector<LambdaMorphism> hom_set(int n, int m);
/// (n + 1) * binomial(n + m + 1, n + 1).
std::size_t hom_set_size(int n, int m);
/// All weakly increasing maps [n] -> [m] in lexicographic order.
std::vector<std::vector<int>> monotone_maps(int n, int m);

/// Coface delta_i: [n-1] -> [n] missing i, 0 <= i <= n.
LambdaMorphism coface(int n, int i);
/// Codegeneracy sigma_i: [n+1] -> [n] hitting i twice, 0 <= i <= n.
LambdaMorphism codegeneracy(int n, int i);
/// The automorphism tau_n of [n] whose action on a cyclic module is the
/// cyclic operator c (tau_n = rho^{-1}; tau_n^{n+1} = id).
LambdaMorphism cyclic_rotation(int n);

enum class GeneratorKind { face, degeneracy, cyclic };

/// A generating morphism together with the operator it induces.
struct Generator {
  GeneratorKind kind;
  int level;  // n of d_i(n), s_i(n) or c(n): the level the operator acts on
  int index;  // i (0 for the cyclic operator)
  LambdaMorphism morphism;
};

/// Faces d_i(n), degeneracies s_i(n) (n < max_level) and c(n) for levels
/// 0..max_level.
std::vector<Generator> generators(int max_level);

/// A word in the generators equal to the given morphism:
/// phi = delta_{i_1} ... delta_{i_s} sigma_{j_1} ... sigma_{j_t} tau^k,
/// returned innermost first (the first element is applied first).
std::vector<Generator> normal_form_word(const LambdaMorphism& phi);

/// Explicit morphism of cyclic graphs: every source edge goes to a list of
/// target edges forming a path.
struct CyclicGraphMorphism {
  int n = 0;
  int m = 0;
  std::vector<int> vertex_map;
  std::vector<std::vector<int>> edge_paths;
  friend bool operator==(const CyclicGraphMorphism&, const CyclicGraphMorphism&) = default;
  friend auto operator<=>(const CyclicGraphMorphism&, const CyclicGraphMorphism&) = default;
};

/// Exhaustive search over all assignments of paths to edges. Throws
/// RangeError when n or m exceeds 3.
std::vector<CyclicGraphMorphism> gph_enumerate(int n, int m);
/// Path substitution g . f.
CyclicGraphMorphism compose_graph(const CyclicGraphMorphism& g, const CyclicGraphMorphism& f);
CyclicGraphMorphism to_graph(const LambdaMorphism& phi);

}  // namespace cychom
