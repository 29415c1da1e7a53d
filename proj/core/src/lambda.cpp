#include "cychom/lambda.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cychom/errors.hpp"

namespace cychom {

namespace {

int mod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

LambdaMorphism::LambdaMorphism(int n, int m, int rotation, std::vector<int> monotone)
    : n_(n), m_(m), r_(0), f_(std::move(monotone)) {
  if (n < 0 || m < 0) throw RangeError("Lambda objects are [n] with n >= 0");
  if (static_cast<int>(f_.size()) != n + 1) throw RangeError("monotone part needs n + 1 values");
  for (int k = 0; k <= n; ++k) {
    if (f_[k] < 0 || f_[k] > m || (k > 0 && f_[k] < f_[k - 1])) {
      throw RangeError("monotone part is not a weakly increasing map into [" + std::to_string(m) + "]");
    }
  }
  r_ = mod(rotation, n + 1);
}

LambdaMorphism LambdaMorphism::identity(int n) {
  std::vector<int> f(n + 1);
  for (int k = 0; k <= n; ++k) f[k] = k;
  return LambdaMorphism(n, n, 0, std::move(f));
}

LambdaMorphism LambdaMorphism::rotation_power(int n, int r) {
  LambdaMorphism id = identity(n);
  return LambdaMorphism(n, n, r, id.f_);
}

CyclePaths LambdaMorphism::paths() const {
  std::vector<int> delta(n_ + 1);
  for (int k = 0; k < n_; ++k) delta[k] = f_[k + 1] - f_[k];
  delta[n_] = m_ + 1 - f_[n_] + f_[0];
  CyclePaths p;
  p.start = f_[r_];
  p.lengths.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) p.lengths[i] = delta[(i + r_) % (n_ + 1)];
  return p;
}

LambdaMorphism LambdaMorphism::from_paths(int n, int m, const CyclePaths& paths) {
  if (static_cast<int>(paths.lengths.size()) != n + 1) throw RangeError("from_paths: need n + 1 path lengths");
  if (paths.start < 0 || paths.start > m) throw RangeError("from_paths: start vertex out of range");
  int total = 0;
  for (int l : paths.lengths) {
    if (l < 0) throw RangeError("from_paths: negative path length");
    total += l;
  }
  if (total != m + 1) throw RangeError("from_paths: path lengths must sum to m + 1");
  std::vector<int> phi(n + 1);
  phi[0] = paths.start;
  for (int i = 0; i < n; ++i) phi[i + 1] = (phi[i] + paths.lengths[i]) % (m + 1);
  int wrap = -1;
  for (int j = 0; j <= n; ++j) {
    if (paths.lengths[j] > 0 && mod(m - phi[j], m + 1) < paths.lengths[j]) {
      wrap = j;
      break;
    }
  }
  const int r = mod(n - wrap, n + 1);
  std::vector<int> f(n + 1);
  for (int k = 0; k <= n; ++k) f[k] = phi[mod(k - r, n + 1)];
  return LambdaMorphism(n, m, r, std::move(f));
}

int LambdaMorphism::vertex(int v) const { return f_[mod(v + r_, n_ + 1)]; }

std::string LambdaMorphism::to_string() const {
  std::ostringstream os;
  os << "[" << n_ << "]->[" << m_ << "] r=" << r_ << " f=(";
  for (int k = 0; k <= n_; ++k) os << (k ? "," : "") << f_[k];
  os << ")";
  return os.str();
}

std::strong_ordering operator<=>(const LambdaMorphism& a, const LambdaMorphism& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.f_ <=> b.f_; c != 0) return c;
  return a.r_ <=> b.r_;
}

LambdaMorphism compose(const LambdaMorphism& g, const LambdaMorphism& f) {
  if (f.target() != g.source()) {
    throw DimensionError("compose: " + g.to_string() + " after " + f.to_string() + " is not defined");
  }
  const int m = f.target();
  const CyclePaths pf = f.paths();
  const CyclePaths pg = g.paths();
  std::vector<int> phi_f(f.source() + 1);
  phi_f[0] = pf.start;
  for (int i = 0; i < f.source(); ++i) phi_f[i + 1] = (phi_f[i] + pf.lengths[i]) % (m + 1);
  CyclePaths out;
  out.start = g.vertex(pf.start);
  out.lengths.resize(f.source() + 1);
  for (int i = 0; i <= f.source(); ++i) {
    int len = 0;
    for (int t = 0; t < pf.lengths[i]; ++t) len += pg.lengths[(phi_f[i] + t) % (m + 1)];
    out.lengths[i] = len;
  }
  return LambdaMorphism::from_paths(f.source(), g.target(), out);
}

std::vector<std::vector<int>> monotone_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n + 1);
  std::function<void(int, int)> rec = [&](int k, int lo) {
    if (k > n) {
      out.push_back(f);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      f[k] = v;
      rec(k + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<LambdaMorphism> hom_set(int n, int m) {
  if (n < 0 || m < 0) throw RangeError("hom_set: negative object");
  std::vector<LambdaMorphism> out;
  for (auto& f : monotone_maps(n, m)) {
    for (int r = 0; r <= n; ++r) out.emplace_back(n, m, r, f);
  }
  return out;
}

std::size_t hom_set_size(int n, int m) {
  // binomial(n + m + 1, n + 1) computed incrementally
  std::size_t c = 1;
  for (int k = 1; k <= n + 1; ++k) c = c * static_cast<std::size_t>(m + k) / static_cast<std::size_t>(k);
  return static_cast<std::size_t>(n + 1) * c;
}

LambdaMorphism coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw RangeError("coface: need 0 <= i <= n, n >= 1");
  std::vector<int> f(n);
  for (int k = 0; k < n; ++k) f[k] = k < i ? k : k + 1;
  return LambdaMorphism(n - 1, n, 0, std::move(f));
}

LambdaMorphism codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw RangeError("codegeneracy: need 0 <= i <= n");
  std::vector<int> f(n + 2);
  for (int k = 0; k <= n + 1; ++k) f[k] = k <= i ? k : k - 1;
  return LambdaMorphism(n + 1, n, 0, std::move(f));
}

LambdaMorphism cyclic_rotation(int n) { return LambdaMorphism::rotation_power(n, n); }

std::vector<Generator> generators(int max_level) {
  std::vector<Generator> out;
  for (int n = 0; n <= max_level; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) out.push_back({GeneratorKind::face, n, i, coface(n, i)});
    for (int i = 0; n < max_level && i <= n; ++i) out.push_back({GeneratorKind::degeneracy, n, i, codegeneracy(n, i)});
    out.push_back({GeneratorKind::cyclic, n, 0, cyclic_rotation(n)});
  }
  return out;
}

std::vector<Generator> normal_form_word(const LambdaMorphism& phi) {
  const int n = phi.source();
  const int m = phi.target();
  std::vector<Generator> word;
  // rho^r = tau^k with k = n + 1 - r
  const int k = (n + 1 - phi.rotation()) % (n + 1);
  for (int t = 0; t < k; ++t) word.push_back({GeneratorKind::cyclic, n, 0, cyclic_rotation(n)});
  const auto& f = phi.monotone();
  // surjection: sigma_{j_1} ... sigma_{j_t}, innermost j_t (largest)
  std::vector<int> js;
  for (int j = 0; j < n; ++j) {
    if (f[j] == f[j + 1]) js.push_back(j);
  }
  int level = n;
  for (auto it = js.rbegin(); it != js.rend(); ++it) {
    --level;
    word.push_back({GeneratorKind::degeneracy, level, *it, codegeneracy(level, *it)});
  }
  // injection: delta_{i_1} ... delta_{i_s} with i_1 > ... > i_s, innermost i_s
  std::vector<char> hit(m + 1, 0);
  for (int v : f) hit[v] = 1;
  std::vector<int> is;
  for (int i = 0; i <= m; ++i) {
    if (!hit[i]) is.push_back(i);
  }
  for (int i : is) {
    ++level;
    word.push_back({GeneratorKind::face, level, i, coface(level, i)});
  }
  return word;
}

std::vector<CyclicGraphMorphism> gph_enumerate(int n, int m) {
  if (n < 0 || m < 0 || n > 3 || m > 3) throw RangeError("gph_enumerate: n, m must lie in 0..3");
  const int verts = m + 1;
  std::vector<CyclicGraphMorphism> out;
  CyclicGraphMorphism cur;
  cur.n = n;
  cur.m = m;
  cur.vertex_map.assign(n + 1, 0);
  cur.edge_paths.assign(n + 1, {});
  std::vector<int> used(verts, 0);
  // choose each edge's path as (start, length); every length up to the full
  // circumference is a candidate
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      int end = (cur.vertex_map[n] + static_cast<int>(cur.edge_paths[n].size())) % verts;
      if (end != cur.vertex_map[0]) return;
      if (std::all_of(used.begin(), used.end(), [](int u) { return u == 1; })) out.push_back(cur);
      return;
    }
    for (int start = 0; start < verts; ++start) {
      if (i > 0) {
        int prev_end = (cur.vertex_map[i - 1] + static_cast<int>(cur.edge_paths[i - 1].size())) % verts;
        if (start != prev_end) continue;
      }
      for (int len = 0; len <= verts; ++len) {
        std::vector<int> path;
        bool ok = true;
        for (int t = 0; t < len; ++t) {
          int e = (start + t) % verts;
          if (used[e]) ok = false;
          path.push_back(e);
        }
        if (!ok) continue;
        for (int e : path) ++used[e];
        cur.vertex_map[i] = start;
        cur.edge_paths[i] = path;
        rec(i + 1);
        for (int e : path) --used[e];
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

CyclicGraphMorphism compose_graph(const CyclicGraphMorphism& g, const CyclicGraphMorphism& f) {
  if (f.m != g.n) throw DimensionError("compose_graph: objects do not match");
  CyclicGraphMorphism out;
  out.n = f.n;
  out.m = g.m;
  for (int v : f.vertex_map) out.vertex_map.push_back(g.vertex_map[v]);
  for (const auto& path : f.edge_paths) {
    std::vector<int> sub;
    for (int e : path) sub.insert(sub.end(), g.edge_paths[e].begin(), g.edge_paths[e].end());
    out.edge_paths.push_back(std::move(sub));
  }
  return out;
}

CyclicGraphMorphism to_graph(const LambdaMorphism& phi) {
  const CyclePaths p = phi.paths();
  const int verts = phi.target() + 1;
  CyclicGraphMorphism g;
  g.n = phi.source();
  g.m = phi.target();
  int v = p.start;
  for (int i = 0; i <= g.n; ++i) {
    g.vertex_map.push_back(v);
    std::vector<int> path;
    for (int t = 0; t < p.lengths[i]; ++t) path.push_back((v + t) % verts);
    g.edge_paths.push_back(std::move(path));
    v = (v + p.lengths[i]) % verts;
  }
  return g;
}

}  // namespace cychom
