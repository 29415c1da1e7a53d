#include "cychom/cyclic_module.hpp"

#include <map>

#include "cychom/errors.hpp"
#include "json_util.hpp"

namespace cychom {

namespace {

std::string level_name(const char* what, int n, int i) {
  return std::string(what) + "(" + std::to_string(n) + (i >= 0 ? ", " + std::to_string(i) : "") + ")";
}

SparseMatrix sign(const SparseMatrix& m, int n) { return n % 2 == 0 ? m : -m; }

}  // namespace

CyclicModule::CyclicModule(RingSpec ring, int truncation, std::vector<std::size_t> ranks)
    : ring_(ring), n_(truncation), ranks_(std::move(ranks)) {
  if (truncation < 0) throw RangeError("CyclicModule: negative truncation");
  if (static_cast<int>(ranks_.size()) != truncation + 1) throw DimensionError("CyclicModule: need N + 1 ranks");
  faces_.resize(ranks_.size());
  degens_.resize(ranks_.size());
  cyclic_.resize(ranks_.size());
  for (int n = 0; n <= n_; ++n) {
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) faces_[n].emplace_back(ring_, ranks_[n - 1], ranks_[n]);
    }
    if (n < n_) {
      for (int i = 0; i <= n; ++i) degens_[n].emplace_back(ring_, ranks_[n + 1], ranks_[n]);
    }
    cyclic_[n] = SparseMatrix::identity(ring_, ranks_[n]);
  }
}

void CyclicModule::check_level(int n) const {
  if (n < 0 || n > n_) throw RangeError("level " + std::to_string(n) + " outside truncation " + std::to_string(n_));
}

std::size_t CyclicModule::rank(int n) const {
  check_level(n);
  return ranks_[n];
}

const SparseMatrix& CyclicModule::face(int n, int i) const {
  check_level(n);
  if (n < 1 || i < 0 || i > n) throw RangeError("no face " + level_name("d", n, i));
  return faces_[n][i];
}

const SparseMatrix& CyclicModule::degeneracy(int n, int i) const {
  check_level(n);
  if (n >= n_ || i < 0 || i > n) throw RangeError("no degeneracy " + level_name("s", n, i));
  return degens_[n][i];
}

const SparseMatrix& CyclicModule::cyclic(int n) const {
  check_level(n);
  return cyclic_[n];
}

const SparseMatrix& CyclicModule::op(const Generator& g) const {
  switch (g.kind) {
    case GeneratorKind::face:
      return face(g.level, g.index);
    case GeneratorKind::degeneracy:
      return degeneracy(g.level, g.index);
    case GeneratorKind::cyclic:
      return cyclic(g.level);
  }
  throw RangeError("unknown generator");
}

void CyclicModule::set_face(int n, int i, SparseMatrix m) {
  const SparseMatrix& old = face(n, i);
  if (m.rows() != old.rows() || m.cols() != old.cols()) throw DimensionError(level_name("d", n, i) + " has the wrong shape");
  faces_[n][i] = m.ring() == ring_ ? std::move(m) : throw RingError("face over the wrong ring");
}

void CyclicModule::set_degeneracy(int n, int i, SparseMatrix m) {
  const SparseMatrix& old = degeneracy(n, i);
  if (m.rows() != old.rows() || m.cols() != old.cols()) throw DimensionError(level_name("s", n, i) + " has the wrong shape");
  degens_[n][i] = m.ring() == ring_ ? std::move(m) : throw RingError("degeneracy over the wrong ring");
}

void CyclicModule::set_cyclic(int n, SparseMatrix m) {
  const SparseMatrix& old = cyclic(n);
  if (m.rows() != old.rows() || m.cols() != old.cols()) throw DimensionError(level_name("c", n, -1) + " has the wrong shape");
  cyclic_[n] = m.ring() == ring_ ? std::move(m) : throw RingError("cyclic operator over the wrong ring");
}

SparseMatrix CyclicModule::action(const LambdaMorphism& phi) const {
  check_level(phi.source());
  check_level(phi.target());
  SparseMatrix acc = SparseMatrix::identity(ring_, ranks_[phi.source()]);
  for (const auto& g : normal_form_word(phi)) acc = acc * op(g);
  return acc;
}

CyclicModule CyclicModule::reduce_to(const RingSpec& target) const {
  CyclicModule out(target, n_, ranks_);
  for (int n = 0; n <= n_; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) out.faces_[n][i] = faces_[n][i].reduce_to(target);
    for (int i = 0; n < n_ && i <= n; ++i) out.degens_[n][i] = degens_[n][i].reduce_to(target);
    out.cyclic_[n] = cyclic_[n].reduce_to(target);
  }
  return out;
}

CyclicModule CyclicModule::truncated(int n) const {
  if (n > n_) throw RangeError("truncated: level above the current truncation");
  CyclicModule out(ring_, n, std::vector<std::size_t>(ranks_.begin(), ranks_.begin() + n + 1));
  for (int k = 0; k <= n; ++k) {
    if (k >= 1) out.faces_[k] = faces_[k];
    if (k < n) out.degens_[k] = degens_[k];
    out.cyclic_[k] = cyclic_[k];
  }
  return out;
}

CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b) {
  if (!(a.ring() == b.ring()) || a.truncation() != b.truncation()) {
    throw DimensionError("direct_sum: modules differ in ring or truncation");
  }
  const int top = a.truncation();
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(a.rank(n) + b.rank(n));
  CyclicModule out(a.ring(), top, ranks);
  for (int n = 0; n <= top; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) out.set_face(n, i, block_diagonal({a.face(n, i), b.face(n, i)}));
    for (int i = 0; n < top && i <= n; ++i) out.set_degeneracy(n, i, block_diagonal({a.degeneracy(n, i), b.degeneracy(n, i)}));
    out.set_cyclic(n, block_diagonal({a.cyclic(n), b.cyclic(n)}));
  }
  return out;
}

CyclicModule representable_module(const RingSpec& ring, int m, int truncation) {
  if (m < 0 || truncation < 0) throw RangeError("representable_module: negative index");
  std::vector<std::vector<LambdaMorphism>> basis;
  std::vector<std::map<LambdaMorphism, std::size_t>> index;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= truncation; ++n) {
    basis.push_back(hom_set(n, m));
    std::map<LambdaMorphism, std::size_t> idx;
    for (std::size_t k = 0; k < basis.back().size(); ++k) idx.emplace(basis.back()[k], k);
    index.push_back(std::move(idx));
    ranks.push_back(basis.back().size());
  }
  CyclicModule out(ring, truncation, ranks);
  // M(alpha): M_n -> M_{n'} for alpha: [n'] -> [n], g -> g . alpha
  auto induced = [&](const LambdaMorphism& alpha) {
    const int src = alpha.target();
    const int dst = alpha.source();
    std::vector<SparseMatrix::Triplet> trips;
    for (std::size_t k = 0; k < basis[src].size(); ++k) {
      trips.push_back({index[dst].at(compose(basis[src][k], alpha)), k, Scalar(1)});
    }
    return SparseMatrix::from_triplets(ring, ranks[dst], ranks[src], std::move(trips));
  };
  for (int n = 0; n <= truncation; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) out.set_face(n, i, induced(coface(n, i)));
    for (int i = 0; n < truncation && i <= n; ++i) out.set_degeneracy(n, i, induced(codegeneracy(n, i)));
    out.set_cyclic(n, induced(cyclic_rotation(n)));
  }
  return out;
}

CyclicModule constant_module(const RingSpec& ring, int truncation) {
  CyclicModule out(ring, truncation, std::vector<std::size_t>(static_cast<std::size_t>(truncation) + 1, 1));
  const SparseMatrix one = SparseMatrix::identity(ring, 1);
  for (int n = 0; n <= truncation; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) out.set_face(n, i, one);
    for (int i = 0; n < truncation && i <= n; ++i) out.set_degeneracy(n, i, one);
  }
  return out;
}

std::vector<std::string> check_functoriality(const CyclicModule& m) {
  std::vector<std::string> bad;
  const auto gens = generators(m.truncation());
  auto name = [](const Generator& g) {
    switch (g.kind) {
      case GeneratorKind::face:
        return level_name("d", g.level, g.index);
      case GeneratorKind::degeneracy:
        return level_name("s", g.level, g.index);
      case GeneratorKind::cyclic:
        return level_name("c", g.level, -1);
    }
    return std::string("?");
  };
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      if (g.morphism.target() != h.morphism.source()) continue;
      // M(h . g) = M(g) M(h)
      const LambdaMorphism hg = compose(h.morphism, g.morphism);
      if (!(m.op(g) * m.op(h) == m.action(hg))) bad.push_back(name(g) + " " + name(h) + " != normal form of composite");
    }
  }
  for (int n = 0; n <= m.truncation(); ++n) {
    if (!power(m.cyclic(n), static_cast<unsigned>(n + 1)).is_identity()) bad.push_back("c^{n+1} != id at level " + std::to_string(n));
  }
  return bad;
}

SparseMatrix hochschild_b(const CyclicModule& m, int n) {
  if (n == 0) return SparseMatrix(m.ring(), 0, m.rank(0));
  SparseMatrix acc = m.face(n, 0);
  for (int i = 1; i <= n; ++i) acc = i % 2 == 0 ? acc + m.face(n, i) : acc - m.face(n, i);
  return acc;
}

SparseMatrix b_prime(const CyclicModule& m, int n) {
  if (n == 0) return SparseMatrix(m.ring(), 0, m.rank(0));
  SparseMatrix acc = m.face(n, 0);
  for (int i = 1; i < n; ++i) acc = i % 2 == 0 ? acc + m.face(n, i) : acc - m.face(n, i);
  return acc;
}

SparseMatrix t_operator(const CyclicModule& m, int n) { return sign(m.cyclic(n), n); }

SparseMatrix norm_operator(const CyclicModule& m, int n) {
  const SparseMatrix t = t_operator(m, n);
  SparseMatrix term = SparseMatrix::identity(m.ring(), m.rank(n));
  SparseMatrix acc = term;
  for (int i = 1; i <= n; ++i) {
    term = term * t;
    acc = acc + term;
  }
  return acc;
}

SparseMatrix s_minus1(const CyclicModule& m, int n) { return m.cyclic(n + 1) * m.degeneracy(n, n); }

SparseMatrix connes_B(const CyclicModule& m, int n) {
  const SparseMatrix one_minus_t = SparseMatrix::identity(m.ring(), m.rank(n + 1)) - t_operator(m, n + 1);
  return one_minus_t * s_minus1(m, n) * norm_operator(m, n);
}

OperatorBundle derived_operators(const CyclicModule& m, int n) {
  if (n < 0 || n > m.truncation()) throw RangeError("derived_operators: level outside truncation");
  OperatorBundle ob;
  ob.level = n;
  ob.b = hochschild_b(m, n);
  ob.b_prime = b_prime(m, n);
  ob.t = t_operator(m, n);
  ob.norm = norm_operator(m, n);
  if (n < m.truncation()) {
    ob.s_minus1 = s_minus1(m, n);
    const SparseMatrix one_minus_t = SparseMatrix::identity(m.ring(), m.rank(n + 1)) - t_operator(m, n + 1);
    ob.B = one_minus_t * ob.s_minus1 * ob.norm;
  }
  return ob;
}

ChainComplex hochschild_chain_complex(const CyclicModule& m, bool normalized) {
  const int top = m.truncation();
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  if (!normalized) {
    for (int n = 0; n <= top; ++n) {
      ranks.push_back(m.rank(n));
      diffs.push_back(hochschild_b(m, n));
    }
    return ChainComplex(m.ring(), 0, std::move(ranks), std::move(diffs));
  }
  std::vector<QuotientMap> q;
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      q.push_back({SparseMatrix::identity(m.ring(), m.rank(0)), SparseMatrix::identity(m.ring(), m.rank(0))});
    } else {
      std::vector<SparseMatrix> degen;
      for (int i = 0; i < n; ++i) degen.push_back(m.degeneracy(n - 1, i));
      q.push_back(quotient_by_span(hstack(degen)));
    }
    ranks.push_back(q.back().projection.rows());
    if (n == 0) {
      diffs.push_back(SparseMatrix(m.ring(), 0, ranks.back()));
    } else {
      diffs.push_back(q[n - 1].projection * hochschild_b(m, n) * q[n].lift);
    }
  }
  return ChainComplex(m.ring(), 0, std::move(ranks), std::move(diffs));
}

ChainComplex circle_complex(const RingSpec& ring) {
  ChainComplex full = hochschild_chain_complex(representable_module(ring, 0, 4), true);
  int top = full.hi();
  while (top > full.lo() && full.rank(top) == 0) --top;
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> diffs;
  for (int n = full.lo(); n <= top; ++n) {
    ranks.push_back(full.rank(n));
    diffs.push_back(full.d(n));
  }
  return ChainComplex(ring, full.lo(), std::move(ranks), std::move(diffs));
}

std::string cyclic_module_to_json(const CyclicModule& m) {
  using detail::matrix_to_json;
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["ring"] = m.ring().name();
  j["truncation"] = m.truncation();
  nlohmann::ordered_json ranks = nlohmann::ordered_json::array();
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  nlohmann::ordered_json degens = nlohmann::ordered_json::array();
  nlohmann::ordered_json cyc = nlohmann::ordered_json::array();
  for (int n = 0; n <= m.truncation(); ++n) {
    ranks.push_back(m.rank(n));
    nlohmann::ordered_json fl = nlohmann::ordered_json::array();
    for (int i = 0; n >= 1 && i <= n; ++i) fl.push_back(matrix_to_json(m.face(n, i)));
    faces.push_back(fl);
    nlohmann::ordered_json dl = nlohmann::ordered_json::array();
    for (int i = 0; n < m.truncation() && i <= n; ++i) dl.push_back(matrix_to_json(m.degeneracy(n, i)));
    degens.push_back(dl);
    cyc.push_back(matrix_to_json(m.cyclic(n)));
  }
  j["ranks"] = ranks;
  j["faces"] = faces;
  j["degeneracies"] = degens;
  j["cyclic"] = cyc;
  return j.dump();
}

CyclicModule cyclic_module_from_json(const std::string& text) {
  using detail::matrix_from_json;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cyclic module JSON: ") + e.what());
  }
  try {
    RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
    const int top = j.at("truncation").get<int>();
    CyclicModule m(ring, top, j.at("ranks").get<std::vector<std::size_t>>());
    for (int n = 0; n <= top; ++n) {
      for (int i = 0; n >= 1 && i <= n; ++i) m.set_face(n, i, matrix_from_json(ring, j.at("faces").at(n).at(i)));
      for (int i = 0; n < top && i <= n; ++i) m.set_degeneracy(n, i, matrix_from_json(ring, j.at("degeneracies").at(n).at(i)));
      m.set_cyclic(n, matrix_from_json(ring, j.at("cyclic").at(n)));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cyclic module JSON: ") + e.what());
  }
}

}  // namespace cychom
