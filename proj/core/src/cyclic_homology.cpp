#include "cychom/cyclic_homology.hpp"

#include <sstream>

#include <json.hpp>

#include "cychom/errors.hpp"
#include "cychom/linalg.hpp"

namespace cychom {

namespace {

void require_reliable(int hi, int truncation, const char* what) {
  if (hi + 1 >= truncation) {
    throw RangeError(std::string(what) + ": degree " + std::to_string(hi) + " needs truncation above " +
                     std::to_string(hi + 1) + ", have " + std::to_string(truncation));
  }
}

// identity on matching blocks: (p, q) in degree n goes to (p + dp, q + dq)
SparseMatrix block_shift(const Totalization& tot, int n, int dp, int dq) {
  const int m = n + dp + dq;
  const std::size_t cols = tot.complex.rank(n);
  const std::size_t rows = tot.complex.rank(m);
  std::vector<SparseMatrix::Triplet> trips;
  auto it = tot.layout.find(n);
  if (it != tot.layout.end()) {
    for (const auto& blk : it->second) {
      const TotalBlock* target = tot.find(blk.p + dp, blk.q + dq);
      if (target == nullptr) continue;
      for (std::size_t k = 0; k < blk.size; ++k) trips.push_back({target->offset + k, blk.offset + k, Scalar(1)});
    }
  }
  return SparseMatrix::from_triplets(tot.complex.ring(), rows, cols, std::move(trips));
}

// inclusion of column 0: C_n -> Tot_n
SparseMatrix column_zero_inclusion(const Totalization& tot, const MixedComplex& x, int n) {
  std::vector<SparseMatrix::Triplet> trips;
  const TotalBlock* blk = tot.find(0, n);
  if (blk != nullptr) {
    for (std::size_t k = 0; k < blk->size; ++k) trips.push_back({blk->offset + k, k, Scalar(1)});
  }
  return SparseMatrix::from_triplets(x.ring(), tot.complex.rank(n), x.rank(n), std::move(trips));
}

HomologyPresentation presentation(const ChainComplex& c, int n) {
  return HomologyPresentation(c.ring(), c.rank(n), c.d(n), c.d(n + 1));
}

std::vector<Scalar> column_vector(const SparseMatrix& m, std::size_t j) {
  std::vector<Scalar> v(m.rows());
  for (const auto& e : m.column(j)) v[e.row] = e.value;
  return v;
}

// Exactness of X --f--> G --g--> Y on presented groups: im f + R_G equals
// the preimage of R_Y under g, compared as lattices (subspaces over fields).
bool exact_on_homology(const RingSpec& ring, const SparseMatrix& f, const HomologyPresentation& g_pres,
                       const SparseMatrix& g, const HomologyPresentation& y_pres) {
  const std::size_t kg = g_pres.orders().size();
  auto relations = [&](const HomologyPresentation& p) {
    std::vector<SparseMatrix::Triplet> t;
    std::size_t c = 0;
    for (std::size_t i = 0; i < p.orders().size(); ++i) {
      if (!p.orders()[i].is_zero()) t.push_back({i, c++, p.orders()[i]});
    }
    return SparseMatrix::from_triplets(ring, p.orders().size(), c, std::move(t));
  };
  const SparseMatrix rg = relations(g_pres);
  const SparseMatrix ry = relations(y_pres);
  if ((g * f).cols() > 0) {
    // g f must vanish modulo the relations of Y
    ColumnEchelon rel_y(ry);
    const SparseMatrix gf = g * f;
    for (std::size_t j = 0; j < gf.cols(); ++j) {
      if (!rel_y.contains(column_vector(gf, j))) return false;
    }
  }
  const SparseMatrix image = hstack({f, rg});
  const SparseMatrix kernel_full = ColumnEchelon(hstack({g, -ry})).kernel_basis();
  std::vector<std::size_t> top(kg);
  for (std::size_t i = 0; i < kg; ++i) top[i] = i;
  const SparseMatrix kernel = hstack({kernel_full.select_rows(top), rg});
  ColumnEchelon image_span(image);
  ColumnEchelon kernel_span(kernel);
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    if (!image_span.contains(column_vector(kernel, j))) return false;
  }
  for (std::size_t j = 0; j < image.cols(); ++j) {
    if (!kernel_span.contains(column_vector(image, j))) return false;
  }
  return true;
}

}  // namespace

Bicomplex bc_bicomplex(const MixedComplex& x) {
  if (x.lo() != 0) throw RangeError("bc_bicomplex: mixed complex must start in degree 0");
  const int top = x.hi();
  Bicomplex bc(x.ring(), CommutationMode::anticommuting);
  for (int p = 0; 2 * p <= top; ++p) {
    for (int q = p; p + q <= top; ++q) bc.set_rank(p, q, x.rank(q - p));
  }
  for (int p = 0; 2 * p <= top; ++p) {
    for (int q = p; p + q <= top; ++q) {
      if (q - p >= 1) bc.set_v(p, q, x.b(q - p));
      if (p >= 1) bc.set_h(p, q, x.B(q - p));
    }
  }
  return bc;
}

Bicomplex bc_bicomplex(const CyclicModule& m) { return bc_bicomplex(mixed_complex(m)); }

Bicomplex bn_bicomplex(const MixedComplex& x, int depth) {
  if (depth < 0) throw RangeError("bn_bicomplex: negative depth");
  if (x.lo() != 0) throw RangeError("bn_bicomplex: mixed complex must start in degree 0");
  // total degrees above N - 2P would need B out of C_N
  const int top = x.hi() - 2 * depth;
  Bicomplex bn(x.ring(), CommutationMode::anticommuting);
  for (int p = -depth; p <= 0; ++p) {
    for (int q = p; p + q <= top; ++q) bn.set_rank(p, q, x.rank(q - p));
  }
  for (int p = -depth; p <= 0; ++p) {
    for (int q = p; p + q <= top; ++q) {
      if (q - p >= 1) bn.set_v(p, q, x.b(q - p));
      if (p - 1 >= -depth) bn.set_h(p, q, x.B(q - p));
    }
  }
  return bn;
}

Bicomplex bn_bicomplex(const CyclicModule& m, int depth) { return bn_bicomplex(mixed_complex(m), depth); }

Totalization cyclic_total(const MixedComplex& x) {
  return totalize(bc_bicomplex(x), TotalMode::direct_sum, TruncationWindow{x.hi(), 0});
}

Totalization negative_cyclic_total(const MixedComplex& x, int depth) {
  return totalize(bn_bicomplex(x, depth), TotalMode::product, TruncationWindow{INT_MAX, depth});
}

std::string kind_name(HomologyKind k) {
  switch (k) {
    case HomologyKind::HH:
      return "HH";
    case HomologyKind::HC:
      return "HC";
    case HomologyKind::HN:
      return "HN";
  }
  return "?";
}

std::string table_to_json(const HomologyTable& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = t.lo; n <= t.hi; ++n) {
    const auto& g = t.at(n);
    nlohmann::ordered_json row;
    row["degree"] = n;
    if (g.over_field()) {
      row["dimension"] = g.dimension();
    } else {
      row["free_rank"] = g.free_rank();
      nlohmann::ordered_json tor = nlohmann::ordered_json::array();
      for (const auto& d : g.torsion()) tor.push_back(d.to_string());
      row["torsion"] = tor;
    }
    if (t.kind == HomologyKind::HN) row["stabilized"] = static_cast<bool>(t.stabilized.at(static_cast<std::size_t>(n - t.lo)));
    rows.push_back(row);
  }
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = kind_name(t.kind);
  j["ring"] = t.ring;
  j["truncation"] = t.truncation;
  if (t.kind == HomologyKind::HN) j["depth"] = t.depth;
  j["groups"] = rows;
  return j.dump(2);
}

std::string table_to_csv(const HomologyTable& t) {
  std::ostringstream os;
  os << "degree,free_rank,torsion,stabilized\n";
  for (int n = t.lo; n <= t.hi; ++n) {
    const auto& g = t.at(n);
    os << n << "," << g.free_rank() << ",";
    for (std::size_t i = 0; i < g.torsion().size(); ++i) os << (i ? ";" : "") << g.torsion()[i].to_string();
    os << ",";
    if (t.kind == HomologyKind::HN) os << (t.stabilized.at(static_cast<std::size_t>(n - t.lo)) ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

std::string table_to_text(const HomologyTable& t) {
  std::ostringstream os;
  os << kind_name(t.kind) << " over " << t.ring << " (truncation " << t.truncation;
  if (t.kind == HomologyKind::HN) os << ", depth " << t.depth;
  os << ")\n";
  for (int n = t.lo; n <= t.hi; ++n) {
    os << "  " << kind_name(t.kind) << "_" << n << " = " << t.at(n).to_string();
    if (t.kind == HomologyKind::HN && !t.stabilized.at(static_cast<std::size_t>(n - t.lo))) os << "  (not stabilized)";
    os << "\n";
  }
  return os.str();
}

HomologyTable hh(const CyclicModule& m, int lo, int hi) {
  if (lo > hi) throw RangeError("hh: empty degree range");
  require_reliable(hi, m.truncation(), "hh");
  HomologyTable t;
  t.kind = HomologyKind::HH;
  t.ring = m.ring().name();
  t.lo = lo;
  t.hi = hi;
  t.truncation = m.truncation();
  t.groups = homology_range(hochschild_chain_complex(m, false), lo, hi);
  return t;
}

HomologyTable hc(const CyclicModule& m, int lo, int hi) {
  if (lo > hi) throw RangeError("hc: empty degree range");
  require_reliable(hi, m.truncation(), "hc");
  HomologyTable t;
  t.kind = HomologyKind::HC;
  t.ring = m.ring().name();
  t.lo = lo;
  t.hi = hi;
  t.truncation = m.truncation();
  t.groups = homology_range(cyclic_total(mixed_complex(m)).complex, lo, hi);
  return t;
}

int hn_required_truncation(int hi, int depth) { return hi + 2 * depth + 2; }

std::vector<HomologyGroup> hn_at_depth(const MixedComplex& x, int lo, int hi, int depth) {
  if (hn_required_truncation(hi, depth) > x.hi()) {
    throw RangeError("hn: depth " + std::to_string(depth) + " up to degree " + std::to_string(hi) + " needs truncation " +
                     std::to_string(hn_required_truncation(hi, depth)) + ", have " + std::to_string(x.hi()));
  }
  return homology_range(negative_cyclic_total(x, depth).complex, lo, hi);
}

HomologyTable hn(const CyclicModule& m, int lo, int hi, DepthSchedule schedule) {
  if (lo > hi) throw RangeError("hn: empty degree range");
  const int width = hi - lo;
  const int start = schedule.start >= 0 ? schedule.start : width + 2;
  const int cap = schedule.cap >= 0 ? schedule.cap : 2 * width + 8;
  if (start + 2 > cap) throw RangeError("hn: depth cap below the first comparison");
  const MixedComplex x = mixed_complex(m);
  HomologyTable t;
  t.kind = HomologyKind::HN;
  t.ring = m.ring().name();
  t.lo = lo;
  t.hi = hi;
  t.truncation = m.truncation();
  int p = start;
  std::vector<HomologyGroup> cur = hn_at_depth(x, lo, hi, p);
  for (;;) {
    std::vector<HomologyGroup> next = hn_at_depth(x, lo, hi, p + 2);
    t.stabilized.assign(cur.size(), false);
    bool all = true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      t.stabilized[i] = cur[i] == next[i];
      all = all && t.stabilized[i];
    }
    if (all || p + 4 > cap || hn_required_truncation(hi, p + 4) > x.hi()) break;
    p += 2;
    cur = std::move(next);
  }
  t.depth = p;
  t.groups = std::move(cur);
  return t;
}

SparseMatrix periodicity_chain_map(const Totalization& tot, int n) {
  // blocks in column 0 have no target and are dropped
  return block_shift(tot, n, -1, -1);
}

InducedMap periodicity_map(const CyclicModule& m, int n) {
  if (n < 0) throw RangeError("periodicity_map: negative degree");
  require_reliable(n, m.truncation(), "periodicity_map");
  const Totalization tot = cyclic_total(mixed_complex(m));
  const HomologyPresentation src = presentation(tot.complex, n);
  const HomologyPresentation tgt = presentation(tot.complex, n - 2);
  return {src.group(), tgt.group(), induced_map(src, tgt, periodicity_chain_map(tot, n))};
}

VerificationReport sbi_check(const CyclicModule& m, int lo, int hi) {
  require_reliable(hi, m.truncation(), "sbi_check");
  VerificationReport r;
  r.name = "sbi";
  r.parameters = {{"ring", m.ring().name()}, {"degrees", std::to_string(lo) + ".." + std::to_string(hi)},
                  {"truncation", std::to_string(m.truncation())}};
  const RingSpec& ring = m.ring();
  const MixedComplex x = mixed_complex(m);
  const ChainComplex& c = x.complex();
  const Totalization tot = cyclic_total(x);
  const ChainComplex& t = tot.complex;

  // levelwise short exact sequence, over the whole window
  for (int n = 0; n <= m.truncation(); ++n) {
    const std::string at = " in degree " + std::to_string(n);
    const SparseMatrix I = column_zero_inclusion(tot, x, n);
    const SparseMatrix S = periodicity_chain_map(tot, n);
    if (t.rank(n) != c.rank(n) + t.rank(n - 2)) r.fail("rank(Tot_n) != rank(C_n) + rank(Tot_{n-2})" + at);
    if (!(S * I).is_zero()) r.fail("S I != 0" + at);
    if (!is_exact_at(SparseMatrix(ring, c.rank(n), 0), I)) r.fail("C -> Tot BC not injective" + at);
    if (!is_exact_at(I, S)) r.fail("ker S != im I" + at);
    if (!is_exact_at(S, SparseMatrix(ring, 0, t.rank(n - 2)))) r.fail("S not surjective" + at);
    if (n >= 1) {
      if (!(t.d(n) * I == column_zero_inclusion(tot, x, n - 1) * c.d(n))) r.fail("inclusion is not a chain map" + at);
      if (!(t.d(n - 2) * S == periodicity_chain_map(tot, n - 1) * t.d(n))) r.fail("S is not a chain map" + at);
    }
  }
  if (!r.passed()) return r;

  // long exact sequence: HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -I-> HC_{n-1}
  for (int n = lo; n <= hi; ++n) {
    const HomologyPresentation hh_n = presentation(c, n);
    const HomologyPresentation hh_n1 = presentation(c, n - 1);
    const HomologyPresentation hc_n = presentation(t, n);
    const HomologyPresentation hc_n1 = presentation(t, n - 1);
    const HomologyPresentation hc_n2 = presentation(t, n - 2);
    const SparseMatrix i_n = induced_map(hh_n, hc_n, column_zero_inclusion(tot, x, n));
    const SparseMatrix i_n1 = induced_map(hh_n1, hc_n1, column_zero_inclusion(tot, x, n - 1));
    const SparseMatrix s_n = induced_map(hc_n, hc_n2, periodicity_chain_map(tot, n));
    // connecting map: lift through S, apply d, read off column 0
    const SparseMatrix lift = block_shift(tot, n - 2, 1, 1);
    const SparseMatrix proj0 = column_zero_inclusion(tot, x, n - 1).transpose();
    const SparseMatrix boundary = proj0 * t.d(n) * lift;
    const SparseMatrix b_n = induced_map(hc_n2, hh_n1, boundary);
    const std::string at = " at n = " + std::to_string(n);
    if (!exact_on_homology(ring, i_n, hc_n, s_n, hc_n2)) r.fail("not exact at HC_n" + at);
    if (!exact_on_homology(ring, s_n, hc_n2, b_n, hh_n1)) r.fail("not exact at HC_{n-2}" + at);
    if (!exact_on_homology(ring, b_n, hh_n1, i_n1, hc_n1)) r.fail("not exact at HH_{n-1}" + at);
    if (ring.is_field()) {
      const std::size_t ri = rank(i_n), rs = rank(s_n), rb = rank(b_n), ri1 = rank(i_n1);
      if (hc_n.group().dimension() != ri + rs) r.fail("dim HC_n != rank I + rank S" + at);
      if (hc_n2.group().dimension() != rs + rb) r.fail("dim HC_{n-2} != rank S + rank B" + at);
      if (hh_n1.group().dimension() != rb + ri1) r.fail("dim HH_{n-1} != rank B + rank I" + at);
    }
    r.note("n = " + std::to_string(n) + ": HH_n = " + hh_n.group().to_string() + ", HC_n = " + hc_n.group().to_string() +
           ", HC_{n-2} = " + hc_n2.group().to_string());
  }
  return r;
}

}  // namespace cychom
