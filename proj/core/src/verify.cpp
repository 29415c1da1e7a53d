#include "cychom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "cychom/cyclic_homology.hpp"
#include "cychom/cyclic_module.hpp"
#include "cychom/errors.hpp"
#include "cychom/lambda.hpp"
#include "cychom/linalg.hpp"
#include "cychom/mixed.hpp"
#include "cychom/parallel.hpp"

namespace cychom {

namespace {

std::string str(int n) { return std::to_string(n); }

void require_size(int m, int truncation, const char* what) {
  if (m < 0 || truncation < 2) throw RangeError(std::string(what) + ": need m >= 0 and N >= 2");
}

// operators of k[Lambda(-, m)], level by level
struct Operators {
  CyclicModule module;
  std::vector<OperatorBundle> at;

  Operators(int m, int truncation, const RingSpec& ring) : module(representable_module(ring, m, truncation)) {
    at.resize(static_cast<std::size_t>(truncation + 1));
    parallel_for(at.size(), [&](std::size_t n) { at[n] = derived_operators(module, static_cast<int>(n)); });
  }
  const OperatorBundle& operator[](int n) const { return at.at(static_cast<std::size_t>(n)); }
  int top() const { return module.truncation(); }
};

void place(std::vector<SparseMatrix::Triplet>& trips, const SparseMatrix& m, std::size_t row0, std::size_t col0) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) trips.push_back({row0 + e.row, col0 + c, e.value});
  }
}

std::vector<Scalar> column_of(const SparseMatrix& m, std::size_t j) {
  std::vector<Scalar> v(m.rows());
  for (const auto& e : m.column(j)) v[e.row] = e.value;
  return v;
}

// every column of b lies in the span (lattice span over Z) of a
bool span_contains(const SparseMatrix& a, const SparseMatrix& b) {
  if (b.cols() == 0) return true;
  ColumnEchelon e(a);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (!e.contains(column_of(b, j))) return false;
  }
  return true;
}

bool same_span(const SparseMatrix& a, const SparseMatrix& b) { return span_contains(a, b) && span_contains(b, a); }

SparseMatrix kernel_of(const SparseMatrix& a) { return ColumnEchelon(a).kernel_basis(); }

// a surjects onto ring^rows (over Z: onto the lattice)
bool surjective(const SparseMatrix& a) {
  const auto f = invariant_factors(a);
  if (f.size() != a.rows()) return false;
  for (const auto& x : f) {
    if (!a.ring().is_unit(x)) return false;
  }
  return true;
}

Bicomplex l_bicomplex(const Operators& ops, const RingSpec& ring, bool odd_only) {
  const int top = ops.top();
  Bicomplex l(ring, CommutationMode::anticommuting);
  auto kept = [&](int p) { return !odd_only || p % 2 == 1; };
  for (int p = 0; p <= top; ++p) {
    if (!kept(p)) continue;
    for (int q = 0; p + q <= top; ++q) l.set_rank(p, q, ops.module.rank(q));
  }
  for (int p = 0; p <= top; ++p) {
    if (!kept(p)) continue;
    for (int q = 0; p + q <= top; ++q) {
      if (q >= 1) l.set_v(p, q, p % 2 == 0 ? ops[q].b : -ops[q].b_prime);
      if (p >= 1 && kept(p - 1)) {
        const SparseMatrix id = SparseMatrix::identity(ring, ops.module.rank(q));
        l.set_h(p, q, p % 2 == 1 ? id - ops[q].t : ops[q].norm);
      }
    }
  }
  return l;
}

Totalization total(const Bicomplex& b, int top) { return totalize(b, TotalMode::direct_sum, TruncationWindow{top, 0}); }

ChainComplex ground_complex(const RingSpec& ring) { return ChainComplex(ring, 0, {1}, {SparseMatrix::zero(ring, 0, 1)}); }

HomologyPresentation presentation(const ChainComplex& c, int n) {
  return HomologyPresentation(c.ring(), c.rank(n), c.d(n), c.d(n + 1));
}

// sum of coefficients on the (0, 0) block of Tot_0
SparseMatrix augmentation(const Totalization& tot, const RingSpec& ring) {
  std::vector<SparseMatrix::Triplet> trips;
  const TotalBlock* blk = tot.find(0, 0);
  if (blk != nullptr) {
    for (std::size_t k = 0; k < blk->size; ++k) trips.push_back({0, blk->offset + k, Scalar(1)});
  }
  return SparseMatrix::from_triplets(ring, 1, tot.complex.rank(0), std::move(trips));
}

// H_0 = k via the augmentation and H_i = 0 for 1 <= i <= hi
void check_resolves(VerificationReport& r, const std::string& name, const Totalization& tot, const RingSpec& ring,
                    int hi) {
  const ChainComplex& c = tot.complex;
  const SparseMatrix aug = augmentation(tot, ring);
  if (!(aug * c.d(1)).is_zero()) r.fail(name + ": augmentation is not a chain map");
  const HomologyPresentation h0 = presentation(c, 0);
  const HomologyPresentation k0 = presentation(ground_complex(ring), 0);
  if (!(h0.group() == HomologyGroup::over(ring, 1))) {
    r.fail(name + ": H_0 = " + h0.group().to_string());
  } else {
    const SparseMatrix induced = induced_map(h0, k0, aug);
    if (!ring.is_unit(induced.at(0, 0))) r.fail(name + ": augmentation is not an isomorphism on H_0");
  }
  const std::vector<HomologyGroup> hs = homology_range(c, 1, hi);
  for (int n = 1; n <= hi; ++n) {
    const HomologyGroup& g = hs[static_cast<std::size_t>(n - 1)];
    if (!g.is_zero()) r.fail(name + ": H_" + str(n) + " = " + g.to_string());
  }
  r.note(name + ": H_0 = " + h0.group().to_string() + ", H_1..H_" + str(hi) + " = 0");
}

struct YonedaDual {
  std::vector<Scalar> b;  // Hom of b out of level j, j = 0..N
  std::vector<Scalar> B;  // Hom of B out of level j, j = 0..N-1
  Totalization tot;       // Tot of the bicomplex with k in every entry of K
  ChainComplex dual;      // D_{-n} = Hom(Tot_n, k)
  std::vector<Scalar> delta;  // augmentation . delta in D_{-2}
};

// A natural map k[Lambda(a, -)] -> k[Lambda(a', -)] induces on Hom(-, k)
// multiplication by the coefficient sum of the image of id_[a].
Scalar coefficient_sum_at_identity(const CyclicModule& rep, const SparseMatrix& op, int a) {
  const std::vector<LambdaMorphism> hs = hom_set(a, a);
  const auto it = std::find(hs.begin(), hs.end(), LambdaMorphism::identity(a));
  const std::size_t id = static_cast<std::size_t>(it - hs.begin());
  Scalar s(0);
  for (const auto& e : op.column(id)) s = rep.ring().add(s, e.value);
  return s;
}

YonedaDual yoneda_dual(int truncation, const RingSpec& ring) {
  YonedaDual y;
  y.b.assign(static_cast<std::size_t>(truncation + 1), Scalar(0));
  y.B.assign(static_cast<std::size_t>(truncation), Scalar(0));
  parallel_for(static_cast<std::size_t>(truncation + 1), [&](std::size_t j) {
    const int a = static_cast<int>(j);
    const int level = std::min(a + 1, truncation);
    const CyclicModule rep = representable_module(ring, a, level);
    if (a >= 1) y.b[j] = coefficient_sum_at_identity(rep, hochschild_b(rep, a), a);
    if (a < truncation) y.B[j] = coefficient_sum_at_identity(rep, connes_B(rep, a), a);
  });
  Bicomplex k(ring, CommutationMode::anticommuting);
  for (int p = 0; 2 * p <= truncation; ++p) {
    for (int q = p; p + q <= truncation; ++q) k.set_rank(p, q, 1);
  }
  for (int p = 0; 2 * p <= truncation; ++p) {
    for (int q = p; p + q <= truncation; ++q) {
      const std::size_t j = static_cast<std::size_t>(q - p);
      if (j >= 1) k.set_v(p, q, SparseMatrix::from_triplets(ring, 1, 1, {{0, 0, y.b[j]}}));
      if (p >= 1) k.set_h(p, q, SparseMatrix::from_triplets(ring, 1, 1, {{0, 0, y.B[j]}}));
    }
  }
  y.tot = total(k, truncation);
  y.dual = hom_to_ground(y.tot.complex);
  // delta sends (1, 1) to (0, 0), where the augmentation is 1
  y.delta.assign(y.tot.complex.rank(2), Scalar(0));
  if (const TotalBlock* blk = y.tot.find(1, 1)) y.delta[blk->offset] = Scalar(1);
  return y;
}

std::string scalars(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s;
}

}  // namespace

Bicomplex build_K(int m, int truncation, const RingSpec& ring) {
  require_size(m, truncation, "build_K");
  return bc_bicomplex(representable_module(ring, m, truncation));
}

Bicomplex build_L(int m, int truncation, const RingSpec& ring) {
  require_size(m, truncation, "build_L");
  return l_bicomplex(Operators(m, truncation, ring), ring, false);
}

Bicomplex build_M(int m, int truncation, const RingSpec& ring) {
  require_size(m, truncation, "build_M");
  return l_bicomplex(Operators(m, truncation, ring), ring, true);
}

VerificationReport check_bicomplexes(int m, int truncation, const RingSpec& ring) {
  require_size(m, truncation, "check_bicomplexes");
  VerificationReport r;
  r.name = "bicomplexes";
  r.parameters = {{"m", str(m)}, {"N", str(truncation)}, {"ring", ring.name()}};
  const Operators ops(m, truncation, ring);
  const Bicomplex k = bc_bicomplex(ops.module);
  const Bicomplex l = l_bicomplex(ops, ring, false);
  const Bicomplex mm = l_bicomplex(ops, ring, true);

  for (int q = 0; q <= truncation; ++q) {
    if (k.rank(0, q) != hom_set_size(q, m)) r.fail("K: rank at (0, " + str(q) + ") is not |Lambda(q, m)|");
  }
  for (const auto& v : check_bicomplex(k)) r.fail("K: " + v);
  for (auto [p, q] : k.support()) {
    if (p < 1 || !k.contains(p - 1, q - 1)) continue;
    if (q - p >= 1 && !(k.v(p, q) == k.v(p - 1, q - 1))) r.fail("delta does not commute with b at " + str(p) + "," + str(q));
    if (p >= 2 && !(k.h(p, q) == k.h(p - 1, q - 1))) r.fail("delta does not commute with B at " + str(p) + "," + str(q));
  }
  const Totalization tk = total(k, truncation);
  ChainMap delta;
  delta.degree = -2;
  for (int n = 0; n <= truncation; ++n) delta.components.emplace(n, periodicity_chain_map(tk, n));
  for (int n : check_chain_map(tk.complex, tk.complex, delta)) r.fail("delta is not a chain map on Tot K in degree " + str(n));
  r.note("K column 0 ranks match |Lambda(q, " + str(m) + ")|; delta commutes with b and B");

  for (const auto& v : check_bicomplex(l)) r.fail("L: " + v);
  for (auto [p, q] : l.support()) {
    if (l.rank(p, q) != l.rank(0, q)) r.fail("L: row " + str(q) + " rank varies");
  }
  for (int q = 0; q <= truncation; ++q) {
    const SparseMatrix one_minus_t = SparseMatrix::identity(ring, ops.module.rank(q)) - ops[q].t;
    if (!(one_minus_t * ops[q].norm).is_zero() || !(ops[q].norm * one_minus_t).is_zero()) {
      r.fail("L: (id - t) N or N (id - t) nonzero at level " + str(q));
    }
  }
  for (const auto& v : check_bicomplex(mm)) r.fail("M: " + v);
  for (int n = 0; n < truncation; ++n) {
    SparseMatrix lhs = ops[n + 1].b_prime * ops[n].s_minus1;
    if (n >= 1) lhs = lhs + ops[n - 1].s_minus1 * ops[n].b_prime;
    if (!lhs.is_identity()) r.fail("s_{-1} b' + b' s_{-1} != id at level " + str(n));
  }
  r.note("L and M satisfy the bicomplex identities; (id - t) N = N (id - t) = 0; s_{-1} contracts b'");
  return r;
}

VerificationReport check_phi_psi(int m, int truncation, const RingSpec& ring, bool flip_psi) {
  require_size(m, truncation, "check_phi_psi");
  VerificationReport r;
  r.name = "phi_psi";
  r.parameters = {{"m", str(m)}, {"N", str(truncation)}, {"ring", ring.name()}};
  if (flip_psi) r.parameters.push_back({"psi", "flipped"});
  const Operators ops(m, truncation, ring);
  const Totalization tk = total(bc_bicomplex(ops.module), truncation);
  const Totalization tl = total(l_bicomplex(ops, ring, false), truncation);
  const Totalization tm = total(l_bicomplex(ops, ring, true), truncation);

  std::map<int, SparseMatrix> phi;
  std::map<int, SparseMatrix> psi;
  for (int n = 0; n <= truncation; ++n) {
    std::vector<SparseMatrix::Triplet> a;
    for (const auto& blk : tk.layout.at(n)) {
      const int j = blk.q - blk.p;
      const TotalBlock* even = tl.find(2 * blk.p, j);
      place(a, SparseMatrix::identity(ring, blk.size), even->offset, blk.offset);
      if (blk.p >= 1) {
        const TotalBlock* odd = tl.find(2 * blk.p - 1, j + 1);
        place(a, ops[j].s_minus1 * ops[j].norm, odd->offset, blk.offset);
      }
    }
    phi.emplace(n, SparseMatrix::from_triplets(ring, tl.complex.rank(n), tk.complex.rank(n), std::move(a)));

    std::vector<SparseMatrix::Triplet> c;
    for (const auto& blk : tl.layout.at(n)) {
      if (blk.p % 2 == 1) {
        place(c, SparseMatrix::identity(ring, blk.size), tm.find(blk.p, blk.q)->offset, blk.offset);
      } else if (blk.p >= 2) {
        const SparseMatrix sn = ops[blk.q].s_minus1 * ops[blk.q].norm;
        place(c, flip_psi ? sn : -sn, tm.find(blk.p - 1, blk.q + 1)->offset, blk.offset);
      }
    }
    psi.emplace(n, SparseMatrix::from_triplets(ring, tm.complex.rank(n), tl.complex.rank(n), std::move(c)));
  }

  for (int n = 1; n <= truncation; ++n) {
    if (!(tl.complex.d(n) * phi.at(n) == phi.at(n - 1) * tk.complex.d(n))) r.fail("phi is not a chain map in degree " + str(n));
    if (!(tm.complex.d(n) * psi.at(n) == psi.at(n - 1) * tl.complex.d(n))) r.fail("psi is not a chain map in degree " + str(n));
  }
  for (int n = 0; n <= truncation; ++n) {
    const SparseMatrix& f = phi.at(n);
    const SparseMatrix& g = psi.at(n);
    const std::size_t rk = tk.complex.rank(n), rl = tl.complex.rank(n), rm = tm.complex.rank(n);
    const std::size_t before = r.violations.size();
    const std::string at = "degree " + str(n) + ": ";
    if (rl != rk + rm) r.fail(at + "ranks " + std::to_string(rk) + " + " + std::to_string(rm) + " != " + std::to_string(rl));
    if (!(g * f).is_zero()) r.fail(at + "psi phi != 0");
    if (rank(f) != rk) r.fail(at + "phi is not injective");
    if (!surjective(g)) r.fail(at + "psi is not surjective");
    if (!span_contains(f, kernel_of(g))) r.fail(at + "ker psi is not contained in im phi");
    const bool ok = r.violations.size() == before;
    if (ok) r.note("degree " + str(n) + ": 0 -> " + std::to_string(rk) + " -> " + std::to_string(rl) + " -> " + std::to_string(rm) + " -> 0 exact");
  }
  const SparseMatrix aug_k = augmentation(tk, ring);
  const SparseMatrix aug_l = augmentation(tl, ring);
  if (!(aug_k * tk.complex.d(1)).is_zero() || !(aug_l * tl.complex.d(1)).is_zero()) r.fail("augmentation is not a chain map");
  if (!(aug_l * phi.at(0) == aug_k)) r.fail("augmentations do not commute with phi");
  return r;
}

VerificationReport check_row_exactness(int n, int m, const RingSpec& ring) {
  if (n < 0 || m < 0) throw RangeError("check_row_exactness: negative index");
  VerificationReport r;
  r.name = "row_exactness";
  r.parameters = {{"n", str(n)}, {"m", str(m)}, {"ring", ring.name()}};
  const std::size_t size = static_cast<std::size_t>(n + 1);
  const Scalar sign = n % 2 == 0 ? Scalar(1) : ring.neg(Scalar(1));

  // k[C_{n+1}], coordinates x_i of c^i; x -> x t with t = (-1)^n c
  std::vector<SparseMatrix::Triplet> tt;
  for (std::size_t i = 0; i < size; ++i) tt.push_back({(i + 1) % size, i, sign});
  const SparseMatrix t = SparseMatrix::from_triplets(ring, size, size, std::move(tt));
  const SparseMatrix id = SparseMatrix::identity(ring, size);
  const SparseMatrix a = id - t;
  SparseMatrix norm = SparseMatrix::zero(ring, size, size);
  SparseMatrix tp = id;
  for (std::size_t i = 0; i < size; ++i) {
    norm = norm + tp;
    tp = tp * t;
  }
  if (!(a * norm).is_zero() || !(norm * a).is_zero()) r.fail("(id - t) N or N (id - t) is nonzero");
  const SparseMatrix ker_a = kernel_of(a);
  const SparseMatrix ker_n = kernel_of(norm);
  if (!same_span(ker_a, norm)) r.fail("ker(id - t) != im N");
  if (!same_span(ker_n, a)) r.fail("ker N != im(id - t)");

  // the element N = sum_i t^i has coefficients (-1)^{ni}
  std::vector<Scalar> n_elem(size);
  for (std::size_t i = 0; i < size; ++i) n_elem[i] = (n % 2 == 1 && i % 2 == 1) ? ring.neg(Scalar(1)) : Scalar(1);
  for (std::size_t j = 0; j < ker_a.cols(); ++j) {
    const std::vector<Scalar> x = column_of(ker_a, j);
    std::vector<Scalar> x0n(size);
    for (std::size_t i = 0; i < size; ++i) x0n[i] = ring.mul(x[0], n_elem[i]);
    if (x != x0n) r.fail("x = x_0 N fails on a kernel vector of id - t");
  }
  for (std::size_t j = 0; j < ker_n.cols(); ++j) {
    const std::vector<Scalar> x = column_of(ker_n, j);
    std::vector<Scalar> y(size);
    y[0] = x[0];
    for (std::size_t i = 1; i < size; ++i) y[i] = ring.add(x[i], ring.mul(sign, y[i - 1]));
    if (a.apply(y) != x) r.fail("the preimage y with y_0 = x_0, y_i = x_i + (-1)^n y_{i-1} is wrong");
  }
  r.note("witnesses checked on " + std::to_string(ker_a.cols()) + " + " + std::to_string(ker_n.cols()) +
         " kernel basis vectors");

  // x -> sum_i (-1)^{ni} x_{n-i}
  std::vector<SparseMatrix::Triplet> et;
  for (std::size_t i = 0; i < size; ++i) et.push_back({0, size - 1 - i, n_elem[i]});
  const SparseMatrix eps = SparseMatrix::from_triplets(ring, 1, size, std::move(et));
  if (!surjective(eps)) r.fail("x -> sum (-1)^{ni} x_{n-i} is not surjective");
  if (!same_span(kernel_of(eps), a)) r.fail("im(id - t) is not the kernel of x -> sum (-1)^{ni} x_{n-i}");

  // the same row on k[Lambda(n, m)]
  const CyclicModule rep = representable_module(ring, m, n);
  const SparseMatrix lt = t_operator(rep, n);
  const SparseMatrix lid = SparseMatrix::identity(ring, rep.rank(n));
  const SparseMatrix la = lid - lt;
  const SparseMatrix ln = norm_operator(rep, n);
  if (!same_span(kernel_of(la), ln)) r.fail("on k[Lambda(n, m)]: ker(id - t) != im N");
  if (!same_span(kernel_of(ln), la)) r.fail("on k[Lambda(n, m)]: ker N != im(id - t)");
  const HomologyGroup h0 = quotient_group(la, rep.rank(n));
  const std::size_t delta_count = monotone_maps(n, m).size();
  if (!(h0 == HomologyGroup::over(ring, delta_count))) {
    r.fail("row H_0 = " + h0.to_string() + ", expected free of rank |Delta(n, m)| = " + std::to_string(delta_count));
  }
  r.note("row H_0 on k[Lambda(" + str(n) + ", " + str(m) + ")] = " + h0.to_string());
  return r;
}

VerificationReport check_resolution(int m, int truncation, const RingSpec& ring) {
  require_size(m, truncation, "check_resolution");
  VerificationReport r;
  r.name = "resolution";
  r.parameters = {{"m", str(m)}, {"N", str(truncation)}, {"ring", ring.name()}};
  const Operators ops(m, truncation, ring);
  const int hi = truncation - 2;
  check_resolves(r, "Tot K", total(bc_bicomplex(ops.module), truncation), ring, hi);
  check_resolves(r, "Tot L", total(l_bicomplex(ops, ring, false), truncation), ring, hi);

  const Totalization tm = total(l_bicomplex(ops, ring, true), truncation);
  const std::vector<HomologyGroup> hm = homology_range(tm.complex, 0, hi);
  for (int n = 0; n <= hi; ++n) {
    if (!hm[static_cast<std::size_t>(n)].is_zero()) r.fail("Tot M: H_" + str(n) + " = " + hm[static_cast<std::size_t>(n)].to_string());
  }
  r.note("Tot M: H_0..H_" + str(hi) + " = 0");

  // row H_0's of L: coker(id - t) with the map induced by -b
  try {
    std::vector<QuotientMap> q;
    for (int n = 0; n <= truncation; ++n) {
      q.push_back(quotient_by_span(SparseMatrix::identity(ring, ops.module.rank(n)) - ops[n].t));
    }
    std::vector<std::size_t> ranks;
    std::vector<SparseMatrix> diffs;
    for (int n = 0; n <= truncation; ++n) {
      const QuotientMap& here = q[static_cast<std::size_t>(n)];
      ranks.push_back(here.projection.rows());
      if (here.projection.rows() != monotone_maps(n, m).size()) r.fail("row " + str(n) + ": H_0 rank is not |Delta(n, m)|");
      if (n == 0) {
        diffs.push_back(SparseMatrix::zero(ring, 0, here.projection.rows()));
      } else {
        diffs.push_back(q[static_cast<std::size_t>(n - 1)].projection * (-ops[n].b) * here.lift);
      }
    }
    const ChainComplex rows(ring, 0, std::move(ranks), std::move(diffs));
    for (int n : check_complex(rows)) r.fail("row H_0 complex: d^2 != 0 in degree " + str(n));
    const std::vector<HomologyGroup> hr = homology_range(rows, 0, hi);
    if (!(hr[0] == HomologyGroup::over(ring, 1))) r.fail("row H_0 complex: H_0 = " + hr[0].to_string());
    for (int n = 1; n <= hi; ++n) {
      if (!hr[static_cast<std::size_t>(n)].is_zero()) r.fail("row H_0 complex: H_" + str(n) + " = " + hr[static_cast<std::size_t>(n)].to_string());
    }
    r.note("row H_0 complex k[Delta(*, " + str(m) + ")]: H_0 = k, H_1..H_" + str(hi) + " = 0");
  } catch (const RingError& e) {
    r.fail(std::string("row H_0 of L is not free: ") + e.what());
  }
  return r;
}

VerificationReport check_delta_generator(int truncation, const RingSpec& ring) {
  if (truncation < 4 || truncation > 6) throw RangeError("check_delta_generator: N must be in 4..6");
  VerificationReport r;
  r.name = "delta_generator";
  r.parameters = {{"m", "0"}, {"N", str(truncation)}, {"ring", ring.name()}};
  const YonedaDual y = yoneda_dual(truncation, ring);
  r.note("Hom of b by level: " + scalars(y.b));
  r.note("Hom of B by level: " + scalars(y.B));
  const CyclicModule k = constant_module(ring, truncation);
  for (int j = 1; j <= truncation; ++j) {
    if (!(hochschild_b(k, j).at(0, 0) == y.b[static_cast<std::size_t>(j)])) r.fail("Yoneda b differs from b of k at level " + str(j));
  }
  for (int j = 0; j < truncation; ++j) {
    if (!(connes_B(k, j).at(0, 0) == y.B[static_cast<std::size_t>(j)])) r.fail("Yoneda B differs from B of k at level " + str(j));
  }

  const ChainComplex& d = y.dual;
  const HomologyGroup h1 = homology(d, -1);
  if (!h1.is_zero()) r.fail("H^1 = " + h1.to_string());
  const HomologyPresentation h2(ring, d.rank(-2), d.d(-2), d.d(-1));
  if (!(h2.group() == HomologyGroup::over(ring, 1))) {
    r.fail("H^2 = " + h2.group().to_string());
    return r;
  }
  if (!(d.d(-2).apply(y.delta) == std::vector<Scalar>(d.rank(-3), Scalar(0)))) {
    r.fail("augmentation . delta is not a cocycle");
    return r;
  }
  const std::vector<Scalar> cls = h2.class_of(y.delta);
  if (!ring.is_unit(cls[0])) r.fail("class of augmentation . delta is " + cls[0].to_string() + ", not a generator");
  r.note("H^1 = 0, H^2 = " + h2.group().to_string() + ", class of augmentation . delta = " + cls[0].to_string());

  if (ring.is_integers()) {
    for (std::int64_t p : {2, 5}) {
      const RingSpec fp = RingSpec::prime_field(p);
      const YonedaDual yp = yoneda_dual(truncation, fp);
      const ChainComplex reduced = d.reduce_to(fp);
      bool same = reduced.lo() == yp.dual.lo() && reduced.hi() == yp.dual.hi();
      for (int n = d.lo(); same && n <= d.hi(); ++n) same = reduced.d(n) == yp.dual.d(n);
      if (!same) r.fail("Z computation reduced mod " + std::to_string(p) + " differs from the F_" + std::to_string(p) + " one");
      const HomologyPresentation hp(fp, yp.dual.rank(-2), yp.dual.d(-2), yp.dual.d(-1));
      if (!(hp.group() == HomologyGroup::over(fp, 1)) || hp.class_of(yp.delta)[0].is_zero()) {
        r.fail("over F_" + std::to_string(p) + " the delta class does not generate H^2");
      } else {
        r.note("mod " + std::to_string(p) + ": matrices agree, H^2 = " + hp.group().to_string() + ", delta class nonzero");
      }
    }
  }
  return r;
}

VerificationReport check_naturality(int truncation, const RingSpec& ring) {
  require_size(0, truncation, "check_naturality");
  VerificationReport r;
  r.name = "naturality";
  r.parameters = {{"N", str(truncation)}, {"ring", ring.name()}, {"objects", "0..2"}};
  std::vector<Operators> ops;
  for (int m = 0; m <= 2; ++m) ops.emplace_back(m, truncation, ring);
  std::size_t count = 0;
  for (const Generator& g : generators(2)) {
    const LambdaMorphism& phi = g.morphism;
    const int a = phi.source();
    const int b = phi.target();
    const Operators& src = ops[static_cast<std::size_t>(a)];
    const Operators& dst = ops[static_cast<std::size_t>(b)];
    std::vector<SparseMatrix> f;
    for (int n = 0; n <= truncation; ++n) {
      const std::vector<LambdaMorphism> from = hom_set(n, a);
      const std::vector<LambdaMorphism> to = hom_set(n, b);
      std::map<LambdaMorphism, std::size_t> index;
      for (std::size_t k = 0; k < to.size(); ++k) index.emplace(to[k], k);
      std::vector<SparseMatrix::Triplet> trips;
      for (std::size_t k = 0; k < from.size(); ++k) trips.push_back({index.at(compose(phi, from[k])), k, Scalar(1)});
      f.push_back(SparseMatrix::from_triplets(ring, to.size(), from.size(), std::move(trips)));
    }
    const std::string who = phi.to_string();
    auto expect = [&](bool ok, const std::string& what, int n) {
      if (!ok) r.fail(who + ": " + what + " at level " + str(n));
    };
    for (int n = 0; n <= truncation; ++n) {
      const SparseMatrix& fn = f[static_cast<std::size_t>(n)];
      for (int i = 0; n >= 1 && i <= n; ++i) {
        expect(f[n - 1] * src.module.face(n, i) == dst.module.face(n, i) * fn, "face " + str(i), n);
      }
      for (int i = 0; n < truncation && i <= n; ++i) {
        expect(f[n + 1] * src.module.degeneracy(n, i) == dst.module.degeneracy(n, i) * fn, "degeneracy " + str(i), n);
      }
      expect(fn * src.module.cyclic(n) == dst.module.cyclic(n) * fn, "c", n);
      if (n >= 1) {
        expect(f[n - 1] * src[n].b == dst[n].b * fn, "b", n);
        expect(f[n - 1] * src[n].b_prime == dst[n].b_prime * fn, "b'", n);
      }
      expect(fn * src[n].t == dst[n].t * fn, "t", n);
      expect(fn * src[n].norm == dst[n].norm * fn, "N", n);
      if (n < truncation) {
        expect(f[n + 1] * src[n].s_minus1 == dst[n].s_minus1 * fn, "s_{-1}", n);
        expect(f[n + 1] * src[n].B == dst[n].B * fn, "B", n);
      }
    }
    // augmentation: every basis morphism goes to a basis morphism
    for (std::size_t c = 0; c < f[0].cols(); ++c) {
      if (f[0].column(c).size() != 1 || !f[0].column(c)[0].value.is_one()) r.fail(who + ": augmentation not preserved");
    }
    ++count;
  }
  r.note(std::to_string(count) + " generators checked");
  return r;
}

std::vector<VerificationReport> verify_suite(int m, int truncation, const RingSpec& ring) {
  require_size(m, truncation, "verify_suite");
  std::vector<std::function<VerificationReport()>> jobs;
  jobs.push_back([=] { return check_bicomplexes(m, truncation, ring); });
  jobs.push_back([=] { return check_phi_psi(m, truncation, ring); });
  jobs.push_back([=] { return check_resolution(m, truncation, ring); });
  for (int n = 0; n < truncation; ++n) jobs.push_back([=] { return check_row_exactness(n, m, ring); });
  jobs.push_back([=] { return check_delta_generator(4, ring); });
  jobs.push_back([=] { return check_naturality(std::min(truncation, 6), ring); });
  std::vector<VerificationReport> out(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { out[i] = jobs[i](); });
  return out;
}

}  // namespace cychom
