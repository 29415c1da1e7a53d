#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cychom/complexes.hpp"
#include "cychom/cyclic_module.hpp"
#include "cychom/mixed.hpp"
#include "cychom/report.hpp"

namespace cychom {

/// BC(M): entry C_{q-p}(M) at (p, q) for p >= 0 and 0 <= q - p, restricted to
/// p + q <= N. Vertical maps b, horizontal maps B, anticommuting.
Bicomplex bc_bicomplex(const MixedComplex& x);
Bicomplex bc_bicomplex(const CyclicModule& m);
/// BN(M) at depth P: columns p = 0, -1, ..., -P with C_{q-p}(M) at (p, q),
/// q >= p, restricted to p + q <= N - 2P so that every map is defined.
Bicomplex bn_bicomplex(const MixedComplex& x, int depth);
Bicomplex bn_bicomplex(const CyclicModule& m, int depth);

/// Tot(BC) in degrees 0..N.
Totalization cyclic_total(const MixedComplex& x);
/// Column-truncated product totalization of BN at depth P.
Totalization negative_cyclic_total(const MixedComplex& x, int depth);

enum class HomologyKind { HH, HC, HN };
std::string kind_name(HomologyKind k);

struct HomologyTable {
  HomologyKind kind = HomologyKind::HH;
  std::string ring;
  int lo = 0;
  int hi = 0;
  int truncation = 0;
  int depth = 0;  // HN: the depth P the groups were read at
  std::vector<HomologyGroup> groups;
  std::vector<bool> stabilized;  // HN only

  const HomologyGroup& at(int n) const { return groups.at(static_cast<std::size_t>(n - lo)); }
};

std::string table_to_json(const HomologyTable& t);
std::string table_to_csv(const HomologyTable& t);
std::string table_to_text(const HomologyTable& t);

/// Degrees n with n + 1 < N are reliable at truncation N.
HomologyTable hh(const CyclicModule& m, int lo, int hi);
HomologyTable hc(const CyclicModule& m, int lo, int hi);

struct DepthSchedule {
  int start = -1;  // default: (hi - lo) + 2
  int cap = -1;    // default: 2 (hi - lo) + 8
};
/// Truncation needed to read HN in degrees <= hi at depth P.
int hn_required_truncation(int hi, int depth);
/// HN read off TotΠ BN at increasing depths P, P + 2, ... A degree is marked
/// stabilized once two consecutive depths agree on it; the search stops when
/// every degree is stabilized, at the cap, or when M's truncation runs out.
HomologyTable hn(const CyclicModule& m, int lo, int hi, DepthSchedule schedule = {});
/// HN at one fixed depth (no stabilization search).
std::vector<HomologyGroup> hn_at_depth(const MixedComplex& x, int lo, int hi, int depth);

/// S: Tot_n(BC) -> Tot_{n-2}(BC), dropping column 0 and moving (p, q) to
/// (p - 1, q - 1).
SparseMatrix periodicity_chain_map(const Totalization& tot, int n);

struct InducedMap {
  HomologyGroup source;
  HomologyGroup target;
  SparseMatrix matrix;  // target coordinates x source generators
};
/// S_*: HC_n -> HC_{n-2} on the presentation bases.
InducedMap periodicity_map(const CyclicModule& m, int n);

/// Checks the short exact sequence 0 -> C -> Tot BC -> Tot BC[2] -> 0
/// levelwise and exactness of HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} at every
/// spot in degrees lo..hi.
VerificationReport sbi_check(const CyclicModule& m, int lo, int hi);

}  // namespace cychom
