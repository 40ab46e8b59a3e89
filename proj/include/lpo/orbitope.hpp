#pragma once

#include <optional>
#include <vector>

#include "lpo/seq.hpp"

namespace lpo {

struct BoundsReport {
  long long psd_lower = 0;                 // totient-sum lower bound on dim
  std::optional<long long> ingleton_base;  // only at ell = p q^beta
  std::optional<long long> ingleton_improved;
};

/// Orbitope dimension of a sequence, by two independent routes: the
/// divisor set T from exact orbit PSD sums, and the exact rank of the
/// centered circulant (cyclic) or the stacked orbit (affine).
struct DimReport {
  long long ell = 0;
  GroupKind group = GroupKind::cyclic;
  std::vector<long long> T;   // proper divisors d with S_d(u) > 0
  long long dim_formula = 0;  // sum of phi(ell/d) over T
  long long dim_rank = 0;
  bool agrees = false;
  BoundsReport bounds;
};

DimReport dim_orbitope(const SignSeq& u, GroupKind group);

/// Divisor-complement decomposition of the two orbitope dimensions of a
/// pair; disjointness of U1 and U2 is guaranteed for Legendre pairs.
struct Main0Report {
  long long ell = 0;
  bool is_lp = false;
  std::vector<long long> U1, U2;  // proper divisors with vanishing orbit
  bool disjoint = false;
  long long dim_u = 0, dim_v = 0;
};

Main0Report check_main0(const SignSeq& u, const SignSeq& v);
Main0Report check_main0(const LegendrePairRecord& pair);

struct FeasibleDimReport {
  long long ell = 0;
  long long pair_count = 0;
  std::optional<long long> dim;  // empty when there are no feasible pairs
};

/// Affine dimension of the stacked (u', v') vectors in R^{2 ell} over all
/// supplied ordered pairs; 2 ell - 2 whenever the set is nonempty.
FeasibleDimReport feasible_set_dim(long long ell,
                                   const std::vector<LegendrePairRecord>& pairs);

struct CompressionEntry {
  long long d = 0;  // compression target length, d != 1
  Int norm_u, norm_v;
  bool in_tprime = false;  // norms agree
};

struct CompressionProfile {
  long long ell = 0;
  std::vector<CompressionEntry> entries;
  long long dim_u = 0, dim_v = 0;
  long long tprime_bound = 0;              // sum of phi(d) over T'
  std::optional<long long> phi_bound;      // phi(ell), for ell = p^a q^b
  std::optional<long long> kris_bound;     // totient sums + phi(ell), same shape
  bool bounds_hold = false;
  bool goal_positive = false;  // S_{ell/d} > 0 wherever the norm+totient hypothesis holds
};

CompressionProfile check_compression_profile(const LegendrePairRecord& pair);

struct ConjectureProbe {
  bool holds = false;  // all four dims equal ell - 1, formula agreeing with rank
  DimReport u_cyclic, u_affine, v_cyclic, v_affine;
};

ConjectureProbe conjecture_probe(const LegendrePairRecord& pair);

}  // namespace lpo
