#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lpo/seq.hpp"

namespace lpo {

enum class SearchMode { exhaustive, bucketed, construct };
enum class DedupMode { none, cyclic, affine, pair };
enum class SearchStatus { complete, budget_exhausted };

struct SearchConfig {
  long long ell = 3;
  SearchMode mode = SearchMode::bucketed;
  DedupMode dedup = DedupMode::none;
  long long max_results = 0;   // 0 = unlimited
  double budget_seconds = 0;   // 0 = unlimited
  int jobs = 1;
  unsigned long long seed = 0;  // reserved for randomized orderings
  std::string cursor_file;      // optional resume cursor (one partition id per line)
};

struct SearchResult {
  std::vector<LegendrePairRecord> pairs;
  SearchStatus status = SearchStatus::complete;
  long long candidates = 0;        // candidate sequences enumerated
  long long partitions_total = 0;  // work partitions for this ell
  long long partitions_done = 0;
};

/// All sum -1 sequences of odd length ell, lexicographic in the -1 support;
/// canonical_only keeps only cyclic-canonical representatives.
void enumerate_candidates(long long ell, const std::function<void(const SignSeq&)>& fn,
                          bool canonical_only = false);
std::vector<SignSeq> candidate_list(long long ell, bool canonical_only = false);

/// Ordered Legendre pairs of length config.ell (or canonical representatives
/// per the dedup mode), sorted by canonical pair. Deterministic for any
/// worker count.
SearchResult search_lps(const SearchConfig& config);

/// Pair canonicalization with a configurable group: multipliers toggles the
/// Z_ell^* decimations, allow_swap the coordinate swap.
std::pair<SignSeq, SignSeq> canonical_pair_under(const SignSeq& u, const SignSeq& v,
                                                 bool multipliers, bool allow_swap);

/// Quadratic-residue construction at a prime p = 3 (mod 4): u = v with
/// +1 exactly on the nonzero squares mod p. Rejects other p with a reason.
LpValidation legendre_construct(long long p);

enum class WitnessStatus {
  found,              // verified sequence with a vanishing DFT coefficient
  absent_certain,     // no such sequence can exist
  absent_restricted,  // coset-union space exhausted; no conclusion beyond it
};

struct WitnessResult {
  WitnessStatus status = WitnessStatus::absent_restricted;
  std::optional<SignSeq> witness;
  std::string note;
};

/// Searches sum -1 sequences whose -1 support is a disjoint union of cosets
/// of the prime-order subgroups of Z_ell; any such union vanishes on the
/// primitive orbit, and the result is verified by the exact test.
WitnessResult find_vanishing_witness(long long ell);

struct VanishScanResult {
  long long candidates = 0;
  std::optional<SignSeq> counterexample;  // a sequence with some mu_k = 0
  SearchStatus status = SearchStatus::complete;
};

/// Exhaustive exact check that no sum -1 sequence of length ell has a
/// vanishing DFT coefficient. Streams all C(ell, (ell+1)/2) supports.
VanishScanResult scan_for_vanishing(long long ell, int jobs = 1,
                                    double budget_seconds = 0);

}  // namespace lpo
