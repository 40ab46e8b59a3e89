#include "lpo/search.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "lpo/cyclotomic.hpp"
#include "lpo/numtheory.hpp"

using namespace lpo;

namespace {

std::vector<std::pair<std::string, std::string>> as_strings(
    const std::vector<LegendrePairRecord>& pairs) {
  std::vector<std::pair<std::string, std::string>> s;
  for (const auto& r : pairs) s.push_back({r.u.str(), r.v.str()});
  return s;
}

}  // namespace

TEST_CASE("enumerate_candidates counts and order") {
  CHECK(candidate_list(3).size() == 3);
  CHECK(candidate_list(15).size() == 6435);
  const auto c5 = candidate_list(5);
  CHECK(c5.size() == 10);
  CHECK(c5.front().str() == "---++");
  for (const auto& s : c5) CHECK(s.sum() == -1);
  // lexicographic support order: strictly increasing supports
  for (size_t i = 1; i < c5.size(); ++i) CHECK(c5[i - 1].str() != c5[i].str());

  // canonical filter keeps one representative per shift orbit: necklaces
  CHECK(candidate_list(3, true).size() == 1);
  CHECK(candidate_list(5, true).size() == 2);
  for (const auto& s : candidate_list(9, true))
    CHECK(canonical_form(s, GroupKind::cyclic) == s);
}

TEST_CASE("search at ell = 3: nine ordered pairs, one class") {
  SearchConfig cfg;
  cfg.ell = 3;
  for (auto mode : {SearchMode::exhaustive, SearchMode::bucketed}) {
    cfg.mode = mode;
    const auto res = search_lps(cfg);
    CHECK(res.status == SearchStatus::complete);
    CHECK(res.pairs.size() == 9);
    for (const auto& r : res.pairs) CHECK(validate_lp(r.u, r.v).ok());
  }
  cfg.dedup = DedupMode::pair;
  const auto classes = search_lps(cfg);
  CHECK(classes.pairs.size() == 1);
  CHECK(classes.pairs[0].u.str() == "--+");
  CHECK(classes.pairs[0].v.str() == "--+");
  CHECK(classes.pairs[0].canonical);
}

TEST_CASE("pair counts stay at their recorded values") {
  // regression fixtures from the exhaustive runs
  const std::vector<std::pair<long long, std::pair<size_t, size_t>>> fixtures{
      {3, {9, 1}},    {5, {50, 1}},    {7, {196, 2}},
      {9, {972, 1}},  {11, {2904, 3}}, {13, {7098, 4}},
  };
  for (const auto& [ell, want] : fixtures) {
    SearchConfig cfg;
    cfg.ell = ell;
    cfg.jobs = 2;
    CHECK(search_lps(cfg).pairs.size() == want.first);
    cfg.dedup = DedupMode::pair;
    CHECK(search_lps(cfg).pairs.size() == want.second);
  }
}

TEST_CASE("exhaustive and bucketed modes agree at small lengths") {
  for (long long ell : {3LL, 5LL, 7LL, 9LL, 11LL}) {
    SearchConfig a, b;
    a.ell = b.ell = ell;
    a.mode = SearchMode::exhaustive;
    b.mode = SearchMode::bucketed;
    const auto ra = search_lps(a), rb = search_lps(b);
    CHECK(ra.pairs.size() == rb.pairs.size());
    CHECK(as_strings(ra.pairs) == as_strings(rb.pairs));
    for (const auto& r : rb.pairs) CHECK(validate_lp(r.u, r.v).ok());
  }
}

TEST_CASE("parallel runs are byte-identical") {
  for (int jobs : {1, 2, 3}) {
    SearchConfig cfg;
    cfg.ell = 9;
    cfg.jobs = jobs;
    static std::vector<std::pair<std::string, std::string>> reference;
    const auto res = search_lps(cfg);
    if (jobs == 1)
      reference = as_strings(res.pairs);
    else
      CHECK(as_strings(res.pairs) == reference);
  }
}

TEST_CASE("dedup classes are closed under re-canonicalization") {
  SearchConfig cfg;
  cfg.ell = 7;
  cfg.dedup = DedupMode::pair;
  const auto res = search_lps(cfg);
  CHECK(!res.pairs.empty());
  for (const auto& r : res.pairs) {
    const auto cp = canonical_pair(r.u, r.v);
    CHECK(cp.first == r.u);
    CHECK(cp.second == r.v);
  }
}

TEST_CASE("max_results caps the sorted output") {
  SearchConfig cfg;
  cfg.ell = 5;
  cfg.max_results = 3;
  const auto res = search_lps(cfg);
  CHECK(res.pairs.size() == 3);
  CHECK(res.status == SearchStatus::complete);
}

TEST_CASE("budget exhaustion is reported distinctly") {
  SearchConfig cfg;
  cfg.ell = 13;
  cfg.budget_seconds = 1e-9;
  const auto res = search_lps(cfg);
  CHECK(res.status == SearchStatus::budget_exhausted);
  CHECK(res.partitions_done < res.partitions_total);
}

TEST_CASE("cursor file makes runs resumable") {
  const std::string cursor = "cursor_test_ell9.txt";
  std::remove(cursor.c_str());

  SearchConfig full;
  full.ell = 9;
  const auto want = as_strings(search_lps(full).pairs);

  // first run: record every partition in the cursor
  SearchConfig first = full;
  first.cursor_file = cursor;
  const auto run1 = search_lps(first);
  CHECK(as_strings(run1.pairs) == want);
  CHECK(run1.partitions_done == run1.partitions_total);

  // resumed run: everything already done, nothing new to report
  const auto run2 = search_lps(first);
  CHECK(run2.pairs.empty());
  CHECK(run2.partitions_done == 0);
  std::remove(cursor.c_str());
}

TEST_CASE("legendre_construct") {
  const auto p3 = legendre_construct(3);
  REQUIRE(p3.ok());
  CHECK(p3.record->u.str() == "-+-");
  CHECK(p3.record->u == p3.record->v);

  const auto p7 = legendre_construct(7);
  REQUIRE(p7.ok());
  CHECK(p7.record->u.str() == "-++-+--");

  CHECK_FALSE(legendre_construct(5).ok());   // 1 mod 4
  CHECK_FALSE(legendre_construct(13).ok());  // 1 mod 4
  CHECK_FALSE(legendre_construct(9).ok());   // not prime
  CHECK_FALSE(legendre_construct(15).ok());

  // deterministic output
  CHECK(legendre_construct(7).record->u == p7.record->u);
}

TEST_CASE("constructed pairs have full orbitope dimension") {
  for (long long p : {3LL, 7LL, 11LL, 19LL}) {
    const auto val = legendre_construct(p);
    REQUIRE(val.ok());
    CHECK(validate_lp(val.record->u, val.record->v).ok());
  }
}

TEST_CASE("find_vanishing_witness gates and results") {
  const auto w9 = find_vanishing_witness(9);
  CHECK(w9.status == WitnessStatus::absent_certain);  // 5 is not a multiple of 3

  const auto w15 = find_vanishing_witness(15);
  CHECK(w15.status == WitnessStatus::absent_certain);
  CHECK_FALSE(w15.witness.has_value());

  const auto w21 = find_vanishing_witness(21);
  CHECK(w21.status == WitnessStatus::absent_certain);

  const auto w45 = find_vanishing_witness(45);
  REQUIRE(w45.status == WitnessStatus::found);
  REQUIRE(w45.witness.has_value());
  CHECK(w45.witness->ell() == 45);
  CHECK(w45.witness->sum() == -1);
  CHECK(dft_coeff_is_zero(w45.witness->values(), 1));
  // deterministic
  CHECK(find_vanishing_witness(45).witness->str() == w45.witness->str());
}

TEST_CASE("witness search across composite lengths") {
  // 33 = 3*11: feasible gate, but no disjoint coset union exists at pq
  CHECK(find_vanishing_witness(33).status == WitnessStatus::absent_certain);
  // 35 = 5*7: 18 is not a nonnegative combination of 5 and 7
  CHECK(find_vanishing_witness(35).status == WitnessStatus::absent_certain);
  // prime-squared times prime: witnesses exist and verify
  for (long long ell : {63LL, 75LL, 99LL}) {
    const auto w = find_vanishing_witness(ell);
    REQUIRE(w.status == WitnessStatus::found);
    CHECK(w.witness->ell() == ell);
    CHECK(w.witness->sum() == -1);
    CHECK(dft_coeff_is_zero(w.witness->values(), 1));
  }
}

TEST_CASE("ell = 45 witness vanishes exactly on the primitive orbit") {
  const auto w = find_vanishing_witness(45);
  REQUIRE(w.witness.has_value());
  for (const auto& o : vanishing_orbit_profile(w.witness->values()))
    CHECK(o.vanishes == (o.d == 1));
}

TEST_CASE("scan_for_vanishing finds nothing at 9 and 15") {
  const auto s9 = scan_for_vanishing(9);
  CHECK(s9.candidates == 126);
  CHECK_FALSE(s9.counterexample.has_value());

  const auto s15 = scan_for_vanishing(15, 2);
  CHECK(s15.candidates == 6435);
  CHECK_FALSE(s15.counterexample.has_value());
}

TEST_CASE("scan_for_vanishing detects a planted witness length") {
  // at ell = 45 the coset-union witness exists; a partial scan with a tiny
  // budget must either find one or stop on budget, never report complete
  // over the full space in that time
  const auto r = scan_for_vanishing(45, 2, 0.05);
  CHECK((r.status == SearchStatus::budget_exhausted || r.counterexample.has_value()));
}
