#include "lpo/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "lpo/cyclotomic.hpp"
#include "lpo/numtheory.hpp"

namespace lpo {

namespace {

using Clock = std::chrono::steady_clock;

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SignSeq seq_from_support(long long ell, const std::vector<int>& support) {
  std::vector<int8_t> e(ell, 1);
  for (int j : support) e[j] = -1;
  return SignSeq(std::move(e));
}

// k-subsets of {lo, ..., n-1} appended to a fixed prefix, lexicographic.
template <typename Fn>
bool combos_from(std::vector<int>& support, long long n, long long k, long long lo,
                 const Fn& fn) {
  if (k == 0) return fn(support);
  for (long long j = lo; j + k <= n; ++j) {
    support.push_back(static_cast<int>(j));
    const bool go_on = combos_from(support, n, k - 1, j + 1, fn);
    support.pop_back();
    if (!go_on) return false;
  }
  return true;
}

// Work partitions keyed by the first two -1 positions.
struct Partition {
  int a = 0, b = 0;
};

std::vector<Partition> make_partitions(long long ell) {
  const long long k = (ell + 1) / 2;
  std::vector<Partition> ps;
  for (long long a = 0; a + k <= ell; ++a)
    for (long long b = a + 1; b + k - 1 <= ell; ++b)
      ps.push_back({static_cast<int>(a), static_cast<int>(b)});
  return ps;
}

// Candidates of one partition in lexicographic support order; fn returning
// false aborts the walk.
template <typename Fn>
void partition_candidates(long long ell, const Partition& p, const Fn& fn) {
  const long long k = (ell + 1) / 2;
  std::vector<int> support{p.a, p.b};
  support.reserve(k);
  combos_from(support, ell, k - 2, p.b + 1, fn);
}

std::set<long long> read_cursor(const std::string& path) {
  std::set<long long> done;
  if (path.empty()) return done;
  std::ifstream in(path);
  long long idx;
  while (in >> idx) done.insert(idx);
  return done;
}

}  // namespace

void enumerate_candidates(long long ell, const std::function<void(const SignSeq&)>& fn,
                          bool canonical_only) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("enumerate_candidates: ell must be odd and >= 3");
  for (const auto& p : make_partitions(ell))
    partition_candidates(ell, p, [&](const std::vector<int>& support) {
      SignSeq s = seq_from_support(ell, support);
      if (canonical_only && canonical_form(s, GroupKind::cyclic) != s) return true;
      fn(s);
      return true;
    });
}

std::vector<SignSeq> candidate_list(long long ell, bool canonical_only) {
  std::vector<SignSeq> out;
  out.reserve(binomial(ell, (ell + 1) / 2));
  enumerate_candidates(ell, [&](const SignSeq& s) { out.push_back(s); }, canonical_only);
  return out;
}

std::pair<SignSeq, SignSeq> canonical_pair_under(const SignSeq& u, const SignSeq& v,
                                                 bool multipliers, bool allow_swap) {
  if (u.ell() != v.ell())
    throw std::invalid_argument("canonical_pair_under: length mismatch");
  const long long ell = u.ell();
  std::vector<long long> ks{1};
  if (multipliers)
    for (long long k = 2; k < ell; ++k)
      if (std::gcd(k, ell) == 1) ks.push_back(k);
  std::pair<SignSeq, SignSeq> best;
  bool first = true;
  for (long long k : ks) {
    const SignSeq du = canonical_form(act({0, k}, u), GroupKind::cyclic);
    const SignSeq dv = canonical_form(act({0, k}, v), GroupKind::cyclic);
    auto consider = [&](std::pair<SignSeq, SignSeq> cand) {
      if (first || cand < best) {
        best = std::move(cand);
        first = false;
      }
    };
    consider({du, dv});
    if (allow_swap) consider({dv, du});
  }
  return best;
}

namespace {

struct PafKeyHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// PSD prefilter: S_d(u) above the pairing budget 2(ell+1) phi(ell/d) for
// any proper divisor rules out every partner. Works on the precomputed
// 64-bit PAF; the sums are tiny at desk scale.
bool can_have_partner(const PafVector& paf, long long ell) {
  for (long long d : divisors(ell)) {
    if (d == ell) continue;
    long long s = 0;
    for (long long j = 0; j < ell; ++j) s += ramanujan_sum(ell / d, j) * paf[j];
    if (s > 2 * (ell + 1) * euler_phi(ell / d)) return false;
  }
  return true;
}

std::vector<LegendrePairRecord> apply_dedup_and_sort(
    std::vector<std::pair<SignSeq, SignSeq>> found, DedupMode dedup) {
  std::vector<std::pair<SignSeq, SignSeq>> kept;
  if (dedup == DedupMode::none) {
    kept = std::move(found);
  } else {
    const bool mult = dedup != DedupMode::cyclic;
    const bool swap = dedup == DedupMode::pair;
    std::set<std::pair<SignSeq, SignSeq>> reps;
    for (const auto& [u, v] : found) reps.insert(canonical_pair_under(u, v, mult, swap));
    kept.assign(reps.begin(), reps.end());
  }
  // decorate with the canonical key once; sorting recomputes nothing
  std::vector<std::pair<std::pair<SignSeq, SignSeq>, LegendrePairRecord>> keyed;
  keyed.reserve(kept.size());
  for (const auto& [u, v] : kept) {
    auto val = validate_lp(u, v);
    if (!val.ok()) throw std::logic_error("search: matched pair failed validation");
    keyed.emplace_back(canonical_pair(u, v), std::move(*val.record));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) {
                     if (x.first != y.first) return x.first < y.first;
                     return std::pair(x.second.u, x.second.v) <
                            std::pair(y.second.u, y.second.v);
                   });
  std::vector<LegendrePairRecord> records;
  records.reserve(keyed.size());
  for (auto& [key, rec] : keyed) records.push_back(std::move(rec));
  return records;
}

}  // namespace

SearchResult search_lps(const SearchConfig& config) {
  const long long ell = config.ell;
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("search_lps: ell must be odd and >= 3");

  SearchResult result;
  if (config.mode == SearchMode::construct) {
    auto val = legendre_construct(ell);
    if (val.ok()) result.pairs.push_back(*val.record);
    return result;
  }

  // the candidate table and PAF index live in memory
  if (binomial(ell, (ell + 1) / 2) > 2'000'000)
    throw std::invalid_argument(
        "search_lps: candidate set too large for the in-memory pair search at ell = " +
        std::to_string(ell));

  const auto t0 = Clock::now();
  const auto expired = [&] {
    return config.budget_seconds > 0 &&
           std::chrono::duration<double>(Clock::now() - t0).count() > config.budget_seconds;
  };

  // Shared read-only candidate table, built before the parallel phase.
  const std::vector<SignSeq> cands = candidate_list(ell);
  result.candidates = static_cast<long long>(cands.size());
  std::vector<PafVector> pafs(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) pafs[i] = paf(cands[i]);

  // Bucket index over PAF tails P(1..ell-1), survivors of the PSD prefilter.
  std::unordered_map<std::vector<long long>, std::vector<int>, PafKeyHash> buckets;
  std::vector<char> survives(cands.size(), 1);
  if (config.mode == SearchMode::bucketed) {
    for (size_t i = 0; i < cands.size(); ++i) {
      survives[i] = can_have_partner(pafs[i], ell);
      if (!survives[i]) continue;
      std::vector<long long> key(pafs[i].begin() + 1, pafs[i].end());
      buckets[std::move(key)].push_back(static_cast<int>(i));
    }
  }

  // Partition index ranges over the candidate list (first two -1 positions).
  const auto partitions = make_partitions(ell);
  result.partitions_total = static_cast<long long>(partitions.size());
  std::vector<size_t> part_begin(partitions.size() + 1, 0);
  {
    size_t idx = 0;
    for (size_t pi = 0; pi < partitions.size(); ++pi) {
      part_begin[pi] = idx;
      long long n = binomial(ell - partitions[pi].b - 1, (ell + 1) / 2 - 2);
      idx += static_cast<size_t>(n);
    }
    part_begin[partitions.size()] = idx;
  }

  const std::set<long long> done_before = read_cursor(config.cursor_file);
  std::ofstream cursor_out;
  if (!config.cursor_file.empty())
    cursor_out.open(config.cursor_file, std::ios::app);

  std::vector<std::vector<std::pair<SignSeq, SignSeq>>> per_part(partitions.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> out_of_time{false};
  std::atomic<long long> parts_done{0};
  std::mutex cursor_mu;

  auto worker = [&] {
    while (true) {
      const size_t pi = next.fetch_add(1);
      if (pi >= partitions.size()) return;
      if (done_before.count(static_cast<long long>(pi))) continue;
      if (expired()) {
        out_of_time = true;
        return;
      }
      auto& out = per_part[pi];
      for (size_t i = part_begin[pi]; i < part_begin[pi + 1]; ++i) {
        if (config.mode == SearchMode::bucketed) {
          if (!survives[i]) continue;
          std::vector<long long> want(ell - 1);
          for (long long j = 1; j < ell; ++j) want[j - 1] = -2 - pafs[i][j];
          if (auto it = buckets.find(want); it != buckets.end())
            for (int vi : it->second) out.emplace_back(cands[i], cands[vi]);
        } else {
          for (size_t vi = 0; vi < cands.size(); ++vi) {
            bool match = true;
            for (long long j = 1; j < ell && match; ++j)
              match = (pafs[i][j] + pafs[vi][j] == -2);
            if (match) out.emplace_back(cands[i], cands[vi]);
          }
        }
      }
      parts_done.fetch_add(1);
      if (cursor_out.is_open()) {
        std::lock_guard<std::mutex> lock(cursor_mu);
        cursor_out << pi << "\n" << std::flush;
      }
    }
  };

  const int jobs = std::max(1, config.jobs);
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  result.partitions_done = parts_done.load();
  result.status =
      out_of_time ? SearchStatus::budget_exhausted : SearchStatus::complete;

  std::vector<std::pair<SignSeq, SignSeq>> found;
  for (auto& part : per_part)
    for (auto& pr : part) found.push_back(std::move(pr));
  result.pairs = apply_dedup_and_sort(std::move(found), config.dedup);
  if (config.max_results > 0 &&
      static_cast<long long>(result.pairs.size()) > config.max_results)
    result.pairs.resize(config.max_results);
  return result;
}

LpValidation legendre_construct(long long p) {
  if (!is_prime(p) || p < 3) return {std::nullopt, "p must be an odd prime"};
  if (p % 4 != 3)
    return {std::nullopt, "p must be 3 mod 4: the residue sequence does not pair with itself"};
  std::vector<int8_t> e(p, -1);
  for (long long k = 1; k <= (p - 1) / 2; ++k) e[(k * k) % p] = 1;
  const SignSeq u{std::move(e)};
  auto val = validate_lp(u, u);
  if (!val.ok()) throw std::logic_error("legendre_construct: constructed pair invalid");
  return val;
}

namespace {

// Cosets of the order-p subgroup of Z_ell, indexed by representative.
std::vector<std::vector<int>> subgroup_cosets(long long ell, long long p) {
  const long long step = ell / p;
  std::vector<std::vector<int>> cosets;
  for (long long rep = 0; rep < step; ++rep) {
    std::vector<int> c;
    for (long long t = 0; t < p; ++t) c.push_back(static_cast<int>(rep + t * step));
    cosets.push_back(std::move(c));
  }
  return cosets;
}

// All nonnegative solutions of sum a_i p_i = m, ordered like the
// feasibility certificate: the largest prime takes as few summands as
// possible first.
void all_certificates(const std::vector<long long>& primes, long long m, size_t i,
                      std::vector<long long>& acc,
                      std::vector<std::vector<long long>>& out) {
  if (i == 0) {
    if (m % primes[0] == 0) {
      acc[0] = m / primes[0];
      out.push_back(acc);
    }
    return;
  }
  for (long long a = 0; a * primes[i] <= m; ++a) {
    acc[i] = a;
    all_certificates(primes, m - a * primes[i], i - 1, acc, out);
  }
}

// Pick `need[i]` pairwise-disjoint cosets per prime, depth-first in
// deterministic order. The largest prime places its few long cosets first,
// which keeps the backtracking shallow. A node budget bounds adversarial
// lengths; exhausting it counts as an exhausted restricted space.
std::optional<std::vector<int>> pick_disjoint_cosets(
    long long ell, const std::vector<std::vector<std::vector<int>>>& cosets,
    const std::vector<long long>& need) {
  std::vector<char> used(ell, 0);
  std::vector<int> chosen;
  std::vector<size_t> order;  // prime indices, largest first
  for (size_t i = need.size(); i-- > 0;)
    if (need[i] > 0) order.push_back(i);
  if (order.empty()) return std::nullopt;  // nothing to place

  long long nodes = 5'000'000;
  std::function<bool(size_t, long long, size_t)> rec = [&](size_t oi, long long left,
                                                           size_t from) -> bool {
    if (left == 0) {
      if (oi + 1 >= order.size()) return true;
      return rec(oi + 1, need[order[oi + 1]], 0);
    }
    const size_t pi = order[oi];
    for (size_t ci = from; ci < cosets[pi].size(); ++ci) {
      if (--nodes <= 0) return false;
      const auto& c = cosets[pi][ci];
      bool free = true;
      for (int x : c)
        if (used[x]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int x : c) used[x] = 1;
      chosen.insert(chosen.end(), c.begin(), c.end());
      if (rec(oi, left - 1, ci + 1)) return true;
      chosen.resize(chosen.size() - c.size());
      for (int x : c) used[x] = 0;
    }
    return false;
  };

  if (!rec(0, need[order[0]], 0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

WitnessResult find_vanishing_witness(long long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("find_vanishing_witness: ell must be odd and >= 3");
  const long long half = (ell + 1) / 2;
  const auto gate = lam_leung_feasible(half, ell);
  if (!gate) {
    return {WitnessStatus::absent_certain, std::nullopt,
            "no vanishing sum of (ell+1)/2 roots exists at this length"};
  }
  const auto fact = factorize(ell);
  const bool two_distinct_primes = fact.size() == 2 && fact[0].n == 1 && fact[1].n == 1;

  std::vector<long long> primes;
  for (const auto& pp : fact) primes.push_back(pp.p);
  std::vector<std::vector<std::vector<int>>> cosets;
  for (long long p : primes) cosets.push_back(subgroup_cosets(ell, p));

  std::vector<std::vector<long long>> certs;
  std::vector<long long> acc(primes.size(), 0);
  all_certificates(primes, half, primes.size() - 1, acc, certs);

  for (const auto& need : certs) {
    auto support = pick_disjoint_cosets(ell, cosets, need);
    if (!support) continue;
    SignSeq u = seq_from_support(ell, *support);
    if (u.sum() != -1) throw std::logic_error("find_vanishing_witness: bad support size");
    // disjoint coset unions vanish on the primitive orbit; confirm exactly
    if (!dft_coeff_is_zero(u.values(), 1))
      throw std::logic_error("find_vanishing_witness: exact test rejected the union");
    return {WitnessStatus::found, u, "coset-union support, verified by exact test"};
  }
  if (fact.size() == 1 || two_distinct_primes) {
    return {WitnessStatus::absent_certain, std::nullopt,
            "no +-1 witness exists at prime powers or products of two primes"};
  }
  return {WitnessStatus::absent_restricted, std::nullopt,
          "coset-union space exhausted without a witness"};
}

namespace {

// Structured exact vanishing tests on compression residue counts.
struct DivisorTest {
  long long m = 0;       // fold length ell/d
  long long kind = 0;    // 0 = prime power, 1 = two distinct primes, 2 = general
  long long p = 0, q = 0;
};

std::vector<DivisorTest> make_divisor_tests(long long ell) {
  std::vector<DivisorTest> ts;
  for (long long d : divisors(ell)) {
    if (d == ell) continue;  // mu_0 = -1 never vanishes
    DivisorTest t;
    t.m = ell / d;
    const auto f = factorize(t.m);
    if (f.size() == 1) {
      t.kind = 0;
      t.p = f[0].p;
    } else if (f.size() == 2 && f[0].n == 1 && f[1].n == 1) {
      t.kind = 1;
      t.p = f[0].p;
      t.q = f[1].p;
    } else {
      t.kind = 2;
    }
    ts.push_back(t);
  }
  return ts;
}

// counts[r] = |{j in J : j = r mod m}|; the compression is an affine image
// of the counts, so the vanishing structure tests run on counts directly.
bool vanishes_on_orbit(const DivisorTest& t, const std::vector<int>& counts,
                       long long ell) {
  switch (t.kind) {
    case 0: {
      const long long stride = t.m / t.p;
      for (long long a = 0; a < stride; ++a)
        for (long long r = a + stride; r < t.m; r += stride)
          if (counts[r] != counts[a]) return false;
      return true;
    }
    case 1: {
      std::vector<int> grid(t.m);
      for (long long r = 0; r < t.m; ++r) grid[(r % t.p) * t.q + (r % t.q)] = counts[r];
      for (long long a = 0; a < t.p; ++a)
        for (long long b = 0; b < t.q; ++b)
          if (grid[a * t.q + b] - grid[a * t.q] - grid[b] + grid[0] != 0) return false;
      return true;
    }
    default: {
      std::vector<long long> c(t.m, ell / t.m);
      for (long long r = 0; r < t.m; ++r) c[r] -= 2 * counts[r];
      return zero_as_root_sum(c, t.m);
    }
  }
}

}  // namespace

VanishScanResult scan_for_vanishing(long long ell, int jobs, double budget_seconds) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("scan_for_vanishing: ell must be odd and >= 3");
  const auto tests = make_divisor_tests(ell);
  const auto partitions = make_partitions(ell);
  const auto t0 = Clock::now();

  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_time{false};
  std::atomic<long long> total{0};
  std::mutex hit_mu;
  std::optional<SignSeq> hit;

  auto worker = [&] {
    std::vector<std::vector<int>> counts;
    for (const auto& t : tests) counts.emplace_back(t.m, 0);
    while (!stop.load(std::memory_order_relaxed)) {
      const size_t pi = next.fetch_add(1);
      if (pi >= partitions.size()) return;
      if (budget_seconds > 0 &&
          std::chrono::duration<double>(Clock::now() - t0).count() > budget_seconds) {
        out_of_time = true;
        return;
      }
      long long local = 0;
      partition_candidates(ell, partitions[pi], [&](const std::vector<int>& support) {
        ++local;
        for (size_t ti = 0; ti < tests.size(); ++ti) {
          auto& cnt = counts[ti];
          std::fill(cnt.begin(), cnt.end(), 0);
          for (int j : support) ++cnt[j % tests[ti].m];
          if (vanishes_on_orbit(tests[ti], cnt, ell)) {
            std::lock_guard<std::mutex> lock(hit_mu);
            if (!hit) hit = seq_from_support(ell, support);
            stop = true;
            return false;
          }
        }
        return !stop.load(std::memory_order_relaxed);
      });
      total.fetch_add(local);
    }
  };

  std::vector<std::thread> threads;
  for (int t = 0; t < std::max(1, jobs); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  VanishScanResult r;
  r.candidates = total.load();
  r.counterexample = hit;
  r.status = out_of_time ? SearchStatus::budget_exhausted : SearchStatus::complete;
  return r;
}

}  // namespace lpo
