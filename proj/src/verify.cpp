#include "lpo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lpo/cyclotomic.hpp"
#include "lpo/linalg.hpp"
#include "lpo/numtheory.hpp"
#include "lpo/orbitope.hpp"
#include "lpo/search.hpp"

namespace lpo {

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  pass = pass && ok;
  checks.push_back({std::move(name), ok, std::move(detail)});
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "psd", "dragomir", "main0", "main1", "projector", "vanishing", "bounds"};
  return names;
}

namespace {

std::string pair_tag(const LegendrePairRecord& r) { return r.u.str() + " " + r.v.str(); }

SignSeq random_sum_minus_one(long long ell, std::mt19937_64& rng) {
  std::vector<int8_t> e(ell, 1);
  std::vector<int> idx(ell);
  for (long long i = 0; i < ell; ++i) idx[i] = static_cast<int>(i);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (long long i = 0; i < (ell + 1) / 2; ++i) e[idx[i]] = -1;
  return SignSeq(std::move(e));
}

void suite_psd(SuiteReport& rep, long long ell,
               const std::vector<LegendrePairRecord>& pairs) {
  if (pairs.empty()) {
    rep.add("no pairs available", true,
            "nothing to check; search found none or fixtures were not supplied");
    return;
  }
  bool validated = true, float_ok = true, exact_ok = true;
  std::string bad;
  for (const auto& r : pairs) {
    auto val = validate_lp(r.u, r.v);
    if (!val.ok()) {
      validated = false;
      bad = pair_tag(r) + " rejected (" + val.reason + ")";
      break;
    }
    const auto mu = dft(r.u.values());
    const auto mv = dft(r.v.values());
    for (long long k = 1; k < ell; ++k) {
      const double s = std::norm(mu[k]) + std::norm(mv[k]);
      if (std::abs(s - 2.0 * (ell + 1)) > 1e-6 * 2.0 * (ell + 1)) float_ok = false;
    }
    for (long long d : divisors(ell)) {
      if (d == ell) continue;
      if (orbit_psd_sum(r.u, d) + orbit_psd_sum(r.v, d) !=
          to_int(2 * (ell + 1) * euler_phi(ell / d)))
        exact_ok = false;
    }
    if (!float_ok || !exact_ok) {
      bad = pair_tag(r);
      break;
    }
  }
  rep.add("pairs validate", validated, bad);
  rep.add("spectral pairing |mu_k(u)|^2+|mu_k(v)|^2 = 2(ell+1)", float_ok, bad);
  rep.add("orbit sums S_d(u)+S_d(v) = 2(ell+1)phi(ell/d)", exact_ok, bad);
}

void suite_dragomir(SuiteReport& rep, long long ell,
                    const std::vector<LegendrePairRecord>& pairs) {
  if (pairs.empty()) {
    rep.add("no pairs available", true,
            "nothing to check; search found none or fixtures were not supplied");
    return;
  }
  bool ok = true;
  std::string bad;
  for (const auto& r : pairs) {
    for (long long d : divisors(ell)) {
      const IntSeq cu = compress(r.u, d), cv = compress(r.v, d);
      const IntSeq pu = paf(cu), pv = paf(cv);
      if (pu[0] + pv[0] != to_int(2 * ell + 2 - 2 * ell / d)) ok = false;
      for (long long j = 1; j < d; ++j)
        if (pu[j] + pv[j] != to_int(-2 * ell / d)) ok = false;
      if (!ok) {
        std::ostringstream os;
        os << pair_tag(r) << " at divisor " << d;
        bad = os.str();
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("compressed PAF identities", ok, bad);
}

void suite_main0(SuiteReport& rep, long long,
                 const std::vector<LegendrePairRecord>& pairs) {
  if (pairs.empty()) {
    rep.add("no pairs available", true,
            "nothing to check; search found none or fixtures were not supplied");
    return;
  }
  bool disjoint = true, dims = true;
  std::string bad;
  for (const auto& r : pairs) {
    const auto m0 = check_main0(r);
    if (!m0.disjoint) {
      disjoint = false;
      bad = pair_tag(r);
    }
    long long phi_u1 = 0, phi_u2 = 0;
    for (long long d : m0.U1) phi_u1 += euler_phi(m0.ell / d);
    for (long long d : m0.U2) phi_u2 += euler_phi(m0.ell / d);
    if (m0.dim_u != m0.ell - 1 - phi_u1 || m0.dim_v != m0.ell - 1 - phi_u2) {
      dims = false;
      bad = pair_tag(r);
    }
    if (!disjoint || !dims) break;
  }
  rep.add("vanishing divisor sets disjoint", disjoint, bad);
  rep.add("dimension decomposition ell-1-sum(phi)", dims, bad);
}

void suite_main1(SuiteReport& rep, long long ell,
                 const std::vector<LegendrePairRecord>& pairs) {
  if (pairs.empty()) {
    rep.add("no pairs available", true,
            "nothing to check; search found none or fixtures were not supplied");
    return;
  }
  const auto f = factorize(ell);
  const bool covered =
      f.size() == 1 || (f.size() == 2 && (f[0].n == 1 || f[1].n == 1) &&
                        (f[0].n <= 2 && f[1].n <= 2));
  if (!covered) {
    rep.add("length outside p^n / pq / pq^2 scope", true, "suite skipped");
    return;
  }
  bool cyc_ok = true;
  std::string bad;
  std::set<SignSeq> members;
  for (const auto& r : pairs) {
    members.insert(r.u);
    members.insert(r.v);
  }
  for (const auto& s : members) {
    const auto d = dim_orbitope(s, GroupKind::cyclic);
    if (!d.agrees || d.dim_formula != ell - 1) {
      cyc_ok = false;
      bad = s.str();
      break;
    }
  }
  rep.add("cyclic orbitope dimension = ell-1 (formula and rank)", cyc_ok, bad);

  // affine group spot-check on canonical representatives
  std::set<std::pair<SignSeq, SignSeq>> reps;
  for (const auto& r : pairs) reps.insert(canonical_pair(r.u, r.v));
  bool aff_ok = true;
  int budgeted = 0;
  for (const auto& [u, v] : reps) {
    if (++budgeted > 25) break;
    for (const SignSeq* s : {&u, &v}) {
      const auto d = dim_orbitope(*s, GroupKind::affine);
      if (!d.agrees || d.dim_formula != ell - 1) {
        aff_ok = false;
        bad = s->str();
      }
    }
    if (!aff_ok) break;
  }
  rep.add("affine orbitope dimension = ell-1 (representatives)", aff_ok, bad);
}

void suite_projector(SuiteReport& rep, long long ell) {
  const auto ds = divisors(ell);
  bool idem = true, orth = true, trace = true;
  for (size_t i = 0; i < ds.size(); ++i) {
    const auto pd = projector(ell, ds[i]);
    if (!(rc_mul(pd, pd) == pd)) idem = false;
    if (!pd.trace_equals(euler_phi(ell / ds[i]))) trace = false;
    for (size_t j = i + 1; j < ds.size(); ++j) {
      const auto pd2 = projector(ell, ds[j]);
      if (!(rc_mul(pd, pd2) == rc_zero(ell))) orth = false;
    }
  }
  RatCirculant sum = rc_zero(ell);
  for (long long d : ds) sum = rc_add(sum, projector(ell, d));
  rep.add("P_d idempotent", idem);
  rep.add("P_d P_d' = 0", orth);
  rep.add("sum of P_d = I", sum.is_identity());
  rep.add("trace(P_d) = phi(ell/d)", trace);
}

void suite_vanishing(SuiteReport& rep, long long ell, int jobs) {
  const auto f = factorize(ell);
  const bool no_vanish_regime =
      f.size() == 1 || (f.size() == 2 && f[0].n == 1 && f[1].n == 1);
  if (no_vanish_regime) {
    const auto scan = scan_for_vanishing(ell, jobs);
    std::ostringstream os;
    os << scan.candidates << " candidates";
    rep.add("no sum -1 sequence has a vanishing DFT coefficient",
            !scan.counterexample.has_value() && scan.status == SearchStatus::complete,
            os.str());
    return;
  }
  const auto w = find_vanishing_witness(ell);
  if (w.status == WitnessStatus::found) {
    const auto profile = vanishing_orbit_profile(w.witness->values());
    bool primitive_zero = false;
    for (const auto& o : profile)
      if (o.d == 1 && o.vanishes) primitive_zero = true;
    rep.add("vanishing witness found and verified on the primitive orbit",
            primitive_zero, w.witness->str());
  } else {
    rep.add("witness search exhausted restricted space", true, w.note);
  }
}

void suite_bounds(SuiteReport& rep, long long ell, int samples) {
  std::mt19937_64 rng(static_cast<unsigned long long>(ell) * 0x9e3779b97f4a7c15ull);
  const long long psd_lb = psd_rank_lower_bound(ell);
  const auto f = factorize(ell);
  const bool pqbeta = f.size() == 2 && (f[0].n == 1 || f[1].n == 1);
  std::optional<IngletonBound> ib;
  if (pqbeta) ib = ingleton_bound(ell);
  const bool pq2 = pqbeta && std::max(f[0].n, f[1].n) == 2;

  bool dim_ok = true, rank_ok = true, pq2_ok = true;
  for (int s = 0; s < samples; ++s) {
    const SignSeq u = random_sum_minus_one(ell, rng);
    const auto d = dim_orbitope(u, GroupKind::cyclic);
    if (!d.agrees || d.dim_formula < psd_lb) dim_ok = false;
    if (ib) {
      // dim = rank(C_u) - 1 for sum -1 input
      if (d.dim_rank + 1 < ib->best()) rank_ok = false;
    }
    if (pq2 && d.dim_formula != ell - 1 && d.dim_formula != ell - 1 - euler_phi(ell))
      pq2_ok = false;
  }
  rep.add("dim >= totient-sum lower bound", dim_ok);
  if (ib) rep.add("rank(C_u) >= non-recurrent circulant bound", rank_ok);
  if (pq2) rep.add("dim in {ell-1-phi(ell), ell-1}", pq2_ok);
}

}  // namespace

SuiteReport run_verify_suite(const std::string& suite, long long ell,
                             const std::vector<LegendrePairRecord>& pairs, int jobs) {
  SuiteReport rep;
  rep.suite = suite;
  if (suite == "psd")
    suite_psd(rep, ell, pairs);
  else if (suite == "dragomir")
    suite_dragomir(rep, ell, pairs);
  else if (suite == "main0")
    suite_main0(rep, ell, pairs);
  else if (suite == "main1")
    suite_main1(rep, ell, pairs);
  else if (suite == "projector")
    suite_projector(rep, ell);
  else if (suite == "vanishing")
    suite_vanishing(rep, ell, jobs);
  else if (suite == "bounds")
    suite_bounds(rep, ell, 20);
  else
    throw std::invalid_argument("unknown verify suite: " + suite);
  return rep;
}

}  // namespace lpo
