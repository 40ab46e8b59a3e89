#include "lpo/orbitope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lpo/numtheory.hpp"

namespace lpo {

namespace {

bool is_constant(const SignSeq& u) {
  for (long long i = 1; i < u.ell(); ++i)
    if (u[i] != u[0]) return false;
  return true;
}

// Proper divisors d with a nonvanishing character orbit: S_d(u) > 0.
std::vector<long long> orbit_support(const SignSeq& u) {
  std::vector<long long> t;
  for (long long d : divisors(u.ell()))
    if (d != u.ell() && orbit_psd_sum(u, d) > 0) t.push_back(d);
  return t;
}

// Centered integer scaling of u: ell * u - (1'u) * 1. Rank-equivalent to
// u - (1'u/ell) 1.
IntSeq centered(const SignSeq& u) {
  const long long ell = u.ell(), s = u.sum();
  IntSeq z(ell);
  for (long long i = 0; i < ell; ++i) z[i] = to_int(ell * u[i] - s);
  return z;
}

std::vector<IntSeq> affine_orbit_points(const SignSeq& u) {
  std::set<SignSeq> orbit;
  const long long ell = u.ell();
  for (long long k = 1; k < std::max<long long>(ell, 2); ++k) {
    if (std::gcd(k, ell) != 1) continue;
    SignSeq base = act({0, k}, u);
    for (long long j = 0; j < ell; ++j) orbit.insert(act({j, 1}, base));
  }
  std::vector<IntSeq> pts;
  pts.reserve(orbit.size());
  for (const auto& s : orbit) pts.push_back(s.to_int_seq());
  return pts;
}

BoundsReport make_bounds(long long ell) {
  BoundsReport b;
  if (ell >= 3) b.psd_lower = psd_rank_lower_bound(ell);
  const auto f = factorize(ell);
  if (ell % 2 == 1 && f.size() == 2 && (f[0].n == 1 || f[1].n == 1)) {
    const auto ib = ingleton_bound(ell);
    b.ingleton_base = ib.base;
    b.ingleton_improved = ib.improved;
  }
  return b;
}

}  // namespace

DimReport dim_orbitope(const SignSeq& u, GroupKind group) {
  DimReport r;
  r.ell = u.ell();
  r.group = group;
  r.bounds = make_bounds(r.ell);
  if (is_constant(u)) {
    // orbit is a single point
    r.agrees = true;
    return r;
  }
  r.T = orbit_support(u);
  for (long long d : r.T) r.dim_formula += euler_phi(r.ell / d);
  if (group == GroupKind::cyclic) {
    r.dim_rank = rank_checked(circulant(centered(u)));
  } else {
    r.dim_rank = rank_checked(stack_orbit(affine_orbit_points(u)));
  }
  r.agrees = (r.dim_formula == r.dim_rank);
  return r;
}

Main0Report check_main0(const SignSeq& u, const SignSeq& v) {
  if (u.ell() != v.ell()) throw std::invalid_argument("check_main0: length mismatch");
  Main0Report r;
  r.ell = u.ell();
  r.is_lp = validate_lp(u, v).ok();
  const auto tu = orbit_support(u), tv = orbit_support(v);
  for (long long d : divisors(r.ell)) {
    if (d == r.ell) continue;
    if (!std::count(tu.begin(), tu.end(), d)) r.U1.push_back(d);
    if (!std::count(tv.begin(), tv.end(), d)) r.U2.push_back(d);
  }
  r.disjoint = true;
  for (long long d : r.U1)
    if (std::count(r.U2.begin(), r.U2.end(), d)) r.disjoint = false;
  for (long long d : tu) r.dim_u += euler_phi(r.ell / d);
  for (long long d : tv) r.dim_v += euler_phi(r.ell / d);
  return r;
}

Main0Report check_main0(const LegendrePairRecord& pair) {
  auto r = check_main0(pair.u, pair.v);
  if (!r.is_lp) throw std::invalid_argument("check_main0: record does not validate");
  return r;
}

FeasibleDimReport feasible_set_dim(long long ell,
                                   const std::vector<LegendrePairRecord>& pairs) {
  FeasibleDimReport r;
  r.ell = ell;
  r.pair_count = static_cast<long long>(pairs.size());
  if (pairs.empty()) return r;
  std::vector<IntSeq> pts;
  pts.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.ell != ell) throw std::invalid_argument("feasible_set_dim: mixed lengths");
    IntSeq row = p.u.to_int_seq();
    const IntSeq vv = p.v.to_int_seq();
    row.insert(row.end(), vv.begin(), vv.end());
    pts.push_back(std::move(row));
  }
  r.dim = rank_checked(stack_orbit(pts));
  return r;
}

CompressionProfile check_compression_profile(const LegendrePairRecord& pair) {
  const auto check = validate_lp(pair.u, pair.v);
  if (!check.ok())
    throw std::invalid_argument("check_compression_profile: record does not validate");
  CompressionProfile r;
  r.ell = pair.ell;
  const auto cyc_u = dim_orbitope(pair.u, GroupKind::cyclic);
  const auto cyc_v = dim_orbitope(pair.v, GroupKind::cyclic);
  r.dim_u = cyc_u.dim_formula;
  r.dim_v = cyc_v.dim_formula;

  for (long long d : divisors(r.ell)) {
    if (d == 1) continue;
    CompressionEntry e;
    e.d = d;
    e.norm_u = norm_sq(compress(pair.u, d));
    e.norm_v = norm_sq(compress(pair.v, d));
    e.in_tprime = (e.norm_u == e.norm_v);
    if (e.in_tprime) r.tprime_bound += euler_phi(d);
    r.entries.push_back(std::move(e));
  }

  const auto f = factorize(r.ell);
  if (f.size() == 2) {
    r.phi_bound = euler_phi(r.ell);
    long long kris = euler_phi(r.ell);
    for (const auto& [p, n] : f) {
      long long pk = 1;
      for (int i = 1; i <= n; ++i) {
        pk *= p;
        kris += euler_phi(pk);
      }
    }
    r.kris_bound = kris;
  }

  r.bounds_hold = r.dim_u >= r.tprime_bound && r.dim_v >= r.tprime_bound;
  if (r.phi_bound)
    r.bounds_hold = r.bounds_hold && r.dim_u >= *r.phi_bound && r.dim_v >= *r.phi_bound;
  if (r.kris_bound)
    r.bounds_hold = r.bounds_hold && r.dim_u >= *r.kris_bound && r.dim_v >= *r.kris_bound;

  // positivity of the orbit sums wherever norms agree and 2 phi(d) >= d-1
  r.goal_positive = true;
  for (long long d : divisors(r.ell)) {
    const bool norms_equal = norm_sq(compress(pair.u, d)) == norm_sq(compress(pair.v, d));
    if (!norms_equal || 2 * euler_phi(d) < d - 1) continue;
    if (!(orbit_psd_sum(pair.u, r.ell / d) > 0 && orbit_psd_sum(pair.v, r.ell / d) > 0))
      r.goal_positive = false;
  }
  return r;
}

ConjectureProbe conjecture_probe(const LegendrePairRecord& pair) {
  ConjectureProbe p;
  p.u_cyclic = dim_orbitope(pair.u, GroupKind::cyclic);
  p.u_affine = dim_orbitope(pair.u, GroupKind::affine);
  p.v_cyclic = dim_orbitope(pair.v, GroupKind::cyclic);
  p.v_affine = dim_orbitope(pair.v, GroupKind::affine);
  const long long want = pair.ell - 1;
  const auto good = [want](const DimReport& r) {
    return r.agrees && r.dim_formula == want && r.dim_rank == want;
  };
  p.holds = good(p.u_cyclic) && good(p.u_affine) && good(p.v_cyclic) && good(p.v_affine);
  return p;
}

}  // namespace lpo
