#include "lpo/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lpo {

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

long long euler_phi(long long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  long long r = n;
  for (const auto& [p, e] : factorize(n)) r -= r / p;
  return r;
}

int moebius(long long n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
  int r = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    r = -r;
  }
  return r;
}

std::vector<long long> divisors(long long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<long long> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const size_t base = ds.size();
    long long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long long ramanujan_sum(long long q, long long n) {
  if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
  long long r = n % q;
  if (r < 0) r += q;
  const long long g = (r == 0) ? q : std::gcd(r, q);
  const long long k = q / g;
  // mu(k) * phi(q) / phi(k); the quotient is integral since k | q.
  return moebius(k) * (euler_phi(q) / euler_phi(k));
}

namespace {

// Smallest coefficient vector ordered by descending prime: the largest
// prime takes the fewest summands it can. Recurses from the last index.
bool lex_min_combination(const std::vector<long long>& primes, size_t i,
                         long long m, std::vector<long long>& out) {
  if (i == 0) {
    if (m % primes[0]) return false;
    out[0] = m / primes[0];
    return true;
  }
  for (long long a = 0; a * primes[i] <= m; ++a) {
    out[i] = a;
    if (lex_min_combination(primes, i - 1, m - a * primes[i], out)) return true;
  }
  return false;
}

}  // namespace

std::optional<LamLeungCertificate> lam_leung_feasible(long long m, long long ell) {
  if (ell < 1 || ell % 2 == 0)
    throw std::invalid_argument("lam_leung_feasible: ell must be odd and >= 1");
  if (m < 0) throw std::invalid_argument("lam_leung_feasible: m must be >= 0");
  LamLeungCertificate cert;
  for (const auto& [p, e] : factorize(ell)) cert.primes.push_back(p);
  cert.coeff.assign(cert.primes.size(), 0);
  if (m == 0) return cert;  // empty sum
  if (cert.primes.empty()) return std::nullopt;  // ell = 1, m > 0
  if (!lex_min_combination(cert.primes, cert.primes.size() - 1, m, cert.coeff))
    return std::nullopt;
  return cert;
}

long long tau(long long ell, long long p) {
  if (ell < 1 || ell % 2 == 0) throw std::invalid_argument("tau: ell must be odd");
  const auto f = factorize(ell);
  auto it = std::find_if(f.begin(), f.end(), [&](const PrimePower& pp) { return pp.p == p; });
  if (it == f.end()) throw std::invalid_argument("tau: p must be a prime divisor of ell");
  const long long m = static_cast<long long>(f.size());
  const long long alpha = it->n;
  const auto eps = [](long long k) { return k >= 2 ? 1LL : 0LL; };
  long long palpha = 1;
  for (int i = 0; i < it->n; ++i) palpha *= p;
  long long t = 1 + eps(m) * eps(alpha) * euler_phi(p) + euler_phi(palpha);
  for (const auto& [q, e] : f) {
    if (q == p) continue;
    long long qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    t += euler_phi(p * qe);
  }
  return t;
}

IngletonBound ingleton_bound(long long ell) {
  const auto f = factorize(ell);
  const bool shape_ok =
      ell % 2 == 1 && f.size() == 2 && (f[0].n == 1 || f[1].n == 1);
  if (!shape_ok)
    throw std::invalid_argument("ingleton_bound: ell must be p*q^beta for distinct odd primes");
  // p is the prime with exponent 1; when both have exponent 1 the bound is
  // symmetric (min over both tau values) and the labeling does not matter.
  const auto [pp, qq] = f[0].n == 1 ? std::pair(f[0], f[1]) : std::pair(f[1], f[0]);
  const long long p = pp.p, q = qq.p;
  const long long beta = qq.n;

  IngletonBound b;
  if (beta == 1) {
    b.base = std::min(tau(ell, p), tau(ell, q));
    return b;
  }
  long long qbeta = 1;
  for (int i = 0; i < qq.n; ++i) qbeta *= q;
  long long sum_phi_qi = 0;
  for (long long qi = q; qi <= qbeta; qi *= q) sum_phi_qi += euler_phi(qi);
  const long long lhs = euler_phi(p * q) + euler_phi(q) + euler_phi(qbeta);
  const long long rhs = euler_phi(p) + sum_phi_qi;
  b.base = std::max(lhs + 1, rhs + 1);
  if (lhs > rhs)
    b.improved = euler_phi(p) + euler_phi(p * q) + sum_phi_qi + 1;
  return b;
}

long long psd_rank_lower_bound(long long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("psd_rank_lower_bound: ell must be odd and >= 3");
  long long s = 0;
  for (const auto& [p, e] : factorize(ell)) {
    long long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      s += euler_phi(pk);
    }
  }
  return s;
}

}  // namespace lpo
