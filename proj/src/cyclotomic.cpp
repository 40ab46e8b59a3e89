#include "lpo/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lpo/numtheory.hpp"

namespace lpo {

namespace {

void strip_trailing_zeros(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by a monic divisor; the remainder must vanish.
IntPoly poly_divexact(IntPoly a, const IntPoly& d) {
  strip_trailing_zeros(a);
  if (d.empty() || d.back() != 1)
    throw std::invalid_argument("poly_divexact: divisor must be monic");
  if (a.empty()) return {};
  const size_t dd = d.size() - 1;
  if (a.size() - 1 < dd) throw std::invalid_argument("poly_divexact: not divisible");
  IntPoly q(a.size() - dd);
  for (size_t i = a.size(); i-- > dd;) {
    Int c = a[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) a[i - dd + j] -= c * d[j];
  }
  strip_trailing_zeros(a);
  if (!a.empty()) throw std::invalid_argument("poly_divexact: nonzero remainder");
  return q;
}

}  // namespace

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip_trailing_zeros(r);
  return r;
}

IntPoly poly_mod(IntPoly a, const IntPoly& d) {
  strip_trailing_zeros(a);
  if (d.empty() || d.back() != 1)
    throw std::invalid_argument("poly_mod: divisor must be monic");
  const size_t dd = d.size() - 1;
  while (a.size() > dd) {
    const Int c = a.back();
    const size_t shift = a.size() - 1 - dd;
    if (c != 0)
      for (size_t j = 0; j <= dd; ++j) a[shift + j] -= c * d[j];
    a.pop_back();
    strip_trailing_zeros(a);
  }
  return a;
}

const IntPoly& cyclotomic_poly(long long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
  static std::map<long long, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // Phi_d for divisors d ascending; each needs only the smaller ones.
  for (long long d : divisors(m)) {
    if (cache.count(d)) continue;
    IntPoly xm1(d + 1);
    xm1[0] = -1;
    xm1[d] = 1;
    IntPoly phi = xm1;
    for (long long e : divisors(d))
      if (e != d) phi = poly_divexact(std::move(phi), cache.at(e));
    cache.emplace(d, std::move(phi));
  }
  return cache.at(m);
}

std::vector<std::complex<double>> dft(std::span<const long long> u) {
  const size_t ell = u.size();
  if (ell == 0) throw std::invalid_argument("dft: empty sequence");
  std::vector<std::complex<double>> mu(ell);
  const double tau = 2.0 * std::acos(-1.0);
  for (size_t k = 0; k < ell; ++k) {
    std::complex<double> s = 0;
    for (size_t j = 0; j < ell; ++j) {
      const double ang = -tau * static_cast<double>((j * k) % ell) / static_cast<double>(ell);
      s += static_cast<double>(u[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    mu[k] = s;
  }
  return mu;
}

namespace {

// Fold arbitrary-index coefficients into one period.
std::vector<long long> fold_mod(std::span<const long long> c, long long m) {
  std::vector<long long> f(m, 0);
  for (size_t r = 0; r < c.size(); ++r) f[static_cast<long long>(r) % m] += c[r];
  return f;
}

}  // namespace

bool zero_as_root_sum_by_remainder(std::span<const long long> c, long long m) {
  if (m < 1) throw std::invalid_argument("zero_as_root_sum: m must be >= 1");
  const auto f = fold_mod(c, m);
  IntPoly p(f.size());
  for (size_t i = 0; i < f.size(); ++i) p[i] = to_int(f[i]);
  return poly_mod(std::move(p), cyclotomic_poly(m)).empty();
}

bool zero_as_root_sum(std::span<const long long> c, long long m) {
  if (m < 1) throw std::invalid_argument("zero_as_root_sum: m must be >= 1");
  const auto f = fold_mod(c, m);
  if (m == 1) return f[0] == 0;
  const auto fact = factorize(m);
  if (fact.size() == 1) {
    // m = p^n: zero iff constant on each block {a + b p^{n-1}}.
    const long long stride = m / fact[0].p;
    for (long long a = 0; a < stride; ++a)
      for (long long r = a + stride; r < m; r += stride)
        if (f[r] != f[a]) return false;
    return true;
  }
  if (fact.size() == 2 && fact[0].n == 1 && fact[1].n == 1) {
    // m = pq: zero iff f(a,b) = g(a) + h(b) on the CRT grid.
    const long long p = fact[0].p, q = fact[1].p;
    std::vector<long long> grid(m);
    for (long long r = 0; r < m; ++r) grid[(r % p) * q + (r % q)] = f[r];
    for (long long a = 0; a < p; ++a)
      for (long long b = 0; b < q; ++b)
        if (grid[a * q + b] - grid[a * q] - grid[b] + grid[0] != 0) return false;
    return true;
  }
  return zero_as_root_sum_by_remainder(c, m);
}

bool dft_coeff_is_zero(std::span<const long long> u, long long k) {
  const long long ell = static_cast<long long>(u.size());
  if (ell < 1) throw std::invalid_argument("dft_coeff_is_zero: empty sequence");
  k %= ell;
  if (k < 0) k += ell;
  const long long d = std::gcd(k, ell);  // gcd(0, ell) = ell
  const long long m = ell / d;
  // mu_k vanishes iff sum_j u_j zeta_m^{r(j)} = 0 with r(j) = k j / d mod m.
  std::vector<long long> c(m, 0);
  for (long long j = 0; j < ell; ++j) c[(k * j % ell) / d] += u[j];
  return zero_as_root_sum(c, m);
}

std::vector<OrbitVanishing> vanishing_orbit_profile(std::span<const long long> u) {
  const long long ell = static_cast<long long>(u.size());
  if (ell < 1) throw std::invalid_argument("vanishing_orbit_profile: empty sequence");
  std::vector<OrbitVanishing> profile;
  for (long long d : divisors(ell)) {
    const bool z = dft_coeff_is_zero(u, d % ell);
    // Rationality makes the answer constant on the whole character orbit;
    // verify on a second member when the orbit has one.
    if (euler_phi(ell / d) > 1) {
      long long r = 2;
      while (std::gcd(r, ell / d) != 1) ++r;
      if (dft_coeff_is_zero(u, d * r % ell) != z)
        throw std::logic_error("vanishing_orbit_profile: orbit constancy violated");
    }
    profile.push_back({d, z});
  }
  return profile;
}

}  // namespace lpo
