#pragma once

#include <optional>
#include <vector>

namespace lpo {

struct PrimePower {
  long long p = 0;
  int n = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, sorted ascending by prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Trial-division factorization. Requires n >= 1.
Factorization factorize(long long n);

bool is_prime(long long n);

/// Euler's totient: count of k in [1, n] with gcd(k, n) = 1.
long long euler_phi(long long n);

/// Moebius function: 1, (-1)^r for squarefree with r prime factors, else 0.
int moebius(long long n);

/// All divisors of n, ascending, including 1 and n.
std::vector<long long> divisors(long long n);

/// Ramanujan sum c_q(n) = sum of e^{2*pi*i*k*n/q} over k in [1, q] coprime
/// to q, evaluated exactly through the Moebius/totient closed form
/// mu(q/g) * phi(q) / phi(q/g) with g = gcd(q, n).
long long ramanujan_sum(long long q, long long n);

/// Witness that m is a nonnegative combination of the prime divisors of a
/// fixed modulus: sum over i of coeff[i] * primes[i] == m.
struct LamLeungCertificate {
  std::vector<long long> primes;
  std::vector<long long> coeff;
};

/// Decides whether a vanishing sum of m ell-th roots of unity can exist:
/// m must be representable as a nonnegative combination of the prime
/// divisors of ell. Deterministic certificate: the coefficient of the
/// largest prime is minimized first. Returns nullopt when m is not
/// representable. Requires odd ell >= 1.
std::optional<LamLeungCertificate> lam_leung_feasible(long long m, long long ell);

/// Circulant-rank bound ingredient for ell = p^a * p_1^{a_1} ... :
/// tau(ell, p) = 1 + eps(m)eps(a)phi(p) + phi(p^a) + sum_i phi(p * p_i^{a_i}),
/// where eps(1) = 0 and eps(k) = 1 for k >= 2. Throws if p does not divide
/// ell or ell is not odd.
long long tau(long long ell, long long p);

/// Rank lower bound for non-recurrent +-1 circulants at ell = p * q^beta.
struct IngletonBound {
  long long base = 0;                 // L(pq^beta), or min-tau when beta = 1
  std::optional<long long> improved;  // tighter branch, when its condition holds
  long long best() const { return improved ? *improved : base; }
};

/// Requires ell = p * q^beta with p, q distinct odd primes. For beta = 1
/// the base bound is min{tau(ell,p), tau(ell,q)}; for beta >= 2 it is
/// L(pq^beta) = max{phi(pq)+phi(q)+phi(q^beta)+1, phi(p)+sum phi(q^i)+1},
/// with the improved branch phi(p)+phi(pq)+sum phi(q^i)+1 exposed when
/// phi(pq)+phi(q)+phi(q^beta) > phi(p)+sum phi(q^i).
IngletonBound ingleton_bound(long long ell);

/// Sum of phi(p^i) over every prime power p^i dividing ell. Lower bound on
/// the orbitope dimension of any +-1 vector with entry sum -1.
long long psd_rank_lower_bound(long long ell);

}  // namespace lpo
