#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lpo/types.hpp"

namespace lpo {

/// Integer polynomial, constant term first, no trailing zero coefficients.
/// The empty vector is the zero polynomial.
using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Remainder of a modulo a monic divisor, over the integers.
IntPoly poly_mod(IntPoly a, const IntPoly& divisor);

/// The m-th cyclotomic polynomial, monic of degree phi(m). Computed once
/// by exact division of x^m - 1 by the lower-order factors and cached;
/// safe for concurrent callers.
const IntPoly& cyclotomic_poly(long long m);

/// mu_k(u) = sum_j u_j e^{-2 pi i j k / ell} for every k; |mu_k|^2 is the
/// power spectral density. Display/filter use only; never decides a
/// zero-test.
std::vector<std::complex<double>> dft(std::span<const long long> u);

/// Exact test of sum_r c_r zeta_m^r == 0 for integer c (indices taken
/// mod m). Prime powers and products of two distinct primes use the
/// structure of the relation lattice; everything else reduces mod Phi_m.
bool zero_as_root_sum(std::span<const long long> c, long long m);

/// Same decision, always via the polynomial remainder. Exposed as the
/// independent reference for the structured fast paths.
bool zero_as_root_sum_by_remainder(std::span<const long long> c, long long m);

/// Exact test of mu_k(u) == 0: fold u along gcd(k, ell) and decide as a
/// sum of (ell/gcd)-th roots of unity.
bool dft_coeff_is_zero(std::span<const long long> u, long long k);

struct OrbitVanishing {
  long long d = 0;  // divisor class: the k with gcd(k, ell) = d
  bool vanishes = false;
};

/// For each divisor d of ell, whether mu_k(u) = 0 on the orbit
/// {k : gcd(k, ell) = d}. Constant on each orbit for integer input; the
/// implementation cross-checks a second orbit member when one exists.
std::vector<OrbitVanishing> vanishing_orbit_profile(std::span<const long long> u);

}  // namespace lpo
