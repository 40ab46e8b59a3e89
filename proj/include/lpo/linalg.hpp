#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpo/types.hpp"

namespace lpo {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Int& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Circulant whose (j+1)-th row is the first row cyclically shifted by j.
IntMatrix circulant(const IntSeq& first_row);

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// first-nonzero pivoting. Exact for any integer matrix.
long long rank_exact(const IntMatrix& m);

/// Rank of the reduction mod p (p an odd word-size prime). Always a lower
/// bound for the rational rank.
long long rank_mod_prime(const IntMatrix& m, unsigned long long p);

/// Deterministic 61-bit primes for the modular pre-screen.
std::vector<unsigned long long> rank_screen_primes(int count, unsigned long long seed);

/// Modular pre-screen over >= 3 word-size primes followed by the exact
/// elimination; the returned value is always the exact one, and a modular
/// rank exceeding it raises a logic error.
long long rank_checked(const IntMatrix& m);

/// Exact rational circulant: entry (h, j) = symbol[(h - j) mod ell] / den.
struct RatCirculant {
  long long ell = 0;
  long long den = 1;
  std::vector<long long> symbol;

  void normalize();
  bool operator==(const RatCirculant& o) const;
  bool is_identity() const;
  /// trace == t, exactly
  bool trace_equals(long long t) const { return symbol.at(0) * ell == t * den; }
  IntMatrix numerator_matrix() const;  // symbol circulant (denominator dropped)
};

RatCirculant rc_identity(long long ell);
RatCirculant rc_zero(long long ell);
RatCirculant rc_mul(const RatCirculant& a, const RatCirculant& b);
RatCirculant rc_add(const RatCirculant& a, const RatCirculant& b);

/// Projection onto the isotypic component for divisor d of ell:
/// the rational circulant with entries c_{ell/d}(h - j) / ell.
RatCirculant projector(long long ell, long long d);

/// Rows are points[i] - points[0]; the exact rank of the stack is the
/// affine dimension of the point set.
IntMatrix stack_orbit(const std::vector<IntSeq>& points);

}  // namespace lpo
