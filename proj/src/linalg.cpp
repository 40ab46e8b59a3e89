#include "lpo/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "lpo/numtheory.hpp"

namespace lpo {

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix circulant(const IntSeq& first_row) {
  const size_t n = first_row.size();
  if (n == 0) throw std::invalid_argument("circulant: empty first row");
  IntMatrix m(n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m.at(j, i) = first_row[(i + n - j) % n];
  return m;
}

namespace {

// Fraction-free elimination on a working copy; entries stay integral,
// every intermediate is a minor of the input.
long long bareiss_rank(IntMatrix m) {
  const size_t rows = m.rows(), cols = m.cols();
  size_t r = 0;
  Int prev = 1;
  Int t;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        t = m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = t;
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return static_cast<long long>(r);
}

}  // namespace

long long rank_exact(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // rank is transpose-invariant; eliminate on the wide orientation
  if (m.rows() > m.cols()) return bareiss_rank(m.transposed());
  return bareiss_rank(m);
}

long long rank_mod_prime(const IntMatrix& m, unsigned long long p) {
  const size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<unsigned long long> a(rows * cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      unsigned long long v = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
      a[i * cols + j] = v;
    }
  const auto mulmod = [p](unsigned long long x, unsigned long long y) {
    return static_cast<unsigned long long>(
        static_cast<unsigned __int128>(x) * y % p);
  };
  const auto powmod = [&](unsigned long long b, unsigned long long e) {
    unsigned long long r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[pr * cols + j]);
    const unsigned long long inv = powmod(a[r * cols + c], p - 2);
    for (size_t i = r + 1; i < rows; ++i) {
      const unsigned long long f = mulmod(a[i * cols + c], inv);
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) {
        unsigned long long sub = mulmod(f, a[r * cols + j]);
        unsigned long long& x = a[i * cols + j];
        x = (x >= sub) ? x - sub : x + p - sub;
      }
    }
    ++r;
  }
  return static_cast<long long>(r);
}

std::vector<unsigned long long> rank_screen_primes(int count, unsigned long long seed) {
  std::vector<unsigned long long> ps;
  mpz_class x = Int(1) << 61;
  x += static_cast<unsigned long>(seed % 1000003);
  for (int i = 0; i < count; ++i) {
    mpz_nextprime(x.get_mpz_t(), x.get_mpz_t());
    ps.push_back(x.get_ui());
  }
  return ps;
}

long long rank_checked(const IntMatrix& m) {
  const long long exact = rank_exact(m);
  for (unsigned long long p : rank_screen_primes(3, 17)) {
    if (rank_mod_prime(m, p) > exact)
      throw std::logic_error("rank_checked: modular rank exceeds exact rank");
  }
  return exact;
}

void RatCirculant::normalize() {
  long long g = den < 0 ? -den : den;
  for (long long s : symbol) g = std::gcd(g, s < 0 ? -s : s);
  if (g > 1) {
    den /= g;
    for (long long& s : symbol) s /= g;
  }
  if (den < 0) {
    den = -den;
    for (long long& s : symbol) s = -s;
  }
}

bool RatCirculant::operator==(const RatCirculant& o) const {
  if (ell != o.ell) return false;
  for (long long i = 0; i < ell; ++i)
    if (symbol[i] * o.den != o.symbol[i] * den) return false;
  return true;
}

bool RatCirculant::is_identity() const {
  if (symbol.at(0) != den) return false;
  for (long long i = 1; i < ell; ++i)
    if (symbol[i] != 0) return false;
  return true;
}

IntMatrix RatCirculant::numerator_matrix() const {
  IntSeq row(symbol.size());
  for (size_t i = 0; i < symbol.size(); ++i) row[i] = to_int(symbol[i]);
  return circulant(row);
}

RatCirculant rc_identity(long long ell) {
  RatCirculant r{ell, 1, std::vector<long long>(ell, 0)};
  r.symbol[0] = 1;
  return r;
}

RatCirculant rc_zero(long long ell) {
  return RatCirculant{ell, 1, std::vector<long long>(ell, 0)};
}

RatCirculant rc_mul(const RatCirculant& a, const RatCirculant& b) {
  if (a.ell != b.ell) throw std::invalid_argument("rc_mul: size mismatch");
  const long long n = a.ell;
  RatCirculant r{n, a.den * b.den, std::vector<long long>(n, 0)};
  for (long long i = 0; i < n; ++i) {
    if (a.symbol[i] == 0) continue;
    for (long long j = 0; j < n; ++j)
      r.symbol[(i + j) % n] += a.symbol[i] * b.symbol[j];
  }
  r.normalize();
  return r;
}

RatCirculant rc_add(const RatCirculant& a, const RatCirculant& b) {
  if (a.ell != b.ell) throw std::invalid_argument("rc_add: size mismatch");
  RatCirculant r{a.ell, a.den * b.den, std::vector<long long>(a.ell, 0)};
  for (long long i = 0; i < a.ell; ++i)
    r.symbol[i] = a.symbol[i] * b.den + b.symbol[i] * a.den;
  r.normalize();
  return r;
}

RatCirculant projector(long long ell, long long d) {
  if (ell < 1 || ell % 2 == 0)
    throw std::invalid_argument("projector: ell must be odd and >= 1");
  if (d < 1 || ell % d != 0) throw std::invalid_argument("projector: d must divide ell");
  RatCirculant p{ell, ell, std::vector<long long>(ell, 0)};
  for (long long i = 0; i < ell; ++i) p.symbol[i] = ramanujan_sum(ell / d, i);
  return p;
}

IntMatrix stack_orbit(const std::vector<IntSeq>& points) {
  if (points.empty()) throw std::invalid_argument("stack_orbit: empty point set");
  const size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("stack_orbit: length mismatch");
  IntMatrix m(points.size() - 1, n);
  for (size_t i = 1; i < points.size(); ++i)
    for (size_t j = 0; j < n; ++j) m.at(i - 1, j) = points[i][j] - points[0][j];
  return m;
}

}  // namespace lpo
