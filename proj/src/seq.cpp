#include "lpo/seq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lpo/numtheory.hpp"

namespace lpo {

SignSeq::SignSeq(std::vector<int8_t> entries) : e_(std::move(entries)) {
  if (e_.empty() || e_.size() % 2 == 0)
    throw std::invalid_argument("SignSeq: length must be odd");
  for (int8_t v : e_)
    if (v != 1 && v != -1) throw std::invalid_argument("SignSeq: entries must be +-1");
}

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<int8_t> e;
  e.reserve(text.size());
  for (char c : text) {
    if (c == '-')
      e.push_back(-1);
    else if (c == '+')
      e.push_back(1);
    else
      throw std::invalid_argument("SignSeq: invalid character");
  }
  return SignSeq(std::move(e));
}

long long SignSeq::sum() const {
  long long s = 0;
  for (int8_t v : e_) s += v;
  return s;
}

std::string SignSeq::str() const {
  std::string s;
  s.reserve(e_.size());
  for (int8_t v : e_) s.push_back(v < 0 ? '-' : '+');
  return s;
}

SignSeq negated(const SignSeq& u) {
  std::vector<int8_t> e = u.raw();
  for (int8_t& v : e) v = -v;
  return SignSeq(std::move(e));
}

PafVector paf(const SignSeq& u) {
  const long long ell = u.ell();
  PafVector p(ell);
  for (long long j = 0; j < ell; ++j) {
    long long s = 0;
    for (long long i = 0; i < ell; ++i) s += u[i] * u[i - j];
    p[j] = s;
  }
  return p;
}

IntSeq paf(const IntSeq& u) {
  const long long m = static_cast<long long>(u.size());
  IntSeq p(m);
  for (long long j = 0; j < m; ++j) {
    Int s = 0;
    for (long long i = 0; i < m; ++i) s += u[i] * u[((i - j) % m + m) % m];
    p[j] = s;
  }
  return p;
}

namespace {

long long mod_inverse(long long k, long long ell) {
  long long t = 0, nt = 1, r = ell, nr = k % ell;
  while (nr != 0) {
    const long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("multiplier not coprime to ell");
  return t < 0 ? t + ell : t;
}

}  // namespace

GroupElement compose(const GroupElement& a, const GroupElement& b, long long ell) {
  return {(a.shift + a.mult * b.shift) % ell, (a.mult * b.mult) % ell};
}

SignSeq act(const GroupElement& g, const SignSeq& u) {
  const long long ell = u.ell();
  long long k = g.mult % ell;
  if (k < 0) k += ell;
  const long long kinv = mod_inverse(k, ell);
  std::vector<int8_t> e(ell);
  for (long long i = 0; i < ell; ++i)
    e[i] = static_cast<int8_t>(u[kinv * (i - g.shift)]);
  return SignSeq(std::move(e));
}

namespace {

// Smallest cyclic shift, -1 ordered before +1 (numeric int8 order).
SignSeq min_shift(const SignSeq& u) {
  const long long ell = u.ell();
  SignSeq best = u;
  for (long long j = 1; j < ell; ++j) {
    SignSeq cand = act({j, 1}, u);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<long long> units(long long ell) {
  std::vector<long long> ks;
  for (long long k = 1; k < ell; ++k)
    if (std::gcd(k, ell) == 1) ks.push_back(k);
  if (ell == 1) ks.push_back(0);  // degenerate; unused in practice
  return ks;
}

}  // namespace

SignSeq canonical_form(const SignSeq& u, GroupKind group) {
  if (group == GroupKind::cyclic) return min_shift(u);
  SignSeq best = u;
  bool first = true;
  for (long long k : units(u.ell())) {
    SignSeq cand = min_shift(act({0, k}, u));
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  }
  return best;
}

std::pair<SignSeq, SignSeq> canonical_pair(const SignSeq& u, const SignSeq& v) {
  if (u.ell() != v.ell()) throw std::invalid_argument("canonical_pair: length mismatch");
  std::pair<SignSeq, SignSeq> best;
  bool first = true;
  for (long long k : units(u.ell())) {
    // shifts act independently on the two coordinates, so each minimizes
    // separately for a fixed multiplier
    const SignSeq du = min_shift(act({0, k}, u));
    const SignSeq dv = min_shift(act({0, k}, v));
    for (const auto& cand : {std::pair(du, dv), std::pair(dv, du)}) {
      if (first || cand < best) {
        best = cand;
        first = false;
      }
    }
  }
  return best;
}

IntSeq compress(const IntSeq& u, long long m) {
  const long long ell = static_cast<long long>(u.size());
  if (m < 1 || ell % m != 0) throw std::invalid_argument("compress: m must divide ell");
  IntSeq c(m);
  for (long long j = 0; j < m; ++j)
    for (long long i = 0; i < ell / m; ++i) c[j] += u[m * i + j];
  return c;
}

IntSeq compress(const SignSeq& u, long long m) { return compress(u.to_int_seq(), m); }

Int norm_sq(const IntSeq& x) {
  Int s = 0;
  for (const Int& v : x) s += v * v;
  return s;
}

Int orbit_psd_sum(const IntSeq& u, long long d) {
  const long long ell = static_cast<long long>(u.size());
  if (d < 1 || ell % d != 0) throw std::invalid_argument("orbit_psd_sum: d must divide ell");
  const long long m = ell / d;
  const IntSeq p = paf(u);
  Int s = 0;
  for (long long j = 0; j < ell; ++j) s += to_int(ramanujan_sum(m, j)) * p[j];
  if (s < 0) throw std::logic_error("orbit_psd_sum: negative orbit sum");
  return s;
}

Int orbit_psd_sum(const SignSeq& u, long long d) { return orbit_psd_sum(u.to_int_seq(), d); }

LpValidation validate_lp(const SignSeq& u, const SignSeq& v) {
  if (u.ell() != v.ell()) throw std::invalid_argument("validate_lp: length mismatch");
  if (u.sum() != -1) return {std::nullopt, "sum_u"};
  if (v.sum() != -1) return {std::nullopt, "sum_v"};
  PafVector pu = paf(u), pv = paf(v);
  for (long long j = 1; j < u.ell(); ++j)
    if (pu[j] + pv[j] != -2) return {std::nullopt, "paf@" + std::to_string(j)};
  LegendrePairRecord rec{u, v, u.ell(), std::move(pu), std::move(pv), false};
  rec.canonical = (canonical_pair(u, v) == std::pair(u, v));
  return {std::move(rec), ""};
}

IntMatrix build_hadamard(const LegendrePairRecord& pair) {
  const auto check = validate_lp(pair.u, pair.v);
  if (!check.ok())
    throw std::invalid_argument("build_hadamard: pair is not a Legendre pair (" +
                                check.reason + ")");
  const long long ell = pair.ell;
  const size_t n = static_cast<size_t>(2 * ell + 2);
  IntMatrix h(n, n);
  for (size_t j = 0; j < n; ++j) h.at(0, j) = 1;
  h.at(1, 0) = 1;
  h.at(1, 1) = -1;
  for (long long j = 0; j < ell; ++j) {
    h.at(1, 2 + j) = 1;
    h.at(1, 2 + ell + j) = -1;
  }
  const IntMatrix cu = circulant(pair.u.to_int_seq());
  const IntMatrix cv = circulant(pair.v.to_int_seq());
  for (long long i = 0; i < ell; ++i) {
    h.at(2 + i, 0) = 1;
    h.at(2 + i, 1) = 1;
    h.at(2 + ell + i, 0) = 1;
    h.at(2 + ell + i, 1) = -1;
    for (long long j = 0; j < ell; ++j) {
      h.at(2 + i, 2 + j) = cv.at(i, j);
      h.at(2 + i, 2 + ell + j) = cu.at(i, j);
      h.at(2 + ell + i, 2 + j) = cu.at(j, i);
      h.at(2 + ell + i, 2 + ell + j) = -cv.at(j, i);
    }
  }
  return h;
}

}  // namespace lpo
