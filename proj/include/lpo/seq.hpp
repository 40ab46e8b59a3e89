#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpo/linalg.hpp"
#include "lpo/types.hpp"

namespace lpo {

/// A +-1 sequence of odd length ell, indexed by Z_ell.
/// Text form: '-' is -1, '+' is +1, index 0 leftmost.
class SignSeq {
 public:
  SignSeq() = default;
  explicit SignSeq(std::vector<int8_t> entries);
  static SignSeq parse(std::string_view text);

  long long ell() const { return static_cast<long long>(e_.size()); }
  /// entry at i, index reduced mod ell
  int operator[](long long i) const {
    long long r = i % ell();
    if (r < 0) r += ell();
    return e_[static_cast<size_t>(r)];
  }
  long long sum() const;
  std::string str() const;
  std::vector<long long> values() const { return {e_.begin(), e_.end()}; }
  IntSeq to_int_seq() const { return IntSeq(e_.begin(), e_.end()); }
  const std::vector<int8_t>& raw() const { return e_; }

  auto operator<=>(const SignSeq&) const = default;

 private:
  std::vector<int8_t> e_;
};

SignSeq negated(const SignSeq& u);

/// Periodic autocorrelation P(j) = sum_i u(i) u(i-j); symmetric, P(0) = ell.
PafVector paf(const SignSeq& u);
IntSeq paf(const IntSeq& u);

/// Element (shift j, multiplier k) of Z_ell x| Z_ell^*, acting by i -> k i + j.
struct GroupElement {
  long long shift = 0;
  long long mult = 1;
};

GroupElement compose(const GroupElement& a, const GroupElement& b, long long ell);

/// (j,k) u at i is u(k^{-1}(i - j) mod ell). Throws unless gcd(k, ell) = 1.
SignSeq act(const GroupElement& g, const SignSeq& u);

enum class GroupKind { cyclic, affine };

/// Lexicographically smallest orbit element (-1 before +1), scanning
/// multipliers then shifts in ascending order.
SignSeq canonical_form(const SignSeq& u, GroupKind group);

/// Minimum over the pair action ((i,j),k) and the swap, lexicographic on
/// the concatenation of the two sign strings.
std::pair<SignSeq, SignSeq> canonical_pair(const SignSeq& u, const SignSeq& v);

/// Compression to target length m (m | ell):
/// result(j) = sum_i u(m i + j) for j in Z_m.
IntSeq compress(const IntSeq& u, long long m);
IntSeq compress(const SignSeq& u, long long m);

/// Sum of x_j^2.
Int norm_sq(const IntSeq& x);

/// Exact orbit PSD sum S_d(u) = sum over k with gcd(k, ell) = d of
/// |mu_k(u)|^2, evaluated as sum_s c_{ell/d}(s) P_u(s) in integers.
Int orbit_psd_sum(const IntSeq& u, long long d);
Int orbit_psd_sum(const SignSeq& u, long long d);

/// A validated Legendre pair: P_u(j) + P_v(j) = -2 for j != 0 and
/// 1'u = 1'v = -1.
struct LegendrePairRecord {
  SignSeq u, v;
  long long ell = 0;
  PafVector paf_u, paf_v;
  bool canonical = false;  // pair equals its canonical form

  auto operator<=>(const LegendrePairRecord&) const = default;
};

struct LpValidation {
  std::optional<LegendrePairRecord> record;
  std::string reason;  // first violated constraint: "sum_u", "sum_v", "paf@j"
  bool ok() const { return record.has_value(); }
};

/// Accepts iff the PAF identity and the -1 sum normalization both hold.
/// Throws on length mismatch (even lengths cannot be built at all).
LpValidation validate_lp(const SignSeq& u, const SignSeq& v);

/// The bordered (2 ell + 2) x (2 ell + 2) matrix over the pair's
/// circulants; satisfies H H' = (2 ell + 2) I. Throws on an invalid pair.
IntMatrix build_hadamard(const LegendrePairRecord& pair);

}  // namespace lpo
