#pragma once

#include <gmpxx.h>

#include <vector>

namespace lpo {

using Int = mpz_class;

/// gmpxx has no long long constructor; all integral values here fit a long.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

/// Integer sequence indexed by Z_m (compressions, circulant symbols).
using IntSeq = std::vector<Int>;

/// Periodic autocorrelations of a +-1 sequence fit comfortably in 64 bits
/// at desk scale.
using PafVector = std::vector<long long>;

}  // namespace lpo
