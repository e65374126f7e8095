// SPDX-License-Identifier: MIT
/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer alias used for point counts.
 *
 * Ambient spaces scanned by the counting routines reach q^(h*m) with
 * q up to 97, which overflows 64-bit integers long before the configured
 * enumeration budgets do.  All counts are therefore carried as exact
 * arbitrary-precision integers and serialized as decimal strings.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace isocone {

using BigInt = boost::multiprecision::cpp_int;

/// q^e as an exact integer (e >= 0).
inline BigInt big_pow(long long q, long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= q;
  return r;
}

/// Decimal rendering (the only serialization used in reports).
inline std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace isocone
