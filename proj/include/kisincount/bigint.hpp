#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace kisin {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp for a nonnegative exponent.
BigInt bigint_pow(const BigInt& base, std::int64_t exp);

/// Extension degree k >= 1 with q = p^k, or -1 if q is not a positive
/// power of p.
std::int64_t extension_degree(const BigInt& q, std::int64_t p);

}  // namespace kisin
