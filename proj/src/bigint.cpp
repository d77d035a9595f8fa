#include "kisincount/bigint.hpp"

#include <stdexcept>

namespace kisin {

BigInt bigint_pow(const BigInt& base, std::int64_t exp) {
    if (exp < 0) {
        throw std::invalid_argument("bigint_pow: exponent must be nonnegative");
    }
    BigInt result = 1;
    BigInt square = base;
    for (std::int64_t n = exp; n > 0; n >>= 1) {
        if (n & 1) {
            result *= square;
        }
        square *= square;
    }
    return result;
}

std::int64_t extension_degree(const BigInt& q, std::int64_t p) {
    if (p < 2 || q < p) {
        return -1;
    }
    BigInt rest = q;
    std::int64_t k = 0;
    while (rest > 1) {
        if (rest % p != 0) {
            return -1;
        }
        rest /= p;
        ++k;
    }
    return k;
}

}  // namespace kisin
