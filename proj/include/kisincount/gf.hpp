#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kisin {

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// A finite field GF(p^k) for an odd prime p, presented as
/// GF(p)[x]/(modulus). The modulus is the lexicographically smallest
/// monic irreducible polynomial of degree k, coefficients compared from
/// the constant term upward, so equal (p, k) always yield the same field
/// model and the same element enumeration order.
struct FieldSpec {
    std::int64_t p;
    std::int64_t k;
    std::vector<std::int64_t> modulus;  // ascending coefficients, modulus[k] == 1
    std::int64_t q;                     // p^k

    /// Builds the field. Rejects p non-prime, p < 3, k < 1, and any
    /// (p, k) with p^k >= 2^62, naming the offending argument.
    static std::shared_ptr<const FieldSpec> make(std::int64_t p, std::int64_t k);

    bool operator==(const FieldSpec& other) const = default;
};

/// Element of GF(p^k): k coordinates in the power basis of the modulus,
/// each in [0, p). The zero element is all-zero coordinates.
struct FieldElement {
    std::vector<std::int64_t> coeffs;

    bool operator==(const FieldElement& other) const = default;
    bool is_zero() const;
};

FieldElement fe_zero(const FieldSpec& spec);
FieldElement fe_one(const FieldSpec& spec);

/// Element with index i in enumeration order: coordinates are the base-p
/// digits of i, constant coordinate fastest. Index 0 is zero.
FieldElement fe_from_index(std::int64_t index, const FieldSpec& spec);

FieldElement fe_add(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement fe_neg(const FieldElement& a, const FieldSpec& spec);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);

/// Multiplicative inverse. Inverting zero is a domain error.
FieldElement fe_inv(const FieldElement& a, const FieldSpec& spec);

/// All q elements in enumeration order (zero first, no duplicates).
std::vector<FieldElement> enumerate_elements(const FieldSpec& spec);

/// "3" for prime fields, "[1,2]" coordinate vectors when k > 1.
std::string fe_to_string(const FieldElement& a, const FieldSpec& spec);

}  // namespace kisin
