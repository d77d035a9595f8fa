#include "kisincount/gf.hpp"

#include <sstream>
#include <stdexcept>

namespace kisin {

namespace {

// Remainder of a (ascending coefficients) under division by the monic
// polynomial b over GF(p).
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
    const std::int64_t db = static_cast<std::int64_t>(b.size()) - 1;
    for (std::int64_t i = static_cast<std::int64_t>(a.size()) - 1; i >= db; --i) {
        const std::int64_t c = a[i];
        if (c == 0) {
            continue;
        }
        for (std::int64_t j = 0; j <= db; ++j) {
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
        }
    }
    a.resize(db);
    return a;
}

bool poly_is_zero(const std::vector<std::int64_t>& a) {
    for (std::int64_t c : a) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

// The monic degree-d polynomial whose lower coefficients are the base-p
// digits of index, constant term fastest.
std::vector<std::int64_t> monic_from_index(std::int64_t index, std::int64_t d,
                                           std::int64_t p) {
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[d] = 1;
    for (std::int64_t j = 0; j < d; ++j) {
        poly[j] = index % p;
        index /= p;
    }
    return poly;
}

std::int64_t int_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p) {
    const std::int64_t k = static_cast<std::int64_t>(poly.size()) - 1;
    for (std::int64_t d = 1; 2 * d <= k; ++d) {
        const std::int64_t count = int_pow(p, d);
        for (std::int64_t idx = 0; idx < count; ++idx) {
            if (poly_is_zero(poly_mod(poly, monic_from_index(idx, d, p), p))) {
                return false;
            }
        }
    }
    return true;
}

FieldElement fe_pow(const FieldElement& a, std::int64_t exp, const FieldSpec& spec) {
    FieldElement result = fe_one(spec);
    FieldElement square = a;
    for (std::int64_t n = exp; n > 0; n >>= 1) {
        if (n & 1) {
            result = fe_mul(result, square, spec);
        }
        square = fe_mul(square, square, spec);
    }
    return result;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(std::int64_t p, std::int64_t k) {
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("field_make: p must be an odd prime >= 3, got p = " +
                                    std::to_string(p));
    }
    if (k < 1) {
        throw std::invalid_argument("field_make: k must be >= 1, got k = " +
                                    std::to_string(k));
    }
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (q >= (std::int64_t{1} << 62) / p) {
            throw std::invalid_argument("field_make: p^k must be < 2^62, got p = " +
                                        std::to_string(p) + ", k = " + std::to_string(k));
        }
        q *= p;
    }

    // Lexicographically smallest monic irreducible of degree k, lower
    // coefficients compared from the constant term upward. Scanning
    // indices whose most significant digit is the constant term visits
    // candidates in exactly that order.
    const std::int64_t count = int_pow(p, k);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> poly(k + 1, 0);
        poly[k] = 1;
        std::int64_t rest = idx;
        for (std::int64_t j = k - 1; j >= 0; --j) {
            poly[j] = rest % p;
            rest /= p;
        }
        if (is_irreducible(poly, p)) {
            auto spec = std::make_shared<FieldSpec>();
            spec->p = p;
            spec->k = k;
            spec->modulus = std::move(poly);
            spec->q = q;
            return spec;
        }
    }
    throw std::logic_error("field_make: no irreducible polynomial found");
}

bool FieldElement::is_zero() const {
    for (std::int64_t c : coeffs) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

FieldElement fe_zero(const FieldSpec& spec) {
    return FieldElement{std::vector<std::int64_t>(spec.k, 0)};
}

FieldElement fe_one(const FieldSpec& spec) {
    FieldElement one = fe_zero(spec);
    one.coeffs[0] = 1;
    return one;
}

FieldElement fe_from_index(std::int64_t index, const FieldSpec& spec) {
    if (index < 0 || index >= spec.q) {
        throw std::invalid_argument("fe_from_index: index out of range");
    }
    FieldElement out = fe_zero(spec);
    for (std::int64_t j = 0; j < spec.k; ++j) {
        out.coeffs[j] = index % spec.p;
        index /= spec.p;
    }
    return out;
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    FieldElement out = fe_zero(spec);
    for (std::int64_t j = 0; j < spec.k; ++j) {
        out.coeffs[j] = (a.coeffs[j] + b.coeffs[j]) % spec.p;
    }
    return out;
}

FieldElement fe_neg(const FieldElement& a, const FieldSpec& spec) {
    FieldElement out = fe_zero(spec);
    for (std::int64_t j = 0; j < spec.k; ++j) {
        out.coeffs[j] = (spec.p - a.coeffs[j]) % spec.p;
    }
    return out;
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    return fe_add(a, fe_neg(b, spec), spec);
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
    std::vector<std::int64_t> prod(2 * spec.k - 1, 0);
    for (std::int64_t i = 0; i < spec.k; ++i) {
        if (a.coeffs[i] == 0) {
            continue;
        }
        for (std::int64_t j = 0; j < spec.k; ++j) {
            prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % spec.p;
        }
    }
    return FieldElement{poly_mod(std::move(prod), spec.modulus, spec.p)};
}

FieldElement fe_inv(const FieldElement& a, const FieldSpec& spec) {
    if (a.is_zero()) {
        throw std::domain_error("fe_inv: zero has no multiplicative inverse");
    }
    return fe_pow(a, spec.q - 2, spec);
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.q);
    for (std::int64_t i = 0; i < spec.q; ++i) {
        out.push_back(fe_from_index(i, spec));
    }
    return out;
}

std::string fe_to_string(const FieldElement& a, const FieldSpec& spec) {
    if (spec.k == 1) {
        return std::to_string(a.coeffs[0]);
    }
    std::ostringstream os;
    os << '[';
    for (std::int64_t j = 0; j < spec.k; ++j) {
        if (j > 0) {
            os << ',';
        }
        os << a.coeffs[j];
    }
    os << ']';
    return os.str();
}

}  // namespace kisin
