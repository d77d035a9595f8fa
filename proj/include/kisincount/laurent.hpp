#pragma once

#include "kisincount/gf.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

namespace kisin {

/// Value of the u-adic valuation v_u: an integer, or infinity for the
/// zero polynomial. Infinity compares strictly greater than every
/// integer.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(std::int64_t value) { return Valuation(false, value); }

    bool is_infinite() const { return infinite_; }

    /// Finite value; calling this on infinity is a domain error.
    std::int64_t value() const;

    bool operator==(const Valuation& other) const = default;
    std::strong_ordering operator<=>(const Valuation& other) const;

    /// Compares against a finite bound; infinity exceeds every bound.
    bool at_least(std::int64_t bound) const { return infinite_ || value_ >= bound; }

    std::string to_string() const;

private:
    Valuation(bool infinite, std::int64_t value) : infinite_(infinite), value_(value) {}

    bool infinite_;
    std::int64_t value_;
};

/// Finite-support Laurent polynomial over GF(p^k), stored sparsely with
/// no zero coefficients. Values are immutable once built; all operations
/// return new polynomials.
class LaurentPoly {
public:
    explicit LaurentPoly(std::shared_ptr<const FieldSpec> spec);

    static LaurentPoly zero(std::shared_ptr<const FieldSpec> spec);
    static LaurentPoly monomial(std::shared_ptr<const FieldSpec> spec,
                                std::int64_t exponent, FieldElement coeff);

    const FieldSpec& spec() const { return *spec_; }
    const std::shared_ptr<const FieldSpec>& spec_ptr() const { return spec_; }
    const std::map<std::int64_t, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Least exponent with a nonzero coefficient; infinity for zero.
    Valuation valuation() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;

    /// Multiplication by u^m: every exponent shifted by m.
    LaurentPoly shifted(std::int64_t m) const;

    /// The twist u -> u^p: every exponent multiplied by the field
    /// characteristic, coefficients unchanged.
    LaurentPoly phi() const;

    /// Canonical representative modulo u^t * GF(q)[[u]]: drops every term
    /// with exponent >= t.
    LaurentPoly truncated_mod(std::int64_t t) const;

    /// Sets one term in place during construction, replacing any existing
    /// term at the exponent; a zero coefficient removes the term.
    void set_term(std::int64_t exponent, FieldElement coeff);

    bool operator==(const LaurentPoly& other) const;

    /// Terms joined by " + " with exponents ascending, e.g.
    /// "2*u^-1 + 1*u^3"; coefficients are coordinate vectors when k > 1.
    /// The zero polynomial renders as "0".
    std::string to_string() const;

private:
    std::shared_ptr<const FieldSpec> spec_;
    std::map<std::int64_t, FieldElement> terms_;
};

}  // namespace kisin
