#include "kisincount/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace kisin {

namespace {

void require_same_spec(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.spec() == b.spec())) {
        throw std::invalid_argument("laurent: operands belong to different fields");
    }
}

}  // namespace

std::int64_t Valuation::value() const {
    if (infinite_) {
        throw std::domain_error("valuation: infinity has no finite value");
    }
    return value_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& other) const {
    if (infinite_ || other.infinite_) {
        return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
    }
    return value_ <=> other.value_;
}

std::string Valuation::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

LaurentPoly::LaurentPoly(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {
    if (!spec_) {
        throw std::invalid_argument("laurent: null field spec");
    }
}

LaurentPoly LaurentPoly::zero(std::shared_ptr<const FieldSpec> spec) {
    return LaurentPoly(std::move(spec));
}

LaurentPoly LaurentPoly::monomial(std::shared_ptr<const FieldSpec> spec,
                                  std::int64_t exponent, FieldElement coeff) {
    LaurentPoly out(std::move(spec));
    out.set_term(exponent, std::move(coeff));
    return out;
}

Valuation LaurentPoly::valuation() const {
    if (terms_.empty()) {
        return Valuation::infinity();
    }
    return Valuation::finite(terms_.begin()->first);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    require_same_spec(*this, other);
    LaurentPoly out(spec_);
    out.terms_ = terms_;
    for (const auto& [exp, coeff] : other.terms_) {
        auto it = out.terms_.find(exp);
        if (it == out.terms_.end()) {
            out.terms_.emplace(exp, coeff);
            continue;
        }
        FieldElement sum = fe_add(it->second, coeff, *spec_);
        if (sum.is_zero()) {
            out.terms_.erase(it);
        } else {
            it->second = std::move(sum);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(spec_);
    for (const auto& [exp, coeff] : terms_) {
        out.terms_.emplace(exp, fe_neg(coeff, *spec_));
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    require_same_spec(*this, other);
    LaurentPoly out(spec_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            const std::int64_t exp = ea + eb;
            FieldElement prod = fe_mul(ca, cb, *spec_);
            auto it = out.terms_.find(exp);
            if (it == out.terms_.end()) {
                if (!prod.is_zero()) {
                    out.terms_.emplace(exp, std::move(prod));
                }
                continue;
            }
            FieldElement sum = fe_add(it->second, prod, *spec_);
            if (sum.is_zero()) {
                out.terms_.erase(it);
            } else {
                it->second = std::move(sum);
            }
        }
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t m) const {
    LaurentPoly out(spec_);
    for (const auto& [exp, coeff] : terms_) {
        out.terms_.emplace(exp + m, coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::phi() const {
    LaurentPoly out(spec_);
    for (const auto& [exp, coeff] : terms_) {
        out.terms_.emplace(exp * spec_->p, coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::truncated_mod(std::int64_t t) const {
    LaurentPoly out(spec_);
    for (const auto& [exp, coeff] : terms_) {
        if (exp < t) {
            out.terms_.emplace(exp, coeff);
        }
    }
    return out;
}

void LaurentPoly::set_term(std::int64_t exponent, FieldElement coeff) {
    if (coeff.is_zero()) {
        terms_.erase(exponent);
    } else {
        terms_[exponent] = std::move(coeff);
    }
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    return *spec_ == *other.spec_ && terms_ == other.terms_;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coeff] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << fe_to_string(coeff, *spec_) << "*u^" << exp;
    }
    return os.str();
}

}  // namespace kisin
