#pragma once

#include <stdexcept>
#include <string>

namespace kisin {

/// Disagreement between two independent computations of the same
/// quantity (formula vs census vs direct enumeration). Callers report
/// these with exit status 2, distinct from input validation errors
/// (std::invalid_argument, exit status 1).
class CrossCheckError : public std::runtime_error {
public:
    explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kisin
