#pragma once

#include <string>
#include <vector>

#include "plumbing/matrix.hpp"

namespace plumbing {

/// Integer-coefficient polynomial stored densely by ascending degree.
/// Trailing zero coefficients are trimmed on construction; the zero
/// polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }

    /// Coefficient of t^k (zero beyond the stored degree).
    const Int& coefficient(std::size_t k) const;

    Int evaluate(const Int& t) const;
    IntPolynomial negate() const;

    bool operator==(const IntPolynomial& rhs) const = default;

    /// Render as e.g. "-6 + 13*t - 6*t^2".
    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

} // namespace plumbing
