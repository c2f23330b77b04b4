#include "plumbing/polynomial.hpp"

#include <sstream>
#include <utility>

namespace plumbing {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Int& IntPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

Int IntPolynomial::evaluate(const Int& t) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

IntPolynomial IntPolynomial::negate() const {
    std::vector<Int> c = coeffs_;
    for (auto& x : c)
        x = -x;
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Int& c = coeffs_[k];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int mag = abs(c);
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1)
                os << mag << '*';
            os << 't';
            if (k > 1)
                os << '^' << k;
        }
        first = false;
    }
    if (first)
        return "0";
    return os.str();
}

} // namespace plumbing
