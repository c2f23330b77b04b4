#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plumbing/errors.hpp"

namespace plumbing {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense square matrix over arbitrary-precision integers. Rows and columns
/// are indexed by an explicit ordered basis of vertex labels so that callers
/// can address entries by label instead of remembering positions.
class IntMatrix {
public:
    explicit IntMatrix(std::vector<std::string> basis);

    static IntMatrix identity(std::vector<std::string> basis);

    std::size_t dimension() const { return n_; }
    const std::vector<std::string>& basis() const { return basis_; }
    std::size_t index_of(const std::string& label) const;

    Int& at(std::size_t row, std::size_t col);
    const Int& at(std::size_t row, std::size_t col) const;
    Int& at(const std::string& row, const std::string& col);
    const Int& at(const std::string& row, const std::string& col) const;

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_symmetric() const;
    bool is_antisymmetric() const;

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. All intermediate divisions are exact.
    Int determinant() const;

    std::string to_string() const;

private:
    void check_same_basis(const IntMatrix& rhs) const;

    std::size_t n_;
    std::vector<std::string> basis_;
    std::vector<Int> data_; // row-major
};

/// Signature of a symmetric matrix, computed exactly by congruence reduction
/// over the rationals. Zero diagonals with a nonzero row are handled by the
/// usual symmetric row+column addition before pivoting.
int symmetric_signature(const IntMatrix& m);

} // namespace plumbing
