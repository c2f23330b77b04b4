#include "plumbing/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace plumbing {

IntMatrix::IntMatrix(std::vector<std::string> basis)
    : n_(basis.size()), basis_(std::move(basis)), data_(n_ * n_, Int(0)) {
    std::vector<std::string> sorted = basis_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("matrix basis labels must be unique");
}

IntMatrix IntMatrix::identity(std::vector<std::string> basis) {
    IntMatrix m(std::move(basis));
    for (std::size_t i = 0; i < m.n_; ++i)
        m.at(i, i) = 1;
    return m;
}

std::size_t IntMatrix::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (basis_[i] == label)
            return i;
    throw UnknownVertex("label not in matrix basis: " + label);
}

Int& IntMatrix::at(std::size_t row, std::size_t col) {
    if (row >= n_ || col >= n_)
        throw InvalidArgument("matrix index out of range");
    return data_[row * n_ + col];
}

const Int& IntMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_)
        throw InvalidArgument("matrix index out of range");
    return data_[row * n_ + col];
}

Int& IntMatrix::at(const std::string& row, const std::string& col) {
    return at(index_of(row), index_of(col));
}

const Int& IntMatrix::at(const std::string& row, const std::string& col) const {
    return at(index_of(row), index_of(col));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(basis_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

void IntMatrix::check_same_basis(const IntMatrix& rhs) const {
    if (basis_ != rhs.basis_)
        throw InvalidArgument("matrix bases differ");
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    check_same_basis(rhs);
    IntMatrix out(basis_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    check_same_basis(rhs);
    IntMatrix out(basis_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    check_same_basis(rhs);
    IntMatrix out(basis_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool IntMatrix::is_antisymmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            if (at(i, j) != -at(j, i))
                return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (n_ == 0)
        return 1;
    std::vector<Int> a = data_; // working copy, row-major
    auto entry = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n_ + j]; };

    Int sign = 1;
    Int prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (entry(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n_ && entry(swap_row, k) == 0)
                ++swap_row;
            if (swap_row == n_)
                return 0;
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(entry(k, j), entry(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                // Exact division: standard Bareiss identity.
                entry(i, j) = (entry(i, j) * entry(k, k) - entry(i, k) * entry(k, j)) / prev_pivot;
            }
            entry(i, k) = 0;
        }
        prev_pivot = entry(k, k);
    }
    return sign * entry(n_ - 1, n_ - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j)
                os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

int symmetric_signature(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw InvalidArgument("signature requires a symmetric matrix");
    const std::size_t n = m.dimension();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = Rational(m.at(i, j));
    auto entry = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

    int positives = 0;
    int negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (entry(k, k) == 0) {
            // Look first for a later nonzero diagonal entry to swap in.
            std::size_t swap_idx = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (entry(i, i) != 0) {
                    swap_idx = i;
                    break;
                }
            if (swap_idx < n) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(entry(k, j), entry(swap_idx, j));
                for (std::size_t i = 0; i < n; ++i)
                    std::swap(entry(i, k), entry(i, swap_idx));
            } else {
                // Diagonal is all zero from k on. Find an off-diagonal entry
                // and fold it onto the diagonal by a congruence move.
                std::size_t pi = n, pj = n;
                for (std::size_t i = k; i < n && pi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (entry(i, j) != 0) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi == n)
                    break; // remaining block is zero; contributes nothing
                for (std::size_t j = 0; j < n; ++j)
                    entry(pi, j) += entry(pj, j);
                for (std::size_t i = 0; i < n; ++i)
                    entry(i, pi) += entry(i, pj);
                if (pi != k) {
                    for (std::size_t j = 0; j < n; ++j)
                        std::swap(entry(k, j), entry(pi, j));
                    for (std::size_t i = 0; i < n; ++i)
                        std::swap(entry(i, k), entry(i, pi));
                }
            }
        }
        const Rational pivot = entry(k, k);
        if (pivot > 0)
            ++positives;
        else
            ++negatives;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (entry(i, k) == 0)
                continue;
            const Rational factor = entry(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j)
                entry(i, j) -= factor * entry(k, j);
            for (std::size_t j = k; j < n; ++j)
                entry(j, i) -= factor * entry(j, k);
        }
    }
    return positives - negatives;
}

} // namespace plumbing
