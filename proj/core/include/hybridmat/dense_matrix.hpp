#pragma once

#include <string>
#include <vector>

#include "hybridmat/errors.hpp"
#include "hybridmat/rational.hpp"

namespace hybridmat {

// Concrete matrix of exact scalars; evaluation target and oracle format.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(long long rows, long long cols)
        : rows_(rows < 0 ? 0 : rows), cols_(cols < 0 ? 0 : cols),
          entries_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {}

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    Rational& at(long long r, long long c) { return entries_[index(r, c)]; }
    const Rational& at(long long r, long long c) const { return entries_[index(r, c)]; }

    bool operator==(const DenseMatrix&) const = default;

    // Whitespace-aligned text rendering, one row per line.
    std::string to_text() const;

private:
    std::size_t index(long long r, long long c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    long long rows_;
    long long cols_;
    std::vector<Rational> entries_;
};

} // namespace hybridmat
