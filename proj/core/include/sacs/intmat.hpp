#pragma once

// Dense integer matrices with exact (checked) arithmetic.

#include <cstdint>
#include <vector>

#include "sacs/checked.hpp"

namespace sacs {

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += k * row j  (checked)
    void add_row(int i, int j, std::int64_t k);
    void add_col(int i, int j, std::int64_t k);
    void negate_row(int i);
    void negate_col(int i);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

IntMat mul(const IntMat& a, const IntMat& b);
std::vector<std::int64_t> mul_vec(const IntMat& a, const std::vector<std::int64_t>& v);

// Exact determinant (Bareiss fraction-free elimination), square matrices only.
std::int64_t det(const IntMat& a);

}  // namespace sacs
