#include "sacs/intmat.hpp"

#include <utility>

#include "sacs/errors.hpp"

namespace sacs {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row(int i, int j, std::int64_t k) {
    for (int c = 0; c < cols_; ++c) at(i, c) = checked_add(at(i, c), checked_mul(k, at(j, c)));
}

void IntMat::add_col(int i, int j, std::int64_t k) {
    for (int r = 0; r < rows_; ++r) at(r, i) = checked_add(at(r, i), checked_mul(k, at(r, j)));
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = checked_neg(at(i, c));
}

void IntMat::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = checked_neg(at(r, i));
}

IntMat mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw DegreeError("matrix product shape mismatch");
    IntMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b.at(k, j)));
        }
    return r;
}

std::vector<std::int64_t> mul_vec(const IntMat& a, const std::vector<std::int64_t>& v) {
    if (a.cols() != static_cast<int>(v.size())) throw DegreeError("matrix-vector shape mismatch");
    std::vector<std::int64_t> r(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r[i] = checked_add(r[i], checked_mul(a.at(i, j), v[j]));
    return r;
}

std::int64_t det(const IntMat& a) {
    if (a.rows() != a.cols()) throw DegreeError("determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                std::int64_t num = checked_sub(checked_mul(m.at(i, j), m.at(k, k)),
                                               checked_mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = num / prev;  // divides exactly (Bareiss)
            }
        prev = m.at(k, k);
    }
    return checked_mul(sign, m.at(n - 1, n - 1));
}

}  // namespace sacs
