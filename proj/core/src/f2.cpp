#include "sacs/f2.hpp"

#include "sacs/errors.hpp"

namespace sacs {
namespace {

// Row-reduce in place; returns pivot column of each pivot row.
std::vector<int> eliminate(F2Mat& a, F2Vec* b) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col)) { p = i; break; }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(p, j));
            if (b) std::swap((*b)[static_cast<std::size_t>(row)], (*b)[static_cast<std::size_t>(p)]);
        }
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || !a.at(i, col)) continue;
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) ^= a.at(row, j);
            if (b) (*b)[static_cast<std::size_t>(i)] ^= (*b)[static_cast<std::size_t>(row)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int f2_rank(F2Mat a) {
    return static_cast<int>(eliminate(a, nullptr).size());
}

std::optional<F2Vec> f2_solve(F2Mat a, F2Vec b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DegreeError("f2_solve shape mismatch");
    std::vector<int> pivots = eliminate(a, &b);
    for (int i = static_cast<int>(pivots.size()); i < a.rows(); ++i)
        if (b[static_cast<std::size_t>(i)]) return std::nullopt;
    F2Vec x(static_cast<std::size_t>(a.cols()), 0);  // free variables zero
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = b[r];
    return x;
}

std::vector<F2Vec> f2_kernel(F2Mat a) {
    std::vector<int> pivots = eliminate(a, nullptr);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<F2Vec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        F2Vec x(static_cast<std::size_t>(a.cols()), 0);
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = a.at(static_cast<int>(r), free);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace sacs
