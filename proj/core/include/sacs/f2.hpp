#pragma once

// Linear algebra over the two-element field.  Entries are stored as 0/1
// bytes; sizes here are tiny (ranks of cohomology groups).

#include <cstdint>
#include <optional>
#include <vector>

namespace sacs {

using F2Vec = std::vector<std::uint8_t>;

class F2Mat {
public:
    F2Mat() = default;
    F2Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint8_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::uint8_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const F2Mat&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> a_;
};

int f2_rank(F2Mat a);

// Some solution of a*x = b over F2, or nullopt if the system is inconsistent.
std::optional<F2Vec> f2_solve(F2Mat a, F2Vec b);

// Basis of the null space {x : a*x = 0}.
std::vector<F2Vec> f2_kernel(F2Mat a);

}  // namespace sacs
