#pragma once

// Smith normal form over the integers, plus the two solvers built on it.

#include <cstdint>
#include <optional>
#include <vector>

#include "sacs/intmat.hpp"

namespace sacs {

// a = u * d * v with u, v unimodular, d diagonal, diagonal entries
// non-negative and forming a divisibility chain (zeros trailing).
struct SnfResult {
    IntMat u;
    IntMat d;
    IntMat v;
    std::vector<std::int64_t> diagonal;  // min(rows, cols) entries of d
};

SnfResult snf(const IntMat& a);

// Some integer solution of a*x = b, or nullopt when none exists.
std::optional<std::vector<std::int64_t>> solve_integral(const IntMat& a,
                                                        const std::vector<std::int64_t>& b);

// Basis of the integer kernel lattice {x : a*x = 0}.
std::vector<std::vector<std::int64_t>> kernel_basis(const IntMat& a);

}  // namespace sacs
