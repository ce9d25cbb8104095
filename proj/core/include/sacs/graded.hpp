#pragma once

// Graded abelian groups in Smith-normal-form presentation and their
// elements.  Degrees run 0..10 throughout.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sacs {

inline constexpr int kTopDegree = 10;

// One degree: free rank plus torsion coefficients (each >= 2, listed in
// divisibility order).  Coordinates of a class list the free part first,
// then torsion coordinates reduced modulo their orders.
struct GroupLevel {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;

    int dim() const { return free_rank + static_cast<int>(torsion.size()); }
    bool operator==(const GroupLevel&) const = default;
};

class GradedGroup {
public:
    GradedGroup() = default;
    explicit GradedGroup(std::array<GroupLevel, kTopDegree + 1> levels) : levels_(std::move(levels)) {}

    const GroupLevel& level(int degree) const { return levels_.at(static_cast<std::size_t>(degree)); }
    GroupLevel& level(int degree) { return levels_.at(static_cast<std::size_t>(degree)); }
    int dim(int degree) const { return level(degree).dim(); }
    int free_rank(int degree) const { return level(degree).free_rank; }

    bool operator==(const GradedGroup&) const = default;

private:
    std::array<GroupLevel, kTopDegree + 1> levels_{};
};

struct CohClass {
    int degree = 0;
    std::vector<std::int64_t> coords;

    bool operator==(const CohClass&) const = default;
};

// Optional display names for basis elements, one list per degree.
using BasisLabels = std::array<std::vector<std::string>, kTopDegree + 1>;

}  // namespace sacs
