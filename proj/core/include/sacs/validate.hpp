#pragma once

// Semantic validators.  Each returns a report listing every violation it
// found; an empty report means the check passed.

#include <string>
#include <vector>

#include "sacs/manifold.hpp"

namespace sacs {

struct Violation {
    std::string kind;    // short category, e.g. "associativity"
    std::string where;   // location, e.g. "deg (2,2) basis (x,x)"
    std::string detail;  // human-readable explanation

    bool operator==(const Violation&) const = default;
};

struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string kind, std::string where, std::string detail) {
        violations.push_back({std::move(kind), std::move(where), std::move(detail)});
    }
    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

// Standing hypotheses on the graded group: degree 0 and 10 are Z, degrees
// 1 and 9 vanish, degree 2 is free, degree 3 has odd torsion only, torsion
// coefficients form divisibility chains, the orientation class generates.
Report validate_hypotheses(const Manifold& m);

// Ring axioms over the stored structure constants: unit law, graded
// commutativity, compatibility with torsion orders, associativity over all
// basis triples within the degree range.
Report validate_ring(const Manifold& m);

// Poincare duality: rank symmetry, torsion duality, unimodular pairing on
// free parts, nondegenerate mod-2 pairing between degrees 2 and 8.
Report validate_pd(const Manifold& m);

}  // namespace sacs
