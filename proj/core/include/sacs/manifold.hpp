#pragma once

// The cohomology ring of a closed oriented 10-manifold, presented by
// structure constants over a fixed graded basis, together with its
// characteristic-class data.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sacs/graded.hpp"

namespace sacs {

// Degree-6 mod-2 class given either by an integral lift or flagged as
// having none (nonzero integral Bockstein).
struct W6Spec {
    std::optional<CohClass> lift;

    bool liftable() const { return lift.has_value(); }
    static W6Spec nonliftable() { return W6Spec{std::nullopt}; }
    static W6Spec with_lift(CohClass c) { return W6Spec{std::move(c)}; }
    bool operator==(const W6Spec&) const = default;
};

struct ManifoldCharData {
    CohClass c;   // degree 2, reduces to w2
    CohClass q1;  // degree 4, spin class of the tangent bundle twisted away from c
    W6Spec w6;    // degree 6 mod-2 class
    std::optional<CohClass> p1;  // degree 4
    std::optional<CohClass> p2;  // degree 8
    bool operator==(const ManifoldCharData&) const = default;
};

struct BundleCharData {
    std::string name;
    CohClass d0;      // degree 2, reduces to w2 of the bundle
    CohClass q1p;     // degree 4, spin class of the bundle twisted away from d0
    W6Spec w6;        // degree 6 mod-2 class of the bundle
    CohClass w8lift;  // degree 8 integral lift of w8 of the bundle
    std::optional<CohClass> p1;
    bool operator==(const BundleCharData&) const = default;
};

// Structure constants, stored per degree pair (i, j) with i <= j.  Degree-0
// blocks are implicit (the unit acts as identity) and materialized at
// construction; products of two odd-degree equal-degree classes keep the
// full block so antisymmetry stays visible to the validator.
class RingTable {
public:
    RingTable() = default;
    explicit RingTable(const GradedGroup& g);

    void set_product(int i, int j, int a, int b, std::vector<std::int64_t> coords);
    bool has_explicit(int i, int j, int a, int b) const;
    const std::vector<std::int64_t>& product(int i, int j, int a, int b) const;

    // For equal odd/even degrees, fill (b, a) entries left implicit by the
    // builder using graded commutativity.  Called once by Manifold.
    void fill_symmetric(const GradedGroup& g);

private:
    std::size_t block_index(int i, int j) const;
    // block[(i,j)][a * dim_j + b] = coordinate vector in degree i + j
    std::vector<std::vector<std::vector<std::int64_t>>> blocks_;
    std::vector<std::vector<std::uint8_t>> explicit_;
    std::vector<int> dim_;  // dim per degree, for index math
};

class Manifold {
public:
    Manifold(std::string name, GradedGroup groups, RingTable table, CohClass orientation,
             ManifoldCharData chr, std::vector<BundleCharData> bundles = {},
             BasisLabels labels = {});

    const std::string& name() const { return name_; }
    const GradedGroup& groups() const { return groups_; }
    const RingTable& table() const { return table_; }
    const CohClass& orientation() const { return orientation_; }
    const ManifoldCharData& chr() const { return chr_; }
    const std::vector<BundleCharData>& bundles() const { return bundles_; }
    const BasisLabels& labels() const { return labels_; }
    const BundleCharData& bundle(const std::string& name) const;

    // --- element arithmetic (all results canonical: torsion coordinates
    // --- reduced into [0, order))
    CohClass zero(int degree) const;
    CohClass basis_class(int degree, int index) const;
    CohClass canonical(CohClass a) const;
    CohClass add(const CohClass& a, const CohClass& b) const;
    CohClass sub(const CohClass& a, const CohClass& b) const;
    CohClass scale(std::int64_t n, const CohClass& a) const;
    CohClass cup(const CohClass& a, const CohClass& b) const;

    std::int64_t kronecker(const CohClass& top) const;
    int pair_mod2(std::span<const CohClass> factors) const;
    int pair_mod2(std::initializer_list<CohClass> factors) const;

    bool is_zero(const CohClass& a) const;
    bool is_torsion(const CohClass& a) const;
    bool rho2_is_zero(const CohClass& a) const;
    // (free part, torsion part)
    std::pair<CohClass, CohClass> split_free_torsion(const CohClass& a) const;

    std::string format_class(const CohClass& a) const;

private:
    void check_degree(const CohClass& a, int degree) const;

    std::string name_;
    GradedGroup groups_;
    RingTable table_;
    CohClass orientation_;
    ManifoldCharData chr_;
    std::vector<BundleCharData> bundles_;
    BasisLabels labels_;
};

}  // namespace sacs
