#include "sacs/manifold.hpp"

#include <algorithm>

#include "sacs/checked.hpp"
#include "sacs/errors.hpp"

namespace sacs {
namespace {

// Reduce a coordinate vector of the given degree into canonical form.
void reduce_coords(const GradedGroup& g, int degree, std::vector<std::int64_t>& coords) {
    const GroupLevel& lv = g.level(degree);
    for (std::size_t k = 0; k < lv.torsion.size(); ++k) {
        std::int64_t m = lv.torsion[k];
        if (m >= 2) coords[static_cast<std::size_t>(lv.free_rank) + k] =
            mod_floor(coords[static_cast<std::size_t>(lv.free_rank) + k], m);
    }
}

}  // namespace

std::size_t RingTable::block_index(int i, int j) const {
    // pairs (i, j) with i <= j and i + j <= 10, row-major
    std::size_t idx = 0;
    for (int r = 0; r < i; ++r) idx += static_cast<std::size_t>(11 - 2 * r);
    return idx + static_cast<std::size_t>(j - i);
}

RingTable::RingTable(const GradedGroup& g) {
    dim_.resize(kTopDegree + 1);
    for (int d = 0; d <= kTopDegree; ++d) dim_[static_cast<std::size_t>(d)] = g.dim(d);
    for (int i = 0; i <= 5; ++i)
        for (int j = i; j <= kTopDegree - i; ++j) {
            std::size_t n = static_cast<std::size_t>(g.dim(i)) * static_cast<std::size_t>(g.dim(j));
            blocks_.emplace_back(n, std::vector<std::int64_t>(static_cast<std::size_t>(g.dim(i + j)), 0));
            explicit_.emplace_back(n, 0);
        }
    // the unit acts as the identity; these entries are implicit in input files
    for (int j = 0; j <= kTopDegree; ++j) {
        if (g.free_rank(0) < 1) continue;
        std::size_t blk = block_index(0, j);
        for (int b = 0; b < g.dim(j); ++b) {
            blocks_[blk][static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] = 1;
            explicit_[blk][static_cast<std::size_t>(b)] = 1;
        }
    }
}

void RingTable::set_product(int i, int j, int a, int b, std::vector<std::int64_t> coords) {
    if (i > j || i + j > kTopDegree || i < 0)
        throw DegreeError("ring table entry out of range");
    std::size_t blk = block_index(i, j);
    std::size_t pos = static_cast<std::size_t>(a) * dim_[static_cast<std::size_t>(j)] + static_cast<std::size_t>(b);
    if (static_cast<int>(coords.size()) != dim_[static_cast<std::size_t>(i + j)])
        throw DegreeError("ring table value has wrong length");
    blocks_.at(blk).at(pos) = std::move(coords);
    explicit_.at(blk).at(pos) = 1;
}

bool RingTable::has_explicit(int i, int j, int a, int b) const {
    std::size_t blk = block_index(i, j);
    return explicit_.at(blk).at(static_cast<std::size_t>(a) * dim_[static_cast<std::size_t>(j)] + static_cast<std::size_t>(b)) != 0;
}

const std::vector<std::int64_t>& RingTable::product(int i, int j, int a, int b) const {
    std::size_t blk = block_index(i, j);
    return blocks_.at(blk).at(static_cast<std::size_t>(a) * dim_[static_cast<std::size_t>(j)] + static_cast<std::size_t>(b));
}

void RingTable::fill_symmetric(const GradedGroup& g) {
    for (int i = 1; 2 * i <= kTopDegree; ++i) {
        int n = g.dim(i);
        std::size_t blk = block_index(i, i);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::size_t ab = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
                std::size_t ba = static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a);
                if (explicit_[blk][ab] || !explicit_[blk][ba]) continue;
                std::vector<std::int64_t> v = blocks_[blk][ba];
                if (i % 2 != 0)
                    for (std::int64_t& x : v) x = checked_neg(x);
                reduce_coords(g, 2 * i, v);
                blocks_[blk][ab] = std::move(v);
                explicit_[blk][ab] = 1;
            }
    }
}

Manifold::Manifold(std::string name, GradedGroup groups, RingTable table, CohClass orientation,
                   ManifoldCharData chr, std::vector<BundleCharData> bundles, BasisLabels labels)
    : name_(std::move(name)),
      groups_(std::move(groups)),
      table_(std::move(table)),
      orientation_(std::move(orientation)),
      chr_(std::move(chr)),
      bundles_(std::move(bundles)),
      labels_(std::move(labels)) {
    table_.fill_symmetric(groups_);
    check_degree(orientation_, kTopDegree);
    orientation_ = canonical(orientation_);
    check_degree(chr_.c, 2);
    check_degree(chr_.q1, 4);
    chr_.c = canonical(chr_.c);
    chr_.q1 = canonical(chr_.q1);
    if (chr_.w6.lift) {
        check_degree(*chr_.w6.lift, 6);
        chr_.w6.lift = canonical(*chr_.w6.lift);
    }
    if (chr_.p1) { check_degree(*chr_.p1, 4); chr_.p1 = canonical(*chr_.p1); }
    if (chr_.p2) { check_degree(*chr_.p2, 8); chr_.p2 = canonical(*chr_.p2); }
    for (BundleCharData& xi : bundles_) {
        check_degree(xi.d0, 2);
        check_degree(xi.q1p, 4);
        check_degree(xi.w8lift, 8);
        xi.d0 = canonical(xi.d0);
        xi.q1p = canonical(xi.q1p);
        xi.w8lift = canonical(xi.w8lift);
        if (xi.w6.lift) {
            check_degree(*xi.w6.lift, 6);
            xi.w6.lift = canonical(*xi.w6.lift);
        }
        if (xi.p1) { check_degree(*xi.p1, 4); xi.p1 = canonical(*xi.p1); }
    }
}

const BundleCharData& Manifold::bundle(const std::string& name) const {
    for (const BundleCharData& b : bundles_)
        if (b.name == name) return b;
    throw Error("no bundle named '" + name + "' on " + name_);
}

void Manifold::check_degree(const CohClass& a, int degree) const {
    if (a.degree != degree)
        throw DegreeError("class has degree " + std::to_string(a.degree) + ", expected " + std::to_string(degree));
    if (static_cast<int>(a.coords.size()) != groups_.dim(degree))
        throw DegreeError("coordinate vector has length " + std::to_string(a.coords.size()) +
                          ", expected " + std::to_string(groups_.dim(degree)) +
                          " in degree " + std::to_string(degree));
}

CohClass Manifold::zero(int degree) const {
    return CohClass{degree, std::vector<std::int64_t>(static_cast<std::size_t>(groups_.dim(degree)), 0)};
}

CohClass Manifold::basis_class(int degree, int index) const {
    CohClass r = zero(degree);
    r.coords.at(static_cast<std::size_t>(index)) = 1;
    return r;
}

CohClass Manifold::canonical(CohClass a) const {
    check_degree(a, a.degree);
    reduce_coords(groups_, a.degree, a.coords);
    return a;
}

CohClass Manifold::add(const CohClass& a, const CohClass& b) const {
    if (a.degree != b.degree) throw DegreeError("sum of classes of different degree");
    check_degree(a, a.degree);
    check_degree(b, a.degree);
    CohClass r = a;
    for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] = checked_add(r.coords[k], b.coords[k]);
    return canonical(std::move(r));
}

CohClass Manifold::sub(const CohClass& a, const CohClass& b) const {
    return add(a, scale(-1, b));
}

CohClass Manifold::scale(std::int64_t n, const CohClass& a) const {
    check_degree(a, a.degree);
    CohClass r = a;
    for (std::int64_t& x : r.coords) x = checked_mul(n, x);
    return canonical(std::move(r));
}

CohClass Manifold::cup(const CohClass& a, const CohClass& b) const {
    if (a.degree > b.degree) {
        CohClass r = cup(b, a);
        if (a.degree % 2 != 0 && b.degree % 2 != 0) r = scale(-1, r);
        return r;
    }
    check_degree(a, a.degree);
    check_degree(b, b.degree);
    int i = a.degree, j = b.degree;
    if (i + j > kTopDegree) throw DegreeError("cup product above top degree");
    CohClass r = zero(i + j);
    for (int x = 0; x < groups_.dim(i); ++x) {
        std::int64_t ca = a.coords[static_cast<std::size_t>(x)];
        if (ca == 0) continue;
        for (int y = 0; y < groups_.dim(j); ++y) {
            std::int64_t cb = b.coords[static_cast<std::size_t>(y)];
            if (cb == 0) continue;
            std::int64_t f = checked_mul(ca, cb);
            const std::vector<std::int64_t>& v = table_.product(i, j, x, y);
            for (std::size_t k = 0; k < v.size(); ++k)
                r.coords[k] = checked_add(r.coords[k], checked_mul(f, v[k]));
        }
    }
    return canonical(std::move(r));
}

std::int64_t Manifold::kronecker(const CohClass& top) const {
    check_degree(top, kTopDegree);
    std::int64_t sign = orientation_.coords.empty() ? 0 : orientation_.coords[0];
    if (sign != 1 && sign != -1)
        throw InconsistentInputError("orientation class does not generate the top degree");
    return checked_mul(sign, top.coords.at(0));
}

int Manifold::pair_mod2(std::span<const CohClass> factors) const {
    int total = 0;
    for (const CohClass& f : factors) total += f.degree;
    if (total != kTopDegree || factors.empty())
        throw DegreeError("pairing factors must multiply into the top degree");
    CohClass acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) acc = cup(acc, factors[k]);
    return static_cast<int>(mod_floor(kronecker(acc), 2));
}

int Manifold::pair_mod2(std::initializer_list<CohClass> factors) const {
    std::vector<CohClass> v(factors);
    return pair_mod2(std::span<const CohClass>(v));
}

bool Manifold::is_zero(const CohClass& a) const {
    CohClass c = canonical(a);
    return std::all_of(c.coords.begin(), c.coords.end(), [](std::int64_t x) { return x == 0; });
}

bool Manifold::is_torsion(const CohClass& a) const {
    check_degree(a, a.degree);
    int fr = groups_.free_rank(a.degree);
    for (int k = 0; k < fr; ++k)
        if (a.coords[static_cast<std::size_t>(k)] != 0) return false;
    return true;
}

bool Manifold::rho2_is_zero(const CohClass& a) const {
    CohClass c = canonical(a);
    const GroupLevel& lv = groups_.level(a.degree);
    for (int k = 0; k < lv.free_rank; ++k)
        if (c.coords[static_cast<std::size_t>(k)] % 2 != 0) return false;
    for (std::size_t k = 0; k < lv.torsion.size(); ++k) {
        if (lv.torsion[k] % 2 != 0) continue;  // odd-order torsion dies mod 2
        if (c.coords[static_cast<std::size_t>(lv.free_rank) + k] % 2 != 0) return false;
    }
    return true;
}

std::pair<CohClass, CohClass> Manifold::split_free_torsion(const CohClass& a) const {
    CohClass c = canonical(a);
    CohClass fr = c, tor = c;
    int n = groups_.free_rank(a.degree);
    for (std::size_t k = 0; k < c.coords.size(); ++k) {
        if (static_cast<int>(k) < n) tor.coords[k] = 0;
        else fr.coords[k] = 0;
    }
    return {fr, tor};
}

std::string Manifold::format_class(const CohClass& a) const {
    CohClass c = canonical(a);
    const std::vector<std::string>& names = labels_[static_cast<std::size_t>(a.degree)];
    bool named = static_cast<int>(names.size()) == groups_.dim(a.degree) && !names.empty();
    if (c.coords.empty()) return "0";
    if (!named) {
        std::string s = "[";
        for (std::size_t k = 0; k < c.coords.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(c.coords[k]);
        }
        return s + "]";
    }
    std::string s;
    for (std::size_t k = 0; k < c.coords.size(); ++k) {
        std::int64_t v = c.coords[k];
        if (v == 0) continue;
        if (s.empty()) {
            if (v == -1) s += "-";
            else if (v != 1) s += std::to_string(v) + "*";
        } else {
            s += v < 0 ? " - " : " + ";
            std::int64_t av = v < 0 ? -v : v;
            if (av != 1) s += std::to_string(av) + "*";
        }
        s += names[k];
    }
    return s.empty() ? "0" : s;
}

}  // namespace sacs
