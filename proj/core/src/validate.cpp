#include "sacs/validate.hpp"

#include <algorithm>
#include <cstdlib>

#include "sacs/f2.hpp"
#include "sacs/intmat.hpp"

namespace sacs {
namespace {

std::string basis_name(const Manifold& m, int degree, int index) {
    const std::vector<std::string>& names = m.labels()[static_cast<std::size_t>(degree)];
    if (index < static_cast<int>(names.size())) return names[static_cast<std::size_t>(index)];
    return "e" + std::to_string(degree) + "_" + std::to_string(index);
}

std::string pair_where(const Manifold& m, int i, int j, int a, int b) {
    return "deg (" + std::to_string(i) + "," + std::to_string(j) + ") basis (" +
           basis_name(m, i, a) + "," + basis_name(m, j, b) + ")";
}

}  // namespace

Report validate_hypotheses(const Manifold& m) {
    Report rep;
    const GradedGroup& g = m.groups();
    if (g.free_rank(0) != 1 || !g.level(0).torsion.empty())
        rep.add("hypothesis", "degree 0", "degree 0 must be Z");
    if (g.dim(1) != 0) rep.add("hypothesis", "degree 1", "first cohomology must vanish");
    if (!g.level(2).torsion.empty())
        rep.add("hypothesis", "degree 2", "degree 2 must be torsion-free");
    for (std::int64_t t : g.level(3).torsion)
        if (t % 2 == 0)
            rep.add("hypothesis", "degree 3", "degree 3 torsion must have odd order, found " + std::to_string(t));
    if (g.dim(9) != 0) rep.add("hypothesis", "degree 9", "degree 9 must vanish");
    if (g.free_rank(10) != 1 || !g.level(10).torsion.empty())
        rep.add("hypothesis", "degree 10", "top degree must be Z");
    for (int d = 0; d <= kTopDegree; ++d) {
        const std::vector<std::int64_t>& tor = g.level(d).torsion;
        for (std::size_t k = 0; k < tor.size(); ++k) {
            if (tor[k] < 2)
                rep.add("torsion-presentation", "degree " + std::to_string(d),
                        "torsion coefficient " + std::to_string(tor[k]) + " is below 2");
            else if (k > 0 && tor[k] % tor[k - 1] != 0)
                rep.add("torsion-presentation", "degree " + std::to_string(d),
                        std::to_string(tor[k - 1]) + " does not divide " + std::to_string(tor[k]));
        }
    }
    if (g.free_rank(10) == 1 && g.level(10).torsion.empty()) {
        std::int64_t s = m.orientation().coords.empty() ? 0 : m.orientation().coords[0];
        if (s != 1 && s != -1)
            rep.add("orientation", "degree 10", "orientation class must be a generator, coordinate is " + std::to_string(s));
    }
    return rep;
}

Report validate_ring(const Manifold& m) {
    Report rep;
    const GradedGroup& g = m.groups();

    // unit law
    if (g.free_rank(0) == 1 && g.level(0).torsion.empty()) {
        CohClass one = m.basis_class(0, 0);
        for (int d = 0; d <= kTopDegree; ++d)
            for (int b = 0; b < g.dim(d); ++b) {
                CohClass e = m.basis_class(d, b);
                if (m.cup(one, e) != e)
                    rep.add("unit-law", pair_where(m, 0, d, 0, b), "product with the unit is not the identity");
            }
    }

    // graded commutativity within equal-degree blocks (cross-degree order
    // is handled structurally by cup)
    for (int i = 1; 2 * i <= kTopDegree; ++i) {
        int n = g.dim(i);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                CohClass ab = m.canonical(CohClass{2 * i, m.table().product(i, i, a, b)});
                CohClass ba = m.canonical(CohClass{2 * i, m.table().product(i, i, b, a)});
                if (i % 2 == 0) {
                    if (ab != ba)
                        rep.add("commutativity", pair_where(m, i, i, a, b),
                                "even-degree products must be symmetric");
                } else if (a == b) {
                    if (!m.is_zero(m.scale(2, ab)))
                        rep.add("commutativity", pair_where(m, i, i, a, b),
                                "square of an odd-degree class must be killed by 2");
                } else if (ab != m.scale(-1, ba)) {
                    rep.add("commutativity", pair_where(m, i, i, a, b),
                            "odd-degree products must be antisymmetric");
                }
            }
    }

    // products must respect torsion orders, otherwise bilinear extension
    // over reduced coordinates is ill-defined
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= kTopDegree - i; ++j)
            for (int a = 0; a < g.dim(i); ++a)
                for (int b = 0; b < g.dim(j); ++b) {
                    CohClass v = m.canonical(CohClass{i + j, m.table().product(i, j, a, b)});
                    std::int64_t oa = a >= g.free_rank(i)
                                          ? g.level(i).torsion[static_cast<std::size_t>(a - g.free_rank(i))] : 0;
                    std::int64_t ob = b >= g.free_rank(j)
                                          ? g.level(j).torsion[static_cast<std::size_t>(b - g.free_rank(j))] : 0;
                    for (std::int64_t o : {oa, ob})
                        if (o != 0 && !m.is_zero(m.scale(o, v))) {
                            rep.add("torsion-order", pair_where(m, i, j, a, b),
                                    "product of a class of order " + std::to_string(o) +
                                    " is not killed by that order");
                            break;
                        }
                }

    // associativity over all basis triples in range
    for (int i = 1; i <= kTopDegree; ++i)
        for (int j = 1; i + j <= kTopDegree; ++j)
            for (int k = 1; i + j + k <= kTopDegree; ++k)
                for (int a = 0; a < g.dim(i); ++a)
                    for (int b = 0; b < g.dim(j); ++b)
                        for (int c = 0; c < g.dim(k); ++c) {
                            CohClass ea = m.basis_class(i, a);
                            CohClass eb = m.basis_class(j, b);
                            CohClass ec = m.basis_class(k, c);
                            if (m.cup(m.cup(ea, eb), ec) != m.cup(ea, m.cup(eb, ec)))
                                rep.add("associativity",
                                        "deg (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ") basis (" + basis_name(m, i, a) + "," +
                                            basis_name(m, j, b) + "," + basis_name(m, k, c) + ")",
                                        "(a*b)*c differs from a*(b*c)");
                        }
    return rep;
}

Report validate_pd(const Manifold& m) {
    Report rep;
    const GradedGroup& g = m.groups();

    for (int i = 0; i <= 5; ++i)
        if (g.free_rank(i) != g.free_rank(kTopDegree - i))
            rep.add("rank-symmetry", "degrees " + std::to_string(i) + "/" + std::to_string(kTopDegree - i),
                    "free ranks " + std::to_string(g.free_rank(i)) + " vs " +
                        std::to_string(g.free_rank(kTopDegree - i)));

    for (int i = 1; i <= 5; ++i) {
        std::vector<std::int64_t> a = g.level(i).torsion;
        std::vector<std::int64_t> b = g.level(kTopDegree + 1 - i).torsion;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            rep.add("torsion-duality", "degrees " + std::to_string(i) + "/" + std::to_string(kTopDegree + 1 - i),
                    "torsion multisets differ");
    }

    // unimodularity of the free-part intersection pairing
    for (int i = 0; i <= 5; ++i) {
        int j = kTopDegree - i;
        if (g.free_rank(i) != g.free_rank(j)) continue;  // already reported
        int n = g.free_rank(i);
        IntMat p(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                p.at(a, b) = m.kronecker(m.cup(m.basis_class(i, a), m.basis_class(j, b)));
        std::int64_t dd = det(p);
        if (dd != 1 && dd != -1)
            rep.add("unimodular-pairing", "degrees " + std::to_string(i) + "/" + std::to_string(j),
                    "free intersection pairing has determinant " + std::to_string(dd));
    }

    // the mod-2 pairing between degrees 2 and 8 must be nondegenerate
    if (g.free_rank(2) == g.free_rank(8)) {
        int n = g.free_rank(2);
        F2Mat q(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                q.at(a, b) = static_cast<std::uint8_t>(m.pair_mod2({m.basis_class(2, a), m.basis_class(8, b)}));
        if (f2_rank(q) != n)
            rep.add("mod2-pairing", "degrees 2/8", "mod-2 pairing between degrees 2 and 8 is degenerate");
    }
    return rep;
}

}  // namespace sacs
