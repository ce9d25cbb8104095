#include "sacs/charclass.hpp"

#include "sacs/checked.hpp"
#include "sacs/errors.hpp"
#include "sacs/f2.hpp"

namespace sacs {
namespace {

// Solve 2*x = v coordinate-wise in the graded group.  The free part needs
// even coordinates; a torsion coordinate of order m needs gcd(2, m) | v.
std::optional<CohClass> halve(const Manifold& m, const CohClass& v) {
    CohClass c = m.canonical(v);
    const GroupLevel& lv = m.groups().level(v.degree);
    CohClass out = m.zero(v.degree);
    for (int k = 0; k < lv.free_rank; ++k) {
        std::int64_t x = c.coords[static_cast<std::size_t>(k)];
        if (x % 2 != 0) return std::nullopt;
        out.coords[static_cast<std::size_t>(k)] = x / 2;
    }
    for (std::size_t t = 0; t < lv.torsion.size(); ++t) {
        std::size_t k = static_cast<std::size_t>(lv.free_rank) + t;
        std::int64_t ord = lv.torsion[t];
        std::int64_t x = c.coords[k];
        if (ord % 2 == 0) {
            if (x % 2 != 0) return std::nullopt;
            out.coords[k] = x / 2;
        } else {
            // 2 is invertible mod an odd order
            std::int64_t inv2 = (ord + 1) / 2;
            out.coords[k] = mod_floor(checked_mul(inv2, x), ord);
        }
    }
    return out;
}

}  // namespace

Report wu_validate(const Manifold& m) {
    Report rep;
    const ManifoldCharData& ch = m.chr();

    if (!m.rho2_is_zero(m.cup(ch.c, ch.q1)))
        rep.add("wu-w2w4", "c * q1", "c * q1 must reduce to zero mod 2");

    if (ch.w6.lift && !m.rho2_is_zero(m.cup(ch.c, *ch.w6.lift)))
        rep.add("wu-w2w6", "c * w6 lift", "c * (degree-6 lift) must reduce to zero mod 2");

    if (ch.p1) {
        // p1 = c^2 + 2*q1 up to odd torsion
        CohClass diff = m.sub(*ch.p1, m.add(m.cup(ch.c, ch.c), m.scale(2, ch.q1)));
        auto [fr, tor] = m.split_free_torsion(diff);
        bool odd_torsion_only = m.is_zero(fr);
        if (odd_torsion_only) {
            const GroupLevel& lv = m.groups().level(4);
            for (std::size_t t = 0; t < lv.torsion.size(); ++t)
                if (lv.torsion[t] % 2 == 0 &&
                    tor.coords[static_cast<std::size_t>(lv.free_rank) + t] != 0)
                    odd_torsion_only = false;
        }
        if (!odd_torsion_only)
            rep.add("p1-consistency", "p1", "p1 - c^2 - 2*q1 must be torsion of odd order");
    }

    if (ch.p2) {
        CohClass rhs = m.sub(*ch.p2, m.cup(ch.q1, ch.q1));
        std::optional<CohClass> q2 = halve(m, rhs);
        if (!q2)
            throw InconsistentInputError("p2 - q1^2 has no half in degree 8; no admissible q2 exists");
        // target for q2 mod 2: q1^2 + c^4 plus stabilization terms c^2*q1
        // and c*u, each of which vanishes under the Wu relations
        CohClass c2 = m.cup(ch.c, ch.c);
        CohClass target = m.add(m.cup(ch.q1, ch.q1), m.cup(c2, c2));
        target = m.add(target, m.cup(c2, ch.q1));
        if (ch.w6.lift) target = m.add(target, m.cup(ch.c, *ch.w6.lift));
        if (!m.rho2_is_zero(m.sub(*q2, target)))
            rep.add("wu-w8", "q2", "the half of p2 - q1^2 does not reduce to w4^2 + w2^4");
    }
    return rep;
}

std::pair<CohClass, CohClass> q_whitney(const Manifold& m, const CohClass& q1a, const CohClass& q2a,
                                        const CohClass& q1b, const CohClass& q2b) {
    CohClass q1 = m.add(q1a, q1b);
    CohClass q2 = m.add(m.add(q2a, q2b), m.cup(q1a, q1b));
    return {q1, q2};
}

CohClass q_difference_q2(const Manifold& m, const CohClass& q2a, const CohClass& q2b) {
    return m.sub(q2a, q2b);
}

std::pair<CohClass, CohClass> q_of_complex(const Manifold& m, const CohClass& c2, const CohClass& c4) {
    return {m.scale(-1, c2), m.canonical(c4)};
}

CohClass sq2_on_h6(const Manifold& m, const CohClass& z) {
    if (z.degree != 6) throw DegreeError("sq2_on_h6 expects a degree-6 class");
    const CohClass& c = m.chr().c;
    int n2 = m.groups().free_rank(2);
    int n8 = m.groups().free_rank(8);
    F2Mat p(n2, n8);
    F2Vec rhs(static_cast<std::size_t>(n2), 0);
    for (int y = 0; y < n2; ++y) {
        CohClass ey = m.basis_class(2, y);
        for (int b = 0; b < n8; ++b)
            p.at(y, b) = static_cast<std::uint8_t>(m.pair_mod2({ey, m.basis_class(8, b)}));
        rhs[static_cast<std::size_t>(y)] =
            static_cast<std::uint8_t>((m.pair_mod2({c, ey, z}) + m.pair_mod2({ey, ey, z})) % 2);
    }
    std::optional<F2Vec> sol = f2_solve(p, rhs);
    if (!sol)
        throw InternalError("degree 2/8 pairing failed to determine the squaring operation; "
                            "input escaped duality validation");
    CohClass out = m.zero(8);
    for (int b = 0; b < n8; ++b) out.coords[static_cast<std::size_t>(b)] = (*sol)[static_cast<std::size_t>(b)];
    return out;
}

BundleCharData tangent_as_bundle(const Manifold& m) {
    const ManifoldCharData& ch = m.chr();
    CohClass c2 = m.cup(ch.c, ch.c);
    // w8 of the tangent bundle lifts to q1^2 + c^4
    CohClass w8 = m.add(m.cup(ch.q1, ch.q1), m.cup(c2, c2));
    return BundleCharData{"tangent", ch.c, ch.q1, ch.w6, w8, ch.p1};
}

}  // namespace sacs
