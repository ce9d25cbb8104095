#include "sacs/decide.hpp"

#include "sacs/charclass.hpp"
#include "sacs/checked.hpp"
#include "sacs/errors.hpp"

namespace sacs {
namespace {

// Free degree-4 coordinates of x^2 + c*x, reduced mod 2.
F2Vec defining_image(const Manifold& m, const CohClass& x) {
    CohClass v = m.add(m.cup(x, x), m.cup(m.chr().c, x));
    int n4 = m.groups().free_rank(4);
    F2Vec out(static_cast<std::size_t>(n4));
    for (int k = 0; k < n4; ++k)
        out[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(mod_floor(v.coords[static_cast<std::size_t>(k)], 2));
    return out;
}

}  // namespace

std::string path_name(Path p) {
    switch (p) {
        case Path::main: return "main";
        case Path::w6t: return "w6t";
        case Path::w40: return "w40";
        case Path::h: return "h";
        case Path::bundle: return "bundle";
    }
    return "?";
}

DmSubgroup compute_D(const Manifold& m) {
    int n2 = m.groups().free_rank(2);
    int n4 = m.groups().free_rank(4);
    DmSubgroup out;
    out.defining_map = F2Mat(n4, n2);
    for (int x = 0; x < n2; ++x) {
        F2Vec col = defining_image(m, m.basis_class(2, x));
        for (int r = 0; r < n4; ++r) out.defining_map.at(r, x) = col[static_cast<std::size_t>(r)];
    }
    for (const F2Vec& k : f2_kernel(out.defining_map)) {
        CohClass lift = m.zero(2);
        for (int i = 0; i < n2; ++i) lift.coords[static_cast<std::size_t>(i)] = k[static_cast<std::size_t>(i)];
        out.kernel_lifts.push_back(lift);
        out.generators.push_back(std::move(lift));
    }
    for (int i = 0; i < n2; ++i)
        out.generators.push_back(m.scale(2, m.basis_class(2, i)));
    return out;
}

bool in_D(const Manifold& m, const CohClass& x) {
    if (x.degree != 2) throw DegreeError("membership in D(M) is a degree-2 question");
    F2Vec v = defining_image(m, x);
    for (std::uint8_t b : v)
        if (b) return false;
    return true;
}

ZxSplit split_zx(const Manifold& m, const CohClass& x) {
    if (!in_D(m, x))
        throw NotInDError("class " + m.format_class(x) + " lies outside D(" + m.name() + ")");
    CohClass v = m.add(m.cup(x, x), m.cup(m.chr().c, x));
    auto [fr, tor] = m.split_free_torsion(v);
    CohClass z = m.zero(4);
    for (int k = 0; k < m.groups().free_rank(4); ++k)
        z.coords[static_cast<std::size_t>(k)] = fr.coords[static_cast<std::size_t>(k)] / 2;
    return ZxSplit{z, tor};
}

Verdict decide_tangent(const Manifold& m) {
    const ManifoldCharData& ch = m.chr();
    if (!ch.w6.lift)
        return Verdict{false, Path::main,
                       GateCertificate{"the degree-6 class has no integral lift (nonzero Bockstein)"}};
    const CohClass& u = *ch.w6.lift;
    TableCertificate table;
    for (const CohClass& x : compute_D(m).generators) {
        GeneratorCheck row;
        row.x = x;
        row.lhs = m.pair_mod2({ch.q1, ch.q1, x});
        row.rhs = m.pair_mod2({split_zx(m, x).z, u});
        if (row.lhs != row.rhs)
            return Verdict{false, Path::main, WitnessCertificate{row, std::nullopt}};
        table.rows.push_back(std::move(row));
    }
    return Verdict{true, Path::main, std::move(table)};
}

std::optional<Verdict> decide_w40(const Manifold& m) {
    const ManifoldCharData& ch = m.chr();
    if (!m.rho2_is_zero(ch.q1)) return std::nullopt;
    if (!ch.w6.lift) return std::nullopt;
    for (int z = 0; z < m.groups().dim(4); ++z)
        if (m.pair_mod2({m.basis_class(4, z), *ch.w6.lift}) != 0) return std::nullopt;
    return Verdict{true, Path::w40, TableCertificate{}};
}

bool w6t_applicable(const Manifold& m) {
    const ManifoldCharData& ch = m.chr();
    if (!ch.w6.lift) return false;
    for (int k = 0; k < m.groups().free_rank(6); ++k)
        if (ch.w6.lift->coords[static_cast<std::size_t>(k)] % 2 != 0) return false;
    return true;
}

Verdict membership_w6t(const Manifold& m) {
    if (!w6t_applicable(m))
        throw InapplicablePathError(
            "the degree-6 class is not congruent to a torsion class mod 2 on " + m.name());
    const ManifoldCharData& ch = m.chr();
    int n2 = m.groups().free_rank(2);
    int n6 = m.groups().dim(6);

    // columns: pairing vectors of the squaring images of the degree-6 basis
    F2Mat span(n2, n6);
    for (int i = 0; i < n6; ++i) {
        CohClass s = sq2_on_h6(m, m.basis_class(6, i));
        for (int y = 0; y < n2; ++y)
            span.at(y, i) = static_cast<std::uint8_t>(m.pair_mod2({m.basis_class(2, y), s}));
    }
    F2Vec target(static_cast<std::size_t>(n2));
    for (int y = 0; y < n2; ++y)
        target[static_cast<std::size_t>(y)] =
            static_cast<std::uint8_t>(m.pair_mod2({ch.q1, ch.q1, m.basis_class(2, y)}));

    if (std::optional<F2Vec> comb = f2_solve(span, target)) {
        SpanCertificate cert;
        for (int i = 0; i < n6; ++i)
            if ((*comb)[static_cast<std::size_t>(i)]) cert.combination.push_back(i);
        return Verdict{true, Path::w6t, std::move(cert)};
    }

    // separating functional: orthogonal to every column, not to the target
    F2Mat sys(n6 + 1, n2);
    F2Vec rhs(static_cast<std::size_t>(n6) + 1, 0);
    for (int i = 0; i < n6; ++i)
        for (int y = 0; y < n2; ++y) sys.at(i, y) = span.at(y, i);
    for (int y = 0; y < n2; ++y) sys.at(n6, y) = target[static_cast<std::size_t>(y)];
    rhs[static_cast<std::size_t>(n6)] = 1;
    std::optional<F2Vec> f = f2_solve(sys, rhs);
    if (!f) throw InternalError("membership test failed to produce a separating functional");
    return Verdict{false, Path::w6t, SpanCertificate{{}, *f}};
}

std::optional<Verdict> decide_corollary_h(const Manifold& m) {
    if (m.groups().free_rank(2) != 1 || !m.groups().level(2).torsion.empty()) return std::nullopt;
    if (!m.chr().w6.lift) return std::nullopt;
    CohClass h = m.basis_class(2, 0);
    CohClass h2 = m.cup(h, h);
    bool odd_free = false;
    for (int k = 0; k < m.groups().free_rank(4); ++k)
        if (h2.coords[static_cast<std::size_t>(k)] % 2 != 0) odd_free = true;
    if (!odd_free) return std::nullopt;  // h^2 is congruent to a torsion class mod 2
    return Verdict{true, Path::h, TableCertificate{}};
}

std::int64_t a_pairing(const Manifold& m, const BundleCharData& xi, const CohClass& d, const CohClass& x) {
    CohClass twice_a = m.sub(d, xi.d0);
    CohClass a = m.zero(2);
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        if (twice_a.coords[k] % 2 != 0)
            throw Error("twisting class does not reduce to the bundle's degree-2 class mod 2");
        a.coords[k] = twice_a.coords[k] / 2;
    }
    if (!in_D(m, x))
        throw NotInDError("obstruction pairing evaluated outside D(" + m.name() + ")");
    CohClass q = m.sub(xi.q1p, m.scale(2, m.cup(a, m.add(xi.d0, a))));
    const CohClass& r = m.chr().q1;
    std::int64_t n = m.kronecker(m.cup(m.cup(x, q), m.sub(q, r)));
    if (mod_floor(n, 2) != 0)
        throw IntegralityViolation("obstruction integer " + std::to_string(n) +
                                       " is odd at d = " + m.format_class(d) + ", x = " + m.format_class(x),
                                   n);
    return n / 2;
}

int rhs_bundle(const Manifold& m, const BundleCharData& xi, const CohClass& x, const CohClass& zx) {
    if (!xi.w6.lift)
        throw InapplicablePathError("bundle right side needs an integral degree-6 lift");
    const CohClass& u = *xi.w6.lift;
    const CohClass& c = m.chr().c;
    int total = m.pair_mod2({xi.w8lift, x});
    total += m.pair_mod2({xi.d0, xi.d0, xi.q1p, x});
    total += m.pair_mod2({xi.d0, u, x});
    total += m.pair_mod2({c, xi.q1p, zx});
    total += m.pair_mod2({xi.d0, xi.q1p, zx});
    total += m.pair_mod2({u, zx});
    return total % 2;
}

Verdict decide_bundle(const Manifold& m, const BundleCharData& xi, int search_bound) {
    if (!xi.w6.lift)
        return Verdict{false, Path::bundle,
                       GateCertificate{"the bundle's degree-6 class has no integral lift (nonzero Bockstein)"}};
    int r = m.groups().free_rank(2);
    if (r > search_bound || r >= 63)
        throw SearchBoundError("degree-2 rank " + std::to_string(r) + " exceeds the search bound " +
                               std::to_string(search_bound < 63 ? search_bound : 62));

    DmSubgroup dm = compute_D(m);
    std::vector<ZxSplit> splits;
    std::vector<int> rhs;
    splits.reserve(dm.generators.size());
    for (const CohClass& x : dm.generators) {
        splits.push_back(split_zx(m, x));
        rhs.push_back(rhs_bundle(m, xi, x, splits.back().z));
    }

    SearchCertificate search;
    // lexicographic order over 0/1 coefficient tuples: first basis element
    // most significant
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        CohClass d = xi.d0;
        for (int i = 0; i < r; ++i)
            if ((mask >> (r - 1 - i)) & 1)
                d = m.add(d, m.scale(2, m.basis_class(2, i)));
        bool all_match = true;
        TableCertificate table;
        for (std::size_t g = 0; g < dm.generators.size(); ++g) {
            GeneratorCheck row;
            row.x = dm.generators[g];
            row.lhs = static_cast<int>(mod_floor(a_pairing(m, xi, d, row.x), 2));
            row.rhs = rhs[g];
            if (row.lhs != row.rhs) {
                search.failures.push_back({d, row});
                all_match = false;
                break;
            }
            table.rows.push_back(std::move(row));
        }
        if (all_match) {
            table.d = d;
            return Verdict{true, Path::bundle, std::move(table)};
        }
    }
    return Verdict{false, Path::bundle, std::move(search)};
}

}  // namespace sacs
