#include "support.hpp"

#include <numeric>
#include <stdexcept>

#include "sacs/checked.hpp"
#include "sacs/errors.hpp"

namespace sacs::test {

std::mt19937 make_rng(std::uint32_t seed) { return std::mt19937(seed); }

int rand_int(std::mt19937& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

IntMat random_matrix(std::mt19937& g, int rows, int cols, int lo, int hi) {
    IntMat a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a.at(i, j) = rand_int(g, lo, hi);
    return a;
}

UnimodularPair random_unimodular(std::mt19937& g, int n, int ops) {
    UnimodularPair up{IntMat::identity(n), IntMat::identity(n)};
    if (n < 1) return up;
    for (int step = 0; step < ops; ++step) {
        int kind = rand_int(g, 0, n >= 2 ? 2 : 0);
        if (kind == 0) {
            int i = rand_int(g, 0, n - 1);
            up.p.negate_row(i);
            up.pinv.negate_col(i);
        } else if (kind == 1) {
            int i = rand_int(g, 0, n - 1);
            int j = rand_int(g, 0, n - 2);
            if (j >= i) ++j;
            up.p.swap_rows(i, j);
            up.pinv.swap_cols(i, j);
        } else {
            int i = rand_int(g, 0, n - 1);
            int j = rand_int(g, 0, n - 2);
            if (j >= i) ++j;
            int k = rand_int(g, 1, 2) * (rand_int(g, 0, 1) != 0 ? 1 : -1);
            up.p.add_row(i, j, k);
            up.pinv.add_col(j, i, -k);
        }
    }
    return up;
}

namespace {

std::vector<std::vector<int>> combos(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 0) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool small_prime(std::int64_t n) {
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Descending primes just below 2^30; enough of them that their product has
// more than `bits` bits.  Each contributes at least 29.
std::vector<std::int64_t> mod_primes(long bits) {
    std::vector<std::int64_t> out;
    long have = 0;
    for (std::int64_t c = (1LL << 30) - 1; have < bits; c -= 2)
        if (small_prime(c)) {
            out.push_back(c);
            have += 29;
        }
    return out;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

std::vector<std::vector<std::int64_t>> reduce_mod(const IntMat& m, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> w(static_cast<std::size_t>(m.rows()),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (m.at(i, j) % p + p) % p;
    return w;
}

// product of two mod-p matrices, entries in [0, p); p < 2^30 keeps every
// intermediate inside int64
std::vector<std::vector<std::int64_t>> mul_mod(const std::vector<std::vector<std::int64_t>>& a,
                                               const std::vector<std::vector<std::int64_t>>& b,
                                               std::int64_t p) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            std::int64_t x = a[i][t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] = (out[i][j] + x * b[t][j]) % p;
        }
    return out;
}

std::int64_t det_mod(const IntMat& m, std::int64_t p) {
    int n = m.rows();
    auto w = reduce_mod(m, p);
    std::int64_t d = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n && piv < 0; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) piv = i;
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(k)]);
            d = (p - d) % p;
        }
        std::int64_t pk = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        d = d * pk % p;
        std::int64_t inv = powmod(pk, p - 2, p);
        for (int i = k + 1; i < n; ++i) {
            std::int64_t f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * inv % p;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) {
                auto& e = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                e = (e - f * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] % p + p) % p;
            }
        }
    }
    return d;
}

}  // namespace

std::int64_t minor_gcd(const IntMat& a, int k) {
    std::int64_t g = 0;
    for (const auto& rows : combos(a.rows(), k)) {
        for (const auto& cols : combos(a.cols(), k)) {
            IntMat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub.at(i, j) = a.at(rows[static_cast<std::size_t>(i)],
                                        cols[static_cast<std::size_t>(j)]);
            g = std::gcd(g, det(sub));
        }
    }
    return abs64(g);
}

std::vector<std::int64_t> invariant_factors_by_minors(const IntMat& a) {
    int n = std::min(a.rows(), a.cols());
    std::vector<std::int64_t> out;
    std::int64_t prev = 1;
    for (int k = 1; k <= n; ++k) {
        std::int64_t dk = minor_gcd(a, k);
        if (dk == 0) {
            out.resize(static_cast<std::size_t>(n), 0);
            return out;
        }
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

bool is_unimodular(const IntMat& m) {
    if (m.rows() != m.cols()) return false;
    int n = m.rows();
    if (n == 0) return true;
    // Hadamard: |det| < (sqrt(n) * 2^63)^n, so this many bits pin det exactly.
    long bits = 64L * n + 4 * n + 4;
    int sign = 0;
    for (std::int64_t p : mod_primes(bits)) {
        std::int64_t d = det_mod(m, p);
        int s = d == 1 ? 1 : d == p - 1 ? -1 : 0;
        if (s == 0) return false;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

bool product_equals(const IntMat& a, const IntMat& u, const IntMat& d, const IntMat& v) {
    if (u.rows() != a.rows() || u.cols() != d.rows() || d.cols() != v.rows() ||
        v.cols() != a.cols())
        return false;
    // |entry of u*d*v| < n^2 * 2^189 for n x n int64 factors; the prime
    // product exceeds twice that, so residue equality is integer equality.
    long bits = 192 + 16;
    for (std::int64_t p : mod_primes(bits)) {
        auto lhs = mul_mod(reduce_mod(u, p), mul_mod(reduce_mod(d, p), reduce_mod(v, p), p), p);
        if (lhs != reduce_mod(a, p)) return false;
    }
    return true;
}

// ------------------------------------------------------------ basis change

namespace {

std::int64_t mod_inverse(std::int64_t u, std::int64_t t) {
    std::int64_t r0 = t, r1 = u % t, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::logic_error("mod_inverse: not a unit");
    return ((s0 % t) + t) % t;
}

}  // namespace

BasisChange identity_change(const Manifold& m) {
    BasisChange bc;
    for (int d = 0; d <= kTopDegree; ++d) {
        bc.s.push_back(IntMat::identity(m.groups().dim(d)));
        bc.sinv.push_back(IntMat::identity(m.groups().dim(d)));
    }
    return bc;
}

BasisChange random_change(const Manifold& m, std::mt19937& g, int ops_per_degree) {
    BasisChange bc = identity_change(m);
    for (int d = 1; d < kTopDegree; ++d) {  // keep the unit and orientation bases fixed
        const GroupLevel& lv = m.groups().level(d);
        int fr = lv.free_rank;
        int nt = static_cast<int>(lv.torsion.size());
        int dim = fr + nt;
        if (dim == 0) continue;
        IntMat& s = bc.s[static_cast<std::size_t>(d)];
        IntMat& sinv = bc.sinv[static_cast<std::size_t>(d)];
        for (int step = 0; step < ops_per_degree; ++step) {
            switch (rand_int(g, 0, 3)) {
                case 0: {  // negate a basis vector
                    int i = rand_int(g, 0, dim - 1);
                    s.negate_col(i);
                    sinv.negate_row(i);
                    break;
                }
                case 1: {  // swap two free or two same-order torsion vectors
                    std::vector<std::pair<int, int>> ok;
                    for (int i = 0; i < dim; ++i)
                        for (int j = i + 1; j < dim; ++j) {
                            bool both_free = i < fr && j < fr;
                            bool same_order =
                                i >= fr && j >= fr &&
                                lv.torsion[static_cast<std::size_t>(i - fr)] ==
                                    lv.torsion[static_cast<std::size_t>(j - fr)];
                            if (both_free || same_order) ok.push_back({i, j});
                        }
                    if (ok.empty()) break;
                    auto [i, j] = ok[static_cast<std::size_t>(
                        rand_int(g, 0, static_cast<int>(ok.size()) - 1))];
                    s.swap_cols(i, j);
                    sinv.swap_rows(i, j);
                    break;
                }
                case 2: {  // col_j += k * col_i where the mix is legal
                    std::vector<std::pair<int, int>> ok;
                    for (int j = 0; j < dim; ++j)
                        for (int i = 0; i < dim; ++i) {
                            if (i == j) continue;
                            bool free_free = i < fr && j < fr;
                            bool tors_into_free = j < fr && i >= fr;
                            bool same_order =
                                i >= fr && j >= fr &&
                                lv.torsion[static_cast<std::size_t>(i - fr)] ==
                                    lv.torsion[static_cast<std::size_t>(j - fr)];
                            if (free_free || tors_into_free || same_order)
                                ok.push_back({j, i});
                        }
                    if (ok.empty()) break;
                    auto [j, i] = ok[static_cast<std::size_t>(
                        rand_int(g, 0, static_cast<int>(ok.size()) - 1))];
                    int k = rand_int(g, 1, 2) * (rand_int(g, 0, 1) != 0 ? 1 : -1);
                    s.add_col(j, i, k);
                    sinv.add_row(i, j, -k);
                    break;
                }
                default: {  // multiply a torsion vector by a unit
                    std::vector<std::pair<int, std::int64_t>> ok;
                    for (int i = fr; i < dim; ++i) {
                        std::int64_t t = lv.torsion[static_cast<std::size_t>(i - fr)];
                        for (std::int64_t u = 2; u < t; ++u)
                            if (std::gcd(u, t) == 1) ok.push_back({i, u});
                    }
                    if (ok.empty()) break;
                    auto [i, u] = ok[static_cast<std::size_t>(
                        rand_int(g, 0, static_cast<int>(ok.size()) - 1))];
                    std::int64_t t = lv.torsion[static_cast<std::size_t>(i - fr)];
                    std::int64_t uinv = mod_inverse(u, t);
                    for (int r = 0; r < dim; ++r) s.at(r, i) = checked_mul(s.at(r, i), u);
                    for (int c = 0; c < dim; ++c)
                        sinv.at(i, c) = checked_mul(sinv.at(i, c), uinv);
                    break;
                }
            }
        }
    }
    return bc;
}

CohClass transform(const Manifold& m, const BasisChange& bc, const CohClass& a) {
    return m.canonical(
        {a.degree, mul_vec(bc.sinv[static_cast<std::size_t>(a.degree)], a.coords)});
}

namespace {

CohClass column_class(const IntMat& s, int degree, int col) {
    CohClass out{degree, std::vector<std::int64_t>(static_cast<std::size_t>(s.rows()), 0)};
    for (int r = 0; r < s.rows(); ++r) out.coords[static_cast<std::size_t>(r)] = s.at(r, col);
    return out;
}

W6Spec transform_w6(const Manifold& m, const BasisChange& bc, const W6Spec& w) {
    if (!w.liftable()) return W6Spec::nonliftable();
    return W6Spec::with_lift(transform(m, bc, *w.lift));
}

}  // namespace

Manifold apply_change(const Manifold& m, const BasisChange& bc) {
    const GradedGroup& g = m.groups();
    RingTable table(g);
    for (int i = 1; i <= kTopDegree; ++i) {
        for (int j = i; i + j <= kTopDegree; ++j) {
            if (g.dim(i) == 0 || g.dim(j) == 0 || g.dim(i + j) == 0) continue;
            for (int a = 0; a < g.dim(i); ++a) {
                for (int b = 0; b < g.dim(j); ++b) {
                    CohClass u = column_class(bc.s[static_cast<std::size_t>(i)], i, a);
                    CohClass v = column_class(bc.s[static_cast<std::size_t>(j)], j, b);
                    CohClass w = transform(m, bc, m.cup(u, v));
                    table.set_product(i, j, a, b, w.coords);
                }
            }
        }
    }
    ManifoldCharData chr;
    chr.c = transform(m, bc, m.chr().c);
    chr.q1 = transform(m, bc, m.chr().q1);
    chr.w6 = transform_w6(m, bc, m.chr().w6);
    if (m.chr().p1.has_value()) chr.p1 = transform(m, bc, *m.chr().p1);
    if (m.chr().p2.has_value()) chr.p2 = transform(m, bc, *m.chr().p2);
    std::vector<BundleCharData> bundles;
    for (const auto& b : m.bundles()) {
        BundleCharData nb;
        nb.name = b.name;
        nb.d0 = transform(m, bc, b.d0);
        nb.q1p = transform(m, bc, b.q1p);
        nb.w6 = transform_w6(m, bc, b.w6);
        nb.w8lift = transform(m, bc, b.w8lift);
        if (b.p1.has_value()) nb.p1 = transform(m, bc, *b.p1);
        bundles.push_back(std::move(nb));
    }
    CohClass ori = transform(m, bc, m.orientation());
    return Manifold(m.name(), g, std::move(table), std::move(ori), std::move(chr),
                    std::move(bundles), {});
}

// ------------------------------------------------------------ torsion padding

namespace {

CohClass extend_class(const CohClass& a, const GradedGroup& oldg, const GradedGroup& newg) {
    CohClass out = a;
    out.coords.resize(static_cast<std::size_t>(newg.dim(a.degree)), 0);
    (void)oldg;
    return out;
}

}  // namespace

Manifold pad_torsion(const Manifold& m, std::mt19937& g) {
    GradedGroup groups = m.groups();
    const std::pair<int, int> pairs[] = {{4, 7}, {5, 6}, {3, 8}};
    bool padded = false;
    for (auto [dlo, dhi] : pairs) {
        if (rand_int(g, 0, 1) == 0) continue;
        int count = rand_int(g, 1, 2);
        std::vector<std::int64_t>& tlo = groups.level(dlo).torsion;
        std::vector<std::int64_t>& thi = groups.level(dhi).torsion;
        std::int64_t last = tlo.empty() ? 1 : tlo.back();
        for (int k = 0; k < count; ++k) {
            std::int64_t order;
            if (dlo == 3) {
                // degree 3 torsion must stay odd
                std::int64_t base[] = {3, 5, 9};
                order = last == 1 ? base[rand_int(g, 0, 2)] : last * (rand_int(g, 0, 1) != 0 ? 3 : 1);
            } else {
                std::int64_t base[] = {2, 3, 4, 5};
                order = last == 1 ? base[rand_int(g, 0, 3)]
                                  : last * static_cast<std::int64_t>(rand_int(g, 1, 3));
            }
            tlo.push_back(order);
            thi.push_back(order);
            last = order;
        }
        padded = true;
    }
    if (!padded) {
        groups.level(5).torsion.push_back(2);
        groups.level(6).torsion.push_back(2);
    }

    const GradedGroup& oldg = m.groups();
    RingTable table(groups);
    for (int i = 1; i <= kTopDegree; ++i)
        for (int j = i; i + j <= kTopDegree; ++j) {
            if (oldg.dim(i) == 0 || oldg.dim(j) == 0 || groups.dim(i + j) == 0) continue;
            for (int a = 0; a < oldg.dim(i); ++a)
                for (int b = 0; b < oldg.dim(j); ++b) {
                    CohClass w = extend_class(m.cup(m.basis_class(i, a), m.basis_class(j, b)),
                                              oldg, groups);
                    table.set_product(i, j, a, b, w.coords);
                }
        }

    ManifoldCharData chr;
    chr.c = extend_class(m.chr().c, oldg, groups);
    chr.q1 = extend_class(m.chr().q1, oldg, groups);
    chr.w6 = m.chr().w6.liftable()
                 ? W6Spec::with_lift(extend_class(*m.chr().w6.lift, oldg, groups))
                 : W6Spec::nonliftable();
    if (m.chr().p1.has_value()) chr.p1 = extend_class(*m.chr().p1, oldg, groups);
    if (m.chr().p2.has_value()) chr.p2 = extend_class(*m.chr().p2, oldg, groups);
    std::vector<BundleCharData> bundles;
    for (const auto& b : m.bundles()) {
        BundleCharData nb;
        nb.name = b.name;
        nb.d0 = extend_class(b.d0, oldg, groups);
        nb.q1p = extend_class(b.q1p, oldg, groups);
        nb.w6 = b.w6.liftable() ? W6Spec::with_lift(extend_class(*b.w6.lift, oldg, groups))
                                : W6Spec::nonliftable();
        nb.w8lift = extend_class(b.w8lift, oldg, groups);
        if (b.p1.has_value()) nb.p1 = extend_class(*b.p1, oldg, groups);
        bundles.push_back(std::move(nb));
    }
    CohClass ori = extend_class(m.orientation(), oldg, groups);
    return Manifold(m.name(), std::move(groups), std::move(table), std::move(ori),
                    std::move(chr), std::move(bundles), {});
}

}  // namespace sacs::test
