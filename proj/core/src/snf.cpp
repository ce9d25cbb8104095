#include "sacs/snf.hpp"

#include <algorithm>
#include <utility>

#include "sacs/errors.hpp"

namespace sacs {
namespace {

// The reduction runs in 128-bit arithmetic: the transform matrices can pick
// up entries far beyond 64 bits mid-chain even when the final result fits.
// Overflow still raises rather than wrapping, and results are narrowed back
// to 64 bits on the way out.  When the greedy reduction leaves transforms
// that do not fit, small replacement transforms are constructed directly
// (see construct_small below) before giving up.
using i128 = __int128;

i128 add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

i128 mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

i128 neg128(i128 a) {
    i128 r;
    if (__builtin_sub_overflow(static_cast<i128>(0), a, &r))
        throw OverflowError("integer overflow in negation");
    return r;
}

i128 abs128(i128 x) { return x < 0 ? neg128(x) : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct WMat {
    int rows = 0, cols = 0;
    std::vector<i128> a;

    WMat() = default;
    WMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    static WMat identity(int n) {
        WMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static WMat of(const IntMat& s) {
        WMat m(s.rows(), s.cols());
        for (int i = 0; i < s.rows(); ++i)
            for (int j = 0; j < s.cols(); ++j) m.at(i, j) = s.at(i, j);
        return m;
    }

    i128& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    i128 at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    void add_row(int i, int j, i128 k) {
        for (int c = 0; c < cols; ++c) at(i, c) = add128(at(i, c), mul128(k, at(j, c)));
    }
    void add_col(int i, int j, i128 k) {
        for (int r = 0; r < rows; ++r) at(r, i) = add128(at(r, i), mul128(k, at(r, j)));
    }
    void swap_rows(int i, int j) {
        for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    void negate_row(int i) {
        for (int c = 0; c < cols; ++c) at(i, c) = neg128(at(i, c));
    }
    void negate_col(int j) {
        for (int r = 0; r < rows; ++r) at(r, j) = neg128(at(r, j));
    }
};

IntMat narrow(const WMat& m) {
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    IntMat out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            i128 x = m.at(i, j);
            if (x < lo || x > hi)
                throw OverflowError("Smith normal form entry exceeds 64-bit range");
            out.at(i, j) = static_cast<std::int64_t>(x);
        }
    return out;
}

bool fits64(const WMat& m) {
    for (i128 x : m.a)
        if (x < static_cast<i128>(INT64_MIN) || x > static_cast<i128>(INT64_MAX)) return false;
    return true;
}

// Full workspace: also tracks the inverses of u and v so the solvers get
// them for free.  Invariant maintained throughout: a = u * d * v.
struct Work {
    WMat u, d, v, uinv, vinv;

    void row_add(int i, int j, i128 k) {  // d: row i += k * row j
        d.add_row(i, j, k);
        u.add_col(j, i, neg128(k));
        uinv.add_row(i, j, k);
    }
    void col_add(int i, int j, i128 k) {  // d: col i += k * col j
        d.add_col(i, j, k);
        v.add_row(j, i, neg128(k));
        vinv.add_col(i, j, k);
    }
    void row_swap(int i, int j) {
        d.swap_rows(i, j);
        u.swap_cols(i, j);
        uinv.swap_rows(i, j);
    }
    void col_swap(int i, int j) {
        d.swap_cols(i, j);
        v.swap_rows(i, j);
        vinv.swap_cols(i, j);
    }
    void row_negate(int i) {
        d.negate_row(i);
        u.negate_col(i);
        uinv.negate_row(i);
    }
};

// Quotient with balanced remainder: |a - q*p| <= |p|/2.  Keeps the Euclid
// chains short, which keeps the transform matrices from blowing up.
i128 bal_quot(i128 a, i128 p) {
    i128 q = a / p;
    i128 r = a - q * p;
    i128 ar = r < 0 ? -r : r;
    i128 ap = p < 0 ? -p : p;
    if (ar > ap / 2) q += ((a < 0) == (p < 0)) ? 1 : -1;
    return q;
}

Work snf_work_raw(const IntMat& src) {
    int rows = src.rows(), cols = src.cols();
    Work w{WMat::identity(rows), WMat::of(src), WMat::identity(cols),
           WMat::identity(rows), WMat::identity(cols)};
    int n = rows < cols ? rows : cols;

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the residual submatrix -> pivot
            int pi = -1, pj = -1;
            i128 best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    i128 x = w.d.at(i, j);
                    if (x == 0) continue;
                    i128 ax = x < 0 ? neg128(x) : x;
                    if (pi < 0 || ax < best) { pi = i; pj = j; best = ax; }
                }
            if (pi < 0) { t = n; break; }  // residual is zero, done
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            i128 p = w.d.at(t, t);
            bool again = false;
            for (int i = t + 1; i < rows; ++i) {
                i128 q = bal_quot(w.d.at(i, t), p);
                if (q != 0) w.row_add(i, t, neg128(q));
                if (w.d.at(i, t) != 0) again = true;  // remainder smaller than p
            }
            if (again) continue;
            for (int j = t + 1; j < cols; ++j) {
                i128 q = bal_quot(w.d.at(t, j), p);
                if (q != 0) w.col_add(j, t, neg128(q));
                if (w.d.at(t, j) != 0) again = true;
            }
            if (again) continue;

            // pivot must divide the rest of the submatrix
            for (int i = t + 1; i < rows && !again; ++i)
                for (int j = t + 1; j < cols && !again; ++j)
                    if (w.d.at(i, j) % p != 0) {
                        w.row_add(t, i, 1);
                        again = true;
                    }
            if (!again) break;
        }
        if (t >= n) break;
    }

    for (int t = 0; t < n; ++t)
        if (w.d.at(t, t) < 0) w.row_negate(t);
    return w;
}

// Float128 carries integer dot products exactly well past the magnitudes the
// construction ever sees; it only steers which exact integer column moves to
// try, so a lost bit can at worst cost reduction quality, never correctness.
using f128 = __float128;

i128 f_round(f128 x) {
    const f128 lim = static_cast<f128>(1e30);
    if (x > lim) x = lim;
    if (x < -lim) x = -lim;
    return x >= 0 ? static_cast<i128>(x + static_cast<f128>(0.5))
                  : -static_cast<i128>(-x + static_cast<f128>(0.5));
}

f128 col_norm2(const WMat& u, int k) {
    f128 s = 0;
    for (int i = 0; i < u.rows; ++i) s += static_cast<f128>(u.at(i, k)) * static_cast<f128>(u.at(i, k));
    return s;
}

f128 col_dot2(const WMat& u, int x, int y) {
    f128 s = 0;
    for (int i = 0; i < u.rows; ++i) s += static_cast<f128>(u.at(i, x)) * static_cast<f128>(u.at(i, y));
    return s;
}

f128 max_abs(const WMat& u) {
    f128 m = 0;
    for (const i128& x : u.a) {
        f128 v = x >= 0 ? static_cast<f128>(x) : -static_cast<f128>(x);
        if (v > m) m = v;
    }
    return m;
}

// col t += c * col h, all-or-nothing: false (and no change) on overflow
bool try_add_col(WMat& m, int t, int h, i128 c) {
    std::vector<i128> nc(static_cast<std::size_t>(m.rows));
    try {
        for (int i = 0; i < m.rows; ++i)
            nc[static_cast<std::size_t>(i)] = add128(m.at(i, t), mul128(c, m.at(i, h)));
    } catch (const OverflowError&) {
        return false;
    }
    for (int i = 0; i < m.rows; ++i) m.at(i, t) = nc[static_cast<std::size_t>(i)];
    return true;
}

// Lattice reduction of the columns: exact integer operations guided by
// float128 projections, oversized or overflowing steps skipped.
void plain_lll(WMat& b) {
    int m = b.cols;
    if (m < 2) return;
    const f128 delta = static_cast<f128>(0.99);
    std::vector<std::vector<f128>> mu(static_cast<std::size_t>(m),
                                      std::vector<f128>(static_cast<std::size_t>(m), 0));
    std::vector<f128> bstar(static_cast<std::size_t>(m), 0);
    auto gso = [&]() {
        std::vector<std::vector<f128>> o(static_cast<std::size_t>(m),
                                         std::vector<f128>(static_cast<std::size_t>(b.rows), 0));
        for (int k = 0; k < m; ++k) {
            for (int i = 0; i < b.rows; ++i)
                o[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = static_cast<f128>(b.at(i, k));
            for (int j = 0; j < k; ++j) {
                f128 dot = 0;
                for (int i = 0; i < b.rows; ++i)
                    dot += static_cast<f128>(b.at(i, k)) * o[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                f128 mj = bstar[static_cast<std::size_t>(j)] <= 0 ? static_cast<f128>(0)
                                                                  : dot / bstar[static_cast<std::size_t>(j)];
                mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = mj;
                for (int i = 0; i < b.rows; ++i)
                    o[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] -=
                        mj * o[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            }
            f128 n2 = 0;
            for (int i = 0; i < b.rows; ++i)
                n2 += o[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                      o[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            bstar[static_cast<std::size_t>(k)] = n2;
        }
    };
    WMat best = b;
    f128 best_max = max_abs(b);
    for (int round = 0; round < 96; ++round) {
        bool fired = false;
        gso();
        int k = 1, steps = 0, cap = 512 * m * m;
        while (k < m && steps++ < cap) {
            for (int j = k - 1; j >= 0; --j) {
                i128 c = f_round(mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
                if (c == 0) continue;
                if (!try_add_col(b, k, j, neg128(c))) continue;
                // size reduction leaves the orthogonalization fixed, so the
                // cached coefficients update in place
                for (int j2 = 0; j2 < j; ++j2)
                    mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j2)] -=
                        static_cast<f128>(c) * mu[static_cast<std::size_t>(j)][static_cast<std::size_t>(j2)];
                mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= static_cast<f128>(c);
                fired = true;
            }
            f128 m1 = mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)];
            if (bstar[static_cast<std::size_t>(k)] <
                (delta - m1 * m1) * bstar[static_cast<std::size_t>(k - 1)]) {
                b.swap_cols(k, k - 1);
                fired = true;
                gso();
                k = k > 1 ? k - 1 : 1;
            } else {
                ++k;
            }
        }
        f128 cur = max_abs(b);
        if (cur < best_max) { best = b; best_max = cur; }
        if (!fired) break;
    }
    if (max_abs(b) > best_max) b = best;
}

// Size-reduce col t against col h with the coefficient restricted to
// multiples of s; keep the change only when the norm strictly improves.
bool reduce_step(WMat& m, i128 s, int t, int h) {
    if (s == 0) return false;
    f128 hh = col_norm2(m, h);
    if (hh < static_cast<f128>(0.5)) return false;
    f128 q = col_dot2(m, t, h) / (hh * static_cast<f128>(s));
    if (q > static_cast<f128>(1e25) || q < static_cast<f128>(-1e25)) return false;
    i128 c;
    try {
        c = mul128(f_round(q), s);
    } catch (const OverflowError&) {
        return false;
    }
    if (c == 0) return false;
    f128 before = col_norm2(m, t);
    if (!try_add_col(m, t, h, neg128(c))) return false;
    if (col_norm2(m, t) < before * static_cast<f128>(0.999999)) return true;
    m.add_col(t, h, c);
    return false;
}

// Legal coefficient quantum for adding col h into col t of the right
// inverse, whose column k must stay inside {x : a*x == 0 mod d_k}: kernel
// helpers are free, kernel targets accept only kernel helpers, helpers of a
// deeper or equal class are free, shallower helpers are quantized.  The
// diagonal is a divisibility chain, so classes always compare.
i128 wstep(const std::vector<i128>& e, int t, int h) {
    i128 et = e[static_cast<std::size_t>(t)], eh = e[static_cast<std::size_t>(h)];
    if (eh == 0) return 1;
    if (et == 0) return 0;
    if (eh % et == 0) return 1;
    return et / eh;
}

// Mirror rule for the left transform's columns.
i128 ustep(const std::vector<i128>& e, int t, int h) {
    i128 dt = e[static_cast<std::size_t>(t)], dh = e[static_cast<std::size_t>(h)];
    if (dt == 0) return 1;
    if (dh == 0) return 0;
    if (dt % dh == 0) return 1;
    return dh / dt;
}

void polish(WMat& m, const std::vector<i128>& e, bool wside) {
    for (int pass = 0; pass < 256; ++pass) {
        bool changed = false;
        for (int t = 0; t < m.cols; ++t)
            for (int h = 0; h < m.cols; ++h) {
                if (h == t) continue;
                i128 s = wside ? wstep(e, t, h) : ustep(e, t, h);
                if (s != 0 && reduce_step(m, s, t, h)) changed = true;
            }
        if (!changed) break;
    }
}

// Reduce col t of the left transform by col h, mirroring the move onto the
// right inverse so u*d = a*W stays exact: w_t picks up (c*d_t/d_h)*w_h,
// integral whenever the move is legal; zero-class targets need no mirror.
bool reduce_step_coupled(WMat& U, WMat& W, const std::vector<i128>& e, int t, int h) {
    i128 s = ustep(e, t, h);
    if (s == 0) return false;
    f128 hh = col_norm2(U, h);
    if (hh < static_cast<f128>(0.5)) return false;
    f128 q = col_dot2(U, t, h) / (hh * static_cast<f128>(s));
    if (q > static_cast<f128>(1e25) || q < static_cast<f128>(-1e25)) return false;
    i128 c;
    try {
        c = mul128(f_round(q), s);
    } catch (const OverflowError&) {
        return false;
    }
    if (c == 0) return false;
    i128 cc = 0;
    if (e[static_cast<std::size_t>(t)] != 0) {
        try {
            cc = mul128(c, e[static_cast<std::size_t>(t)]) / e[static_cast<std::size_t>(h)];
        } catch (const OverflowError&) {
            return false;
        }
    }
    f128 before = col_norm2(U, t);
    if (!try_add_col(U, t, h, neg128(c))) return false;
    if (!(col_norm2(U, t) < before * static_cast<f128>(0.999999))) {
        U.add_col(t, h, c);
        return false;
    }
    if (cc != 0 && !try_add_col(W, t, h, neg128(cc))) {
        U.add_col(t, h, c);
        return false;
    }
    return true;
}

void polish_coupled(WMat& U, WMat& W, const std::vector<i128>& e) {
    for (int pass = 0; pass < 256; ++pass) {
        bool changed = false;
        for (int t = 0; t < U.cols; ++t)
            for (int h = 0; h < U.cols; ++h)
                if (h != t && reduce_step_coupled(U, W, e, t, h)) changed = true;
        if (!changed) break;
    }
}

// Fraction-free elimination; the intermediates are minors of m, so they stay
// within 128 bits whenever the inputs came from a well-reduced transform.
i128 det_ff(WMat m) {
    int n = m.rows;
    i128 sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n && piv < 0; ++i)
            if (m.at(i, k) != 0) piv = i;
        if (piv < 0) return 0;
        if (piv != k) { m.swap_rows(piv, k); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = add128(mul128(m.at(i, j), m.at(k, k)),
                                    neg128(mul128(m.at(i, k), m.at(k, j)))) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return n == 0 ? sign : mul128(sign, m.at(n - 1, n - 1));
}

// exact inverse of a unimodular matrix: det * adjugate
WMat unimodular_inverse(const WMat& m) {
    int n = m.rows;
    i128 dt = det_ff(m);
    if (dt != 1 && dt != -1) throw OverflowError("matrix is not unimodular");
    WMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            WMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            i128 cof = det_ff(minor);
            if (((i + j) & 1) != 0) cof = neg128(cof);
            out.at(i, j) = mul128(dt, cof);
        }
    return out;
}

WMat cols_of(const std::vector<std::vector<i128>>& vs, int n) {
    WMat m(n, static_cast<int>(vs.size()));
    for (int j = 0; j < static_cast<int>(vs.size()); ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = vs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
}

// does the set extend to a basis of Z^n?  (all invariant factors 1)
bool primitive_set(const std::vector<std::vector<i128>>& vs, int n) {
    if (vs.empty()) return true;
    Work w = snf_work_raw(narrow(cols_of(vs, n)));
    for (int k = 0; k < static_cast<int>(vs.size()); ++k)
        if (w.d.at(k, k) != 1) return false;
    return true;
}

// columns completing a primitive set to a basis of Z^n
std::vector<std::vector<i128>> complete_basis(const std::vector<std::vector<i128>>& vs, int n) {
    std::vector<std::vector<i128>> out;
    if (vs.empty()) {
        for (int k = 0; k < n; ++k) {
            std::vector<i128> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(k)] = 1;
            out.push_back(e);
        }
        return out;
    }
    int s = static_cast<int>(vs.size());
    Work w = snf_work_raw(narrow(cols_of(vs, n)));
    for (int k = 0; k < s; ++k)
        if (w.d.at(k, k) != 1) throw OverflowError("set is not primitive");
    for (int k = s; k < n; ++k) {
        std::vector<i128> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = w.u.at(i, k);
        out.push_back(c);
    }
    return out;
}

// Build small transforms directly instead of repairing the reduction's.  The
// right inverse W must place column k inside {x : a*x == 0 mod d_k}; bases
// of those lattices are scaled columns of the raw right inverse, and
// unconstrained lattice reduction makes their vectors short regardless of
// how large the raw transforms grew.  Deepest classes pick shortest vectors
// first (kept primitive as a set), kernel columns come from the raw kernel
// block, factor-1 columns from basis completion; then everything is polished
// under the membership-preserving moves.  The left transform follows as
// u_k = a*w_k / d_k on the nonzero classes, completed past the rank, and
// v = W^-1 exactly.  The final product identity is checked entry by entry.
Work construct_small(const Work& raw, const IntMat& src) {
    int rows = src.rows(), cols = src.cols();
    int n = rows < cols ? rows : cols;
    std::vector<i128> dv(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) dv[static_cast<std::size_t>(k)] = raw.d.at(k, k);
    int r = 0;
    while (r < n && dv[static_cast<std::size_t>(r)] != 0) ++r;

    std::vector<i128> values;
    for (int k = 0; k < r; ++k)
        if (dv[static_cast<std::size_t>(k)] > 1) values.push_back(dv[static_cast<std::size_t>(k)]);
    std::sort(values.begin(), values.end(), [](i128 a, i128 b) { return a > b; });
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<std::vector<i128>> slot(static_cast<std::size_t>(cols));
    std::vector<std::vector<i128>> S;

    for (i128 c : values) {
        WMat B(cols, cols);
        for (int j = 0; j < cols; ++j) {
            i128 m = 1;
            if (j < r) m = c / gcd128(c, dv[static_cast<std::size_t>(j)]);
            for (int i = 0; i < cols; ++i) B.at(i, j) = mul128(raw.vinv.at(i, j), m);
        }
        plain_lll(B);
        std::vector<int> ord(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) ord[static_cast<std::size_t>(j)] = j;
        std::sort(ord.begin(), ord.end(),
                  [&](int x, int y) { return col_norm2(B, x) < col_norm2(B, y); });
        std::vector<int> class_idx;
        for (int k = 0; k < r; ++k)
            if (dv[static_cast<std::size_t>(k)] == c) class_idx.push_back(k);
        int got = 0;
        for (int oi = 0; oi < cols && got < static_cast<int>(class_idx.size()); ++oi) {
            std::vector<i128> cand(static_cast<std::size_t>(cols));
            for (int i = 0; i < cols; ++i) cand[static_cast<std::size_t>(i)] = B.at(i, ord[static_cast<std::size_t>(oi)]);
            // a vector of the membership lattice that a annihilates belongs
            // to the kernel block, not to a finite class
            bool in_kernel = true;
            for (int i = 0; i < rows && in_kernel; ++i) {
                i128 s = 0;
                for (int j = 0; j < cols; ++j)
                    s = add128(s, mul128(static_cast<i128>(src.at(i, j)), cand[static_cast<std::size_t>(j)]));
                if (s != 0) in_kernel = false;
            }
            if (in_kernel) continue;
            S.push_back(cand);
            if (primitive_set(S, cols)) {
                slot[static_cast<std::size_t>(class_idx[static_cast<std::size_t>(got)])] = cand;
                ++got;
            } else {
                S.pop_back();
            }
        }
        if (got < static_cast<int>(class_idx.size())) throw OverflowError("class vectors not found");
    }

    if (cols > r) {
        WMat K(cols, cols - r);
        for (int j = r; j < cols; ++j)
            for (int i = 0; i < cols; ++i) K.at(i, j - r) = raw.vinv.at(i, j);
        plain_lll(K);
        std::vector<int> ord(static_cast<std::size_t>(cols - r));
        for (int j = 0; j < cols - r; ++j) ord[static_cast<std::size_t>(j)] = j;
        std::sort(ord.begin(), ord.end(),
                  [&](int x, int y) { return col_norm2(K, x) < col_norm2(K, y); });
        int got = 0;
        for (int oi = 0; oi < cols - r && got < cols - r; ++oi) {
            std::vector<i128> cand(static_cast<std::size_t>(cols));
            for (int i = 0; i < cols; ++i) cand[static_cast<std::size_t>(i)] = K.at(i, ord[static_cast<std::size_t>(oi)]);
            S.push_back(cand);
            if (primitive_set(S, cols)) {
                slot[static_cast<std::size_t>(r + got)] = cand;
                ++got;
            } else {
                S.pop_back();
            }
        }
        if (got < cols - r) throw OverflowError("kernel columns not primitive");
    }

    std::vector<int> ones;
    for (int k = 0; k < r; ++k)
        if (dv[static_cast<std::size_t>(k)] == 1) ones.push_back(k);
    if (static_cast<int>(S.size()) + static_cast<int>(ones.size()) != cols)
        throw OverflowError("column count mismatch");
    if (!ones.empty()) {
        auto comp = complete_basis(S, cols);
        if (static_cast<int>(comp.size()) != static_cast<int>(ones.size()))
            throw OverflowError("completion size mismatch");
        for (int i = 0; i < static_cast<int>(ones.size()); ++i)
            slot[static_cast<std::size_t>(ones[static_cast<std::size_t>(i)])] = comp[static_cast<std::size_t>(i)];
    }

    WMat W(cols, cols);
    for (int k = 0; k < cols; ++k) {
        if (static_cast<int>(slot[static_cast<std::size_t>(k)].size()) != cols)
            throw OverflowError("column missing");
        for (int i = 0; i < cols; ++i) W.at(i, k) = slot[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    std::vector<i128> ew(static_cast<std::size_t>(cols), 0);
    for (int k = 0; k < r; ++k) ew[static_cast<std::size_t>(k)] = dv[static_cast<std::size_t>(k)];
    polish(W, ew, true);

    WMat U(rows, rows);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < rows; ++i) {
            i128 s = 0;
            for (int j = 0; j < cols; ++j)
                s = add128(s, mul128(static_cast<i128>(src.at(i, j)), W.at(j, k)));
            if (s % dv[static_cast<std::size_t>(k)] != 0) throw OverflowError("membership violated");
            U.at(i, k) = s / dv[static_cast<std::size_t>(k)];
        }
    if (rows > r) {
        std::vector<std::vector<i128>> su;
        for (int k = 0; k < r; ++k) {
            std::vector<i128> c(static_cast<std::size_t>(rows));
            for (int i = 0; i < rows; ++i) c[static_cast<std::size_t>(i)] = U.at(i, k);
            su.push_back(c);
        }
        auto comp = complete_basis(su, rows);
        if (static_cast<int>(comp.size()) != rows - r) throw OverflowError("left completion mismatch");
        for (int k = r; k < rows; ++k)
            for (int i = 0; i < rows; ++i)
                U.at(i, k) = comp[static_cast<std::size_t>(k - r)][static_cast<std::size_t>(i)];
    }
    std::vector<i128> eu(static_cast<std::size_t>(rows), 0);
    for (int k = 0; k < r; ++k) eu[static_cast<std::size_t>(k)] = dv[static_cast<std::size_t>(k)];
    polish_coupled(U, W, eu);

    WMat V = unimodular_inverse(W);
    Work out{U, raw.d, V, unimodular_inverse(U), W};

    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            i128 s = 0;
            for (int k = 0; k < r; ++k)
                s = add128(s, mul128(mul128(U.at(i, k), dv[static_cast<std::size_t>(k)]), V.at(k, j)));
            if (s != static_cast<i128>(src.at(i, j))) throw OverflowError("reconstruction failed");
        }
    return out;
}

Work snf_work(const IntMat& src) {
    Work w = snf_work_raw(src);
    if (fits64(w.u) && fits64(w.v)) return w;
    try {
        return construct_small(w, src);
    } catch (const OverflowError&) {
        return w;  // narrowing reports the overflow honestly downstream
    }
}

std::vector<std::int64_t> diag_of(const IntMat& d) {
    int n = d.rows() < d.cols() ? d.rows() : d.cols();
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = d.at(i, i);
    return out;
}

}  // namespace

SnfResult snf(const IntMat& a) {
    Work w = snf_work(a);
    SnfResult r{narrow(w.u), narrow(w.d), narrow(w.v), {}};
    r.diagonal = diag_of(r.d);
    return r;
}

std::optional<std::vector<std::int64_t>> solve_integral(const IntMat& a,
                                                        const std::vector<std::int64_t>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DegreeError("solve_integral shape mismatch");
    Work w = snf_work(a);
    IntMat d = narrow(w.d), uinv = narrow(w.uinv), vinv = narrow(w.vinv);
    std::vector<std::int64_t> y = mul_vec(uinv, b);
    int n = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<std::int64_t> x(static_cast<std::size_t>(a.cols()), 0);
    for (int i = 0; i < a.rows(); ++i) {
        std::int64_t di = i < n ? d.at(i, i) : 0;
        std::int64_t yi = y[static_cast<std::size_t>(i)];
        if (di == 0) {
            if (yi != 0) return std::nullopt;
        } else {
            if (yi % di != 0) return std::nullopt;
            x[static_cast<std::size_t>(i)] = yi / di;
        }
    }
    return mul_vec(vinv, x);
}

std::vector<std::vector<std::int64_t>> kernel_basis(const IntMat& a) {
    Work w = snf_work(a);
    IntMat d = narrow(w.d), vinv = narrow(w.vinv);
    int n = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<std::vector<std::int64_t>> basis;
    for (int j = 0; j < a.cols(); ++j) {
        if (j < n && d.at(j, j) != 0) continue;
        std::vector<std::int64_t> col(static_cast<std::size_t>(a.cols()));
        for (int i = 0; i < a.cols(); ++i) col[static_cast<std::size_t>(i)] = vinv.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace sacs
