// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// fail.  Everything here is exact arithmetic; no tolerances.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sacs/catalog.hpp"
#include "sacs/charclass.hpp"
#include "sacs/cli.hpp"
#include "sacs/decide.hpp"
#include "sacs/errors.hpp"
#include "sacs/f2.hpp"
#include "sacs/intmat.hpp"
#include "sacs/io.hpp"
#include "sacs/manifold.hpp"
#include "sacs/snf.hpp"
#include "sacs/validate.hpp"
#include "support.hpp"

using namespace sacs;
using nlohmann::json;

namespace {

struct Crit {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

CohClass random_class(const Manifold& m, std::mt19937& g, int degree, int lo = -4, int hi = 4) {
    const GroupLevel& lv = m.groups().level(degree);
    CohClass a{degree, std::vector<std::int64_t>(static_cast<std::size_t>(lv.dim()), 0)};
    for (int i = 0; i < lv.free_rank; ++i) a.coords[static_cast<std::size_t>(i)] = test::rand_int(g, lo, hi);
    for (std::size_t k = 0; k < lv.torsion.size(); ++k)
        a.coords[static_cast<std::size_t>(lv.free_rank) + k] =
            test::rand_int(g, 0, static_cast<int>(lv.torsion[k]) - 1);
    return m.canonical(a);
}

CohClass random_torsion_class(const Manifold& m, std::mt19937& g, int degree, bool odd_only) {
    const GroupLevel& lv = m.groups().level(degree);
    CohClass a{degree, std::vector<std::int64_t>(static_cast<std::size_t>(lv.dim()), 0)};
    for (std::size_t k = 0; k < lv.torsion.size(); ++k) {
        if (odd_only && lv.torsion[k] % 2 == 0) continue;
        a.coords[static_cast<std::size_t>(lv.free_rank) + k] =
            test::rand_int(g, 0, static_cast<int>(lv.torsion[k]) - 1);
    }
    return m.canonical(a);
}

Manifold with_chr(const Manifold& m, ManifoldCharData chr) {
    return Manifold(m.name(), m.groups(), m.table(), m.orientation(), std::move(chr),
                    m.bundles(), m.labels());
}

std::vector<std::pair<int, int>> verdict_bits(const Verdict& v) {
    std::vector<std::pair<int, int>> bits;
    if (const auto* t = std::get_if<TableCertificate>(&v.certificate))
        for (const GeneratorCheck& r : t->rows) bits.emplace_back(r.lhs, r.rhs);
    if (const auto* w = std::get_if<WitnessCertificate>(&v.certificate))
        bits.emplace_back(w->check.lhs, w->check.rhs);
    return bits;
}

// --------------------------------------------------------------- criterion 1

bool crit_catalog_verdicts(std::string& detail) {
    Crit c;
    auto both_paths = [&](const std::string& name, bool want_yes) {
        const Manifold& m = catalog_entry(name);
        Verdict main_v = decide_tangent(m);
        c.expect(main_v.yes == want_yes, name + ": tangent path answer");
        Verdict bundle_v = decide_bundle(m, tangent_as_bundle(m));
        c.expect(bundle_v.yes == main_v.yes, name + ": bundle path disagrees with tangent path");
        return main_v;
    };
    both_paths("cp5", true);
    both_paths("s10", true);

    Verdict s46 = both_paths("s4xs6", true);
    std::optional<Verdict> w40 = decide_w40(catalog_entry("s4xs6"));
    c.expect(w40.has_value(), "s4xs6: vanishing-w4 fast path not applicable");
    if (w40.has_value()) {
        c.expect(w40->yes && w40->path == Path::w40, "s4xs6: fast path answer");
        c.expect(w40->yes == s46.yes, "s4xs6: fast path disagrees with main path");
    }

    Verdict ga = both_paths("gadget_a", false);
    const auto* witness = std::get_if<WitnessCertificate>(&ga.certificate);
    c.expect(witness != nullptr, "gadget_a: NO without witness generator");
    if (witness != nullptr) {
        const Manifold& m = catalog_entry("gadget_a");
        c.expect(in_D(m, witness->check.x), "gadget_a: witness outside the subgroup");
        c.expect(witness->check.lhs != witness->check.rhs, "gadget_a: witness parities agree");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 2

bool crit_duality(std::string& detail) {
    Crit c;
    for (const Manifold& m : catalog()) {
        int n2 = m.groups().free_rank(2);
        int n8 = m.groups().free_rank(8);
        c.expect(n2 == n8, m.name() + ": free ranks in degrees 2 and 8 differ");

        DmSubgroup dm = compute_D(m);
        int dim6 = m.groups().level(6).dim();
        std::vector<CohClass> sq_images;
        for (int e = 0; e < dim6; ++e)
            sq_images.push_back(sq2_on_h6(m, m.basis_class(6, e)));

        // mutual annihilation under the top pairing
        for (const CohClass& x : dm.generators)
            for (const CohClass& s : sq_images)
                c.expect(m.pair_mod2({x, s}) == 0,
                         m.name() + ": a subgroup generator pairs with a squaring image");

        // complementary annihilator dimensions in the degree 2 x 8 pairing
        F2Mat p(static_cast<int>(dm.generators.size()), n2);
        for (std::size_t r = 0; r < dm.generators.size(); ++r)
            for (int j = 0; j < n2; ++j)
                p.at(static_cast<int>(r), j) =
                    static_cast<std::uint8_t>(((dm.generators[r].coords[static_cast<std::size_t>(j)] % 2) + 2) % 2);
        F2Mat q(static_cast<int>(sq_images.size()), n8);
        for (std::size_t r = 0; r < sq_images.size(); ++r)
            for (int j = 0; j < n8; ++j)
                q.at(static_cast<int>(r), j) =
                    static_cast<std::uint8_t>(((sq_images[r].coords[static_cast<std::size_t>(j)] % 2) + 2) % 2);
        c.expect(f2_rank(p) + f2_rank(q) == n2,
                 m.name() + ": annihilator dimensions are not complementary");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 3

bool crit_even_obstruction(std::string& detail) {
    Crit c;
    for (const Manifold& m : catalog()) {
        BundleCharData xi = tangent_as_bundle(m);
        DmSubgroup dm = compute_D(m);
        int r = m.groups().free_rank(2);
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            CohClass a = m.zero(2);
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) a = m.add(a, m.basis_class(2, i));
            CohClass d = m.add(xi.d0, m.scale(2, a));
            for (const CohClass& x : dm.generators) {
                try {
                    std::int64_t A = a_pairing(m, xi, d, x);
                    c.expect(A % 2 == 0, m.name() + ": odd obstruction value " + std::to_string(A) +
                                             " on tangent data");
                } catch (const IntegralityViolation& e) {
                    c.expect(false, m.name() + ": odd obstruction integer N = " + std::to_string(e.n));
                }
            }
        }
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 4

bool crit_square_pairing(std::string& detail) {
    Crit c;
    for (const Manifold& m : catalog()) {
        DmSubgroup dm = compute_D(m);
        int dim2 = m.groups().level(2).dim();
        for (const CohClass& x : dm.generators)
            for (int i = 0; i < dim2; ++i)
                for (int j = 0; j < dim2; ++j) {
                    CohClass a = m.basis_class(2, i);
                    CohClass b = m.basis_class(2, j);
                    c.expect(m.pair_mod2({x, a, a, b, b}) == 0,
                             m.name() + ": <x a^2 b^2> is odd at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                }
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 5

bool crit_invariance(std::string& detail) {
    Crit c;
    const int kTrials = 100;

    // (i) spin class shift c -> c + 2a with q1 -> q1 - 2a(c + a)
    {
        auto g = test::make_rng(501);
        for (const Manifold& m : catalog()) {
            Verdict before = decide_tangent(m);
            for (int trial = 0; trial < kTrials && c.ok; ++trial) {
                CohClass a = random_class(m, g, 2);
                ManifoldCharData chr = m.chr();
                chr.c = m.add(chr.c, m.scale(2, a));
                CohClass shift = m.add(m.cup(a, m.chr().c), m.cup(a, a));
                chr.q1 = m.sub(chr.q1, m.scale(2, shift));
                Manifold n = with_chr(m, std::move(chr));
                c.expect(wu_validate(n).ok(), m.name() + ": shifted spin class fails validation");
                Verdict after = decide_tangent(n);
                c.expect(after.yes == before.yes && after.path == before.path,
                         m.name() + ": verdict changed under spin class shift");
                c.expect(verdict_bits(after) == verdict_bits(before),
                         m.name() + ": parity table changed under spin class shift");
            }
        }
    }

    // (ii) random basis change of the whole ring
    {
        auto g = test::make_rng(502);
        for (const Manifold& m : catalog()) {
            Verdict before = decide_tangent(m);
            auto before_bits = verdict_bits(before);
            std::sort(before_bits.begin(), before_bits.end());
            for (int trial = 0; trial < kTrials && c.ok; ++trial) {
                Manifold n = test::apply_change(m, test::random_change(m, g));
                Verdict after = decide_tangent(n);
                c.expect(after.yes == before.yes && after.path == before.path,
                         m.name() + ": verdict changed under basis change");
                auto after_bits = verdict_bits(after);
                std::sort(after_bits.begin(), after_bits.end());
                c.expect(after_bits == before_bits,
                         m.name() + ": parity multiset changed under basis change");
            }
        }
    }

    // (iii) torsion re-assignment in the z part of the split
    {
        auto g = test::make_rng(503);
        for (const Manifold& m : catalog()) {
            Verdict base = decide_tangent(m);
            for (int trial = 0; trial < kTrials && c.ok; ++trial) {
                Manifold n = test::pad_torsion(m, g);
                Verdict padded = decide_tangent(n);
                c.expect(padded.yes == base.yes && padded.path == base.path,
                         m.name() + ": torsion padding changed the verdict");
                if (!n.chr().w6.liftable()) continue;
                CohClass u = *n.chr().w6.lift;
                DmSubgroup dm = compute_D(n);
                for (const CohClass& x : dm.generators) {
                    ZxSplit s = split_zx(n, x);
                    CohClass tt = random_torsion_class(n, g, 4, false);
                    c.expect(n.pair_mod2({n.add(s.z, tt), u}) == n.pair_mod2({s.z, u}),
                             m.name() + ": right side depends on the torsion half of the split");
                }
            }
        }
    }

    // (iv) degree-6 lift perturbation inside the kernel of mod-2 reduction
    {
        auto g = test::make_rng(504);
        for (const Manifold& m : catalog()) {
            if (!m.chr().w6.liftable()) continue;
            Verdict before = decide_tangent(m);
            std::optional<Verdict> w40_before = decide_w40(m);
            bool w6t_app = w6t_applicable(m);
            std::optional<Verdict> w6t_before =
                w6t_app ? std::optional<Verdict>(membership_w6t(m)) : std::nullopt;
            std::optional<Verdict> h_before = decide_corollary_h(m);
            for (int trial = 0; trial < kTrials && c.ok; ++trial) {
                CohClass b = random_class(m, g, 6);
                CohClass t = random_torsion_class(m, g, 6, true);
                ManifoldCharData chr = m.chr();
                chr.w6 = W6Spec::with_lift(m.add(*chr.w6.lift, m.add(m.scale(2, b), t)));
                Manifold n = with_chr(m, std::move(chr));
                c.expect(wu_validate(n).ok(), m.name() + ": perturbed lift fails validation");
                Verdict after = decide_tangent(n);
                c.expect(after.yes == before.yes && after.path == before.path &&
                             verdict_bits(after) == verdict_bits(before),
                         m.name() + ": verdict changed under lift perturbation");
                std::optional<Verdict> w40_after = decide_w40(n);
                c.expect(w40_after.has_value() == w40_before.has_value() &&
                             (!w40_after.has_value() || w40_after->yes == w40_before->yes),
                         m.name() + ": vanishing-w4 path changed under lift perturbation");
                c.expect(w6t_applicable(n) == w6t_app,
                         m.name() + ": torsion-hypothesis applicability changed");
                if (w6t_app)
                    c.expect(membership_w6t(n).yes == w6t_before->yes,
                             m.name() + ": torsion-hypothesis answer changed");
                std::optional<Verdict> h_after = decide_corollary_h(n);
                c.expect(h_after.has_value() == h_before.has_value() &&
                             (!h_after.has_value() || h_after->yes == h_before->yes),
                         m.name() + ": rank-one path changed under lift perturbation");
            }
        }
    }

    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 6

bool crit_snf(std::string& detail) {
    Crit c;
    auto g = test::make_rng(600);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        int rows = test::rand_int(g, 1, 8);
        int cols = test::rand_int(g, 1, 8);
        IntMat a = test::random_matrix(g, rows, cols, -9, 9);
        SnfResult r = snf(a);
        c.expect(test::product_equals(a, r.u, r.d, r.v), "decomposition identity fails");
        c.expect(test::is_unimodular(r.u), "row transform is not unimodular");
        c.expect(test::is_unimodular(r.v), "column transform is not unimodular");
        for (std::size_t k = 0; k + 1 < r.diagonal.size(); ++k) {
            if (r.diagonal[k] == 0)
                c.expect(r.diagonal[k + 1] == 0, "zero appears before a nonzero invariant factor");
            else
                c.expect(r.diagonal[k + 1] % r.diagonal[k] == 0, "divisibility chain broken");
        }
        for (std::int64_t d : r.diagonal) c.expect(d >= 0, "negative invariant factor");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 7

bool crit_path_coherence(std::string& detail) {
    Crit c;
    auto g = test::make_rng(700);
    auto check_paths = [&](const Manifold& m, const std::string& label) {
        Verdict main_v = decide_tangent(m);
        std::optional<Verdict> w40 = decide_w40(m);
        if (w40.has_value())
            c.expect(w40->yes == main_v.yes, label + ": vanishing-w4 path disagrees");
        if (w6t_applicable(m))
            c.expect(membership_w6t(m).yes == main_v.yes, label + ": torsion-hypothesis path disagrees");
        std::optional<Verdict> h = decide_corollary_h(m);
        if (h.has_value()) c.expect(h->yes == main_v.yes, label + ": rank-one path disagrees");
    };
    for (const Manifold& m : catalog()) {
        check_paths(m, m.name());
        for (int trial = 0; trial < 50 && c.ok; ++trial)
            check_paths(test::pad_torsion(m, g), m.name() + " (torsion mutant)");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------- criterion 8

bool crit_negative_controls(std::string& detail) {
    namespace fs = std::filesystem;
    Crit c;

    json base = json::parse(serialize_manifold(catalog_entry("gadget_a")));
    auto run_json = [&](const json& doc, const std::string& subcmd,
                        const std::vector<std::string>& extra) {
        fs::path p = fs::temp_directory_path() / "sacs_acceptance_control.m10";
        {
            std::ofstream f(p);
            f << doc.dump(2) << "\n";
        }
        std::vector<std::string> args{subcmd, p.string(), "--format", "json"};
        for (const std::string& e : extra) args.push_back(e);
        std::ostringstream out, err;
        int code = run(args, out, err);
        fs::remove(p);
        return std::make_pair(code, json::parse(out.str()));
    };
    auto has_kind = [](const json& doc, const std::string& kind) {
        if (!doc.contains("violations")) return false;
        for (const json& v : doc["violations"])
            if (v["kind"] == kind) return true;
        return false;
    };

    // 1. associativity corruption: x.y = 0
    json doc = base;
    doc["products"][1]["value"] = json::array({0});
    auto [code1, out1] = run_json(doc, "decide", {});
    c.expect(code1 == 2 && out1["error"]["type"] == "validation" && has_kind(out1, "associativity"),
             "associativity corruption not rejected as a validation error");

    // 2. unimodularity corruption: y.y' = 2 mu
    doc = base;
    doc["products"][5]["value"] = json::array({2});
    auto [code2, out2] = run_json(doc, "decide", {});
    c.expect(code2 == 2 && out2["error"]["type"] == "validation" &&
                 has_kind(out2, "unimodular-pairing"),
             "unimodularity corruption not rejected as a validation error");

    // 3. truncated groups array
    doc = base;
    doc["groups"].erase(10);
    auto [code3, out3] = run_json(doc, "decide", {});
    c.expect(code3 == 2 && out3["error"]["type"] == "parse",
             "truncated groups array not rejected as a parse error");

    // 4. degree-2/4 identity violation: c = x makes c.q1 odd
    doc = base;
    doc["char"]["c"] = json::array({1});
    auto [code4, out4] = run_json(doc, "decide", {});
    c.expect(code4 == 2 && out4["error"]["type"] == "validation" && has_kind(out4, "wu-w2w4"),
             "spin class identity violation not rejected as a validation error");

    // 5. odd obstruction integer on a bundle
    doc = base;
    doc["name"] = "gadget_n";
    doc["char"]["q1"] = json::array({0});
    doc["char"]["p1"] = json::array({0});
    doc["char"].erase("p2");
    auto [code5, out5] = run_json(doc, "decide-bundle", {"--bundle", "flat-ish"});
    c.expect(code5 == 3 && out5["error"]["type"] == "integrality" && out5["error"]["n"] == 1,
             "odd obstruction integer not reported as an integrality violation");

    detail = c.detail;
    return c.ok;
}

}  // namespace

int main() {
    struct Row {
        int number;
        const char* title;
        bool (*fn)(std::string&);
    };
    const Row rows[] = {
        {1, "catalog verdicts on both decision paths", crit_catalog_verdicts},
        {2, "subgroup / squaring-image duality with complementary annihilators", crit_duality},
        {3, "even obstruction integers across the tangent search set", crit_even_obstruction},
        {4, "vanishing pairings against squares of the degree-2 basis", crit_square_pairing},
        {5, "verdict invariance under the four documented transformations", crit_invariance},
        {6, "Smith normal form decomposition, unimodularity, divisibility", crit_snf},
        {7, "fast paths agree with the main path wherever applicable", crit_path_coherence},
        {8, "negative controls map to their error classes and exit codes", crit_negative_controls},
    };

    int failures = 0;
    for (const Row& row : rows) {
        std::string detail;
        bool ok = false;
        try {
            ok = row.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        if (ok) {
            std::printf("PASS criterion %d: %s\n", row.number, row.title);
        } else {
            std::printf("FAIL criterion %d: %s (%s)\n", row.number, row.title,
                        detail.empty() ? "no detail" : detail.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
