#include "sacs/catalog.hpp"

#include "sacs/errors.hpp"

namespace sacs {
namespace {

// Complex projective 5-space: Z[h]/(h^6), c = 0, q1 = 3h^2.
Manifold make_cp5() {
    GradedGroup g;
    for (int d = 0; d <= kTopDegree; d += 2) g.level(d).free_rank = 1;
    RingTable t(g);
    for (int i = 2; i <= kTopDegree; i += 2)
        for (int j = i; i + j <= kTopDegree; j += 2) t.set_product(i, j, 0, 0, {1});
    BasisLabels labels;
    labels[0] = {"1"};
    labels[2] = {"h"};
    labels[4] = {"h^2"};
    labels[6] = {"h^3"};
    labels[8] = {"h^4"};
    labels[10] = {"h^5"};
    ManifoldCharData chr;
    chr.c = {2, {0}};
    chr.q1 = {4, {3}};
    chr.w6 = W6Spec::with_lift({6, {0}});
    chr.p1 = CohClass{4, {6}};
    chr.p2 = CohClass{8, {15}};
    return Manifold("cp5", g, std::move(t), {kTopDegree, {1}}, std::move(chr), {},
                    std::move(labels));
}

Manifold make_s10() {
    GradedGroup g;
    g.level(0).free_rank = 1;
    g.level(kTopDegree).free_rank = 1;
    RingTable t(g);
    BasisLabels labels;
    labels[0] = {"1"};
    labels[kTopDegree] = {"mu"};
    ManifoldCharData chr;
    chr.c = {2, {}};
    chr.q1 = {4, {}};
    chr.w6 = W6Spec::with_lift({6, {}});
    chr.p1 = CohClass{4, {}};
    chr.p2 = CohClass{8, {}};
    return Manifold("s10", g, std::move(t), {kTopDegree, {1}}, std::move(chr), {},
                    std::move(labels));
}

Manifold make_s4xs6() {
    GradedGroup g;
    g.level(0).free_rank = 1;
    g.level(4).free_rank = 1;
    g.level(6).free_rank = 1;
    g.level(kTopDegree).free_rank = 1;
    RingTable t(g);
    t.set_product(4, 6, 0, 0, {1});  // a*b = mu
    BasisLabels labels;
    labels[0] = {"1"};
    labels[4] = {"a"};
    labels[6] = {"b"};
    labels[kTopDegree] = {"mu"};
    ManifoldCharData chr;
    chr.c = {2, {}};
    chr.q1 = {4, {0}};
    chr.w6 = W6Spec::with_lift({6, {0}});
    chr.p1 = CohClass{4, {0}};
    chr.p2 = CohClass{8, {}};
    return Manifold("s4xs6", g, std::move(t), {kTopDegree, {1}}, std::move(chr), {},
                    std::move(labels));
}

// Product of odd-dimensional spheres; exercises the odd-degree sign rules.
Manifold make_s3xs7() {
    GradedGroup g;
    g.level(0).free_rank = 1;
    g.level(3).free_rank = 1;
    g.level(7).free_rank = 1;
    g.level(kTopDegree).free_rank = 1;
    RingTable t(g);
    t.set_product(3, 7, 0, 0, {1});  // a*b = mu
    BasisLabels labels;
    labels[0] = {"1"};
    labels[3] = {"a"};
    labels[7] = {"b"};
    labels[kTopDegree] = {"mu"};
    ManifoldCharData chr;
    chr.c = {2, {}};
    chr.q1 = {4, {}};
    chr.w6 = W6Spec::with_lift({6, {}});
    chr.p1 = CohClass{4, {}};
    chr.p2 = CohClass{8, {}};
    return Manifold("s3xs7", g, std::move(t), {kTopDegree, {1}}, std::move(chr), {},
                    std::move(labels));
}

// Torsion-free ring with x*x = 2y, tuned so the tangent decision is NO with
// witness x.  Carries two bundles: one that admits a stable complex
// structure and one that does not.
Manifold make_gadget_a() {
    GradedGroup g;
    g.level(0).free_rank = 1;
    g.level(2).free_rank = 1;           // x
    g.level(4).free_rank = 1;           // y
    g.level(6).free_rank = 1;           // y'
    g.level(8).free_rank = 1;           // x'
    g.level(kTopDegree).free_rank = 1;  // mu
    RingTable t(g);
    t.set_product(2, 2, 0, 0, {2});  // x*x = 2y
    t.set_product(2, 4, 0, 0, {1});  // x*y = y'
    t.set_product(2, 6, 0, 0, {2});  // x*y' = 2x'
    t.set_product(2, 8, 0, 0, {1});  // x*x' = mu
    t.set_product(4, 4, 0, 0, {1});  // y*y = x'
    t.set_product(4, 6, 0, 0, {1});  // y*y' = mu
    BasisLabels labels;
    labels[0] = {"1"};
    labels[2] = {"x"};
    labels[4] = {"y"};
    labels[6] = {"y'"};
    labels[8] = {"x'"};
    labels[kTopDegree] = {"mu"};
    ManifoldCharData chr;
    chr.c = {2, {0}};
    chr.q1 = {4, {1}};
    chr.w6 = W6Spec::with_lift({6, {0}});
    chr.p1 = CohClass{4, {2}};
    chr.p2 = CohClass{8, {3}};
    std::vector<BundleCharData> bundles;
    {
        BundleCharData b;
        b.name = "flat-ish";
        b.d0 = {2, {0}};
        b.q1p = {4, {1}};
        b.w6 = W6Spec::with_lift({6, {0}});
        b.w8lift = {8, {0}};
        b.p1 = CohClass{4, {2}};
        bundles.push_back(std::move(b));
    }
    {
        BundleCharData b;
        b.name = "obstructed";
        b.d0 = {2, {0}};
        b.q1p = {4, {0}};
        b.w6 = W6Spec::with_lift({6, {1}});
        b.w8lift = {8, {0}};
        bundles.push_back(std::move(b));
    }
    return Manifold("gadget_a", g, std::move(t), {kTopDegree, {1}}, std::move(chr),
                    std::move(bundles), std::move(labels));
}

// Variant of gadget_a with Z/3 torsion in degrees 4 and 7 and a nonzero
// degree-6 lift; the decision is YES with both sides of each generator
// check equal to the same nonzero bit.
Manifold make_gadget_t() {
    GradedGroup g;
    g.level(0).free_rank = 1;
    g.level(2).free_rank = 1;           // x
    g.level(4) = {1, {3}};              // y, t
    g.level(6).free_rank = 1;           // y'
    g.level(7) = {0, {3}};              // s
    g.level(8).free_rank = 1;           // x'
    g.level(kTopDegree).free_rank = 1;  // mu
    RingTable t(g);
    t.set_product(2, 2, 0, 0, {2, 1});  // x*x = 2y + t
    t.set_product(2, 4, 0, 0, {1});     // x*y = y'
    t.set_product(2, 6, 0, 0, {2});     // x*y' = 2x'
    t.set_product(2, 8, 0, 0, {1});     // x*x' = mu
    t.set_product(4, 4, 0, 0, {1});     // y*y = x'
    t.set_product(4, 6, 0, 0, {1});     // y*y' = mu
    BasisLabels labels;
    labels[0] = {"1"};
    labels[2] = {"x"};
    labels[4] = {"y", "t"};
    labels[6] = {"y'"};
    labels[7] = {"s"};
    labels[8] = {"x'"};
    labels[kTopDegree] = {"mu"};
    ManifoldCharData chr;
    chr.c = {2, {0}};
    chr.q1 = {4, {1, 0}};
    chr.w6 = W6Spec::with_lift({6, {1}});
    chr.p1 = CohClass{4, {2, 1}};
    chr.p2 = CohClass{8, {3}};
    return Manifold("gadget_t", g, std::move(t), {kTopDegree, {1}}, std::move(chr), {},
                    std::move(labels));
}

// Rank two in degree 2: the kernel of the defining map is a proper
// subspace, the squaring operation is nonzero, and the bundle search has
// four twisting candidates.  The tangent decision is NO with witness e1.
Manifold make_gadget_r2() {
    GradedGroup g;
    g.level(0).free_rank = 1;
    g.level(2).free_rank = 2;           // e1, e2
    g.level(4).free_rank = 2;           // y1, y2
    g.level(6).free_rank = 2;           // v1, v2
    g.level(8).free_rank = 2;           // w1, w2
    g.level(kTopDegree).free_rank = 1;  // mu
    RingTable t(g);
    t.set_product(2, 2, 0, 0, {2, 0});  // e1*e1 = 2y1
    t.set_product(2, 2, 1, 1, {0, 1});  // e2*e2 = y2
    t.set_product(2, 4, 0, 0, {1, 0});  // e1*y1 = v1
    t.set_product(2, 4, 1, 1, {0, 1});  // e2*y2 = v2
    t.set_product(2, 6, 0, 0, {2, 0});  // e1*v1 = 2w1
    t.set_product(2, 6, 1, 1, {0, 1});  // e2*v2 = w2
    t.set_product(2, 8, 0, 0, {1});     // e1*w1 = mu
    t.set_product(2, 8, 1, 1, {1});     // e2*w2 = mu
    t.set_product(4, 4, 0, 0, {1, 0});  // y1*y1 = w1
    t.set_product(4, 4, 1, 1, {0, 1});  // y2*y2 = w2
    t.set_product(4, 6, 0, 0, {1});     // y1*v1 = mu
    t.set_product(4, 6, 1, 1, {1});     // y2*v2 = mu
    BasisLabels labels;
    labels[0] = {"1"};
    labels[2] = {"e1", "e2"};
    labels[4] = {"y1", "y2"};
    labels[6] = {"v1", "v2"};
    labels[8] = {"w1", "w2"};
    labels[kTopDegree] = {"mu"};
    ManifoldCharData chr;
    chr.c = {2, {0, 0}};
    chr.q1 = {4, {1, 0}};
    chr.w6 = W6Spec::with_lift({6, {0, 0}});
    chr.p1 = CohClass{4, {2, 0}};
    chr.p2 = CohClass{8, {3, 0}};
    std::vector<BundleCharData> bundles;
    {
        BundleCharData b;
        b.name = "plain";
        b.d0 = {2, {0, 0}};
        b.q1p = {4, {0, 0}};
        b.w6 = W6Spec::with_lift({6, {0, 0}});
        b.w8lift = {8, {0, 0}};
        bundles.push_back(std::move(b));
    }
    {
        // fails at every twisting candidate: the right side of the e1 check
        // is 1 while the obstruction pairing stays even
        BundleCharData b;
        b.name = "misaligned";
        b.d0 = {2, {0, 0}};
        b.q1p = {4, {0, 0}};
        b.w6 = W6Spec::with_lift({6, {1, 0}});
        b.w8lift = {8, {0, 0}};
        bundles.push_back(std::move(b));
    }
    return Manifold("gadget_r2", g, std::move(t), {kTopDegree, {1}}, std::move(chr),
                    std::move(bundles), std::move(labels));
}

}  // namespace

const std::vector<Manifold>& catalog() {
    static const std::vector<Manifold> entries = [] {
        std::vector<Manifold> v;
        v.push_back(make_cp5());
        v.push_back(make_s10());
        v.push_back(make_s4xs6());
        v.push_back(make_s3xs7());
        v.push_back(make_gadget_a());
        v.push_back(make_gadget_t());
        v.push_back(make_gadget_r2());
        return v;
    }();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    names.reserve(catalog().size());
    for (const auto& m : catalog()) names.push_back(m.name());
    return names;
}

const Manifold& catalog_entry(const std::string& name) {
    for (const auto& m : catalog())
        if (m.name() == name) return m;
    throw Error("unknown catalog entry '" + name + "'");
}

}  // namespace sacs
