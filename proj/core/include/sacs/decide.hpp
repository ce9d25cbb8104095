#pragma once

// The decision procedures: existence of a stable almost complex structure
// on the manifold itself (tangent path plus fast paths) and on a described
// real bundle over it (parity search over twisting classes).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sacs/f2.hpp"
#include "sacs/manifold.hpp"

namespace sacs {

inline constexpr int kDefaultSearchBound = 20;

// The distinguished subgroup D(M) = {x in degree 2 : x^2 + c*x is even
// modulo torsion}.  Generators are lifts of a kernel basis of the defining
// mod-2 map followed by the doubled degree-2 basis.
struct DmSubgroup {
    std::vector<CohClass> generators;
    std::vector<CohClass> kernel_lifts;  // prefix of `generators`
    F2Mat defining_map;                  // free degree-4 coords of x^2 + c*x, mod 2
};

DmSubgroup compute_D(const Manifold& m);
bool in_D(const Manifold& m, const CohClass& x);

// Canonical split x^2 + c*x = 2*z + t: z is half the free part, t the
// torsion part.  Throws NotInDError when x is outside D(M).
struct ZxSplit {
    CohClass z;
    CohClass t;
};
ZxSplit split_zx(const Manifold& m, const CohClass& x);

enum class Path { main, w6t, w40, h, bundle };
std::string path_name(Path p);

struct GeneratorCheck {
    CohClass x;
    int lhs = 0;
    int rhs = 0;
};

// NO because the degree-6 class has no integral lift.
struct GateCertificate {
    std::string reason;
};
// NO with a failing generator (and the twisting class searched, on the
// bundle path).
struct WitnessCertificate {
    GeneratorCheck check;
    std::optional<CohClass> d;
};
// YES with the full per-generator table (and chosen twisting class).
struct TableCertificate {
    std::vector<GeneratorCheck> rows;
    std::optional<CohClass> d;
};
// NO on the bundle path: the first failing generator for every candidate.
struct SearchCertificate {
    struct Failure {
        CohClass d;
        GeneratorCheck witness;
    };
    std::vector<Failure> failures;
};
// Outcome of the torsion-hypothesis membership test: either a combination
// of degree-6 basis classes realizing the target or a separating functional
// over the degree-2 basis.
struct SpanCertificate {
    std::vector<int> combination;
    F2Vec functional;
};

using Certificate =
    std::variant<GateCertificate, WitnessCertificate, TableCertificate, SearchCertificate, SpanCertificate>;

struct Verdict {
    bool yes = false;
    Path path = Path::main;
    Certificate certificate;
};

// Main criterion: NO when the degree-6 class has no lift; otherwise YES
// iff <q1^2 . x> = <z_x . u> mod 2 for every generator x of D(M).
Verdict decide_tangent(const Manifold& m);

// Fast path: applicable when q1 reduces to zero mod 2 and the degree-6
// lift exists and pairs trivially against degree 4; then YES.
std::optional<Verdict> decide_w40(const Manifold& m);

// Fast path under the hypothesis that the degree-6 class is congruent to a
// torsion class mod 2 (checkable: free part of the lift is even): YES iff
// the mod-2 pairing vector of q1^2 lies in the span of the squaring images
// of the degree-6 basis.  Throws InapplicablePathError off-hypothesis.
bool w6t_applicable(const Manifold& m);
Verdict membership_w6t(const Manifold& m);

// Fast path for degree-2 rank one: when the square of the generator is not
// congruent to any torsion class mod 2, the answer is YES.
std::optional<Verdict> decide_corollary_h(const Manifold& m);

// Obstruction integer of the bundle at twisting class d and generator x:
// half of N = <x . q(d) . (q(d) - R)> with q(d) = q1p - 2a(d0 + a),
// d = d0 + 2a, R = q1 of the manifold.  N odd raises IntegralityViolation.
std::int64_t a_pairing(const Manifold& m, const BundleCharData& xi, const CohClass& d, const CohClass& x);

// Mod-2 right side matching the obstruction: six products pairing the
// bundle classes against x and z_x.
int rhs_bundle(const Manifold& m, const BundleCharData& xi, const CohClass& x, const CohClass& zx);

// Bundle criterion: NO when the bundle's degree-6 class has no lift;
// otherwise search d over d0 + 2*(0/1 combinations of the degree-2 basis)
// and answer YES on the lexicographically least d whose parities match for
// every generator.
Verdict decide_bundle(const Manifold& m, const BundleCharData& xi, int search_bound = kDefaultSearchBound);

}  // namespace sacs
