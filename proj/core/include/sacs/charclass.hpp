#pragma once

// Characteristic-class algebra: consistency checks tying the input data to
// the Wu relations, spin-class arithmetic, and the degree-6 squaring
// operation recovered from the intersection pairing.

#include <utility>

#include "sacs/manifold.hpp"
#include "sacs/validate.hpp"

namespace sacs {

// Wu-relation consistency of the stored characteristic data:
//   * c * q1 reduces to zero mod 2,
//   * c * u reduces to zero mod 2 when the degree-6 lift u exists,
//   * when p2 is present the halved class q2 with 2*q2 = p2 - q1^2 exists
//     and reduces mod 2 to q1^2 + c^4 (plus terms that vanish under the
//     relations above); an unsolvable halving raises InconsistentInputError.
Report wu_validate(const Manifold& m);

// Spin characteristic classes of a Whitney sum, from the summands.
std::pair<CohClass, CohClass> q_whitney(const Manifold& m, const CohClass& q1a, const CohClass& q2a,
                                        const CohClass& q1b, const CohClass& q2b);

// Degree-8 spin class of a stable difference with matching degree-4 data.
CohClass q_difference_q2(const Manifold& m, const CohClass& q2a, const CohClass& q2b);

// Spin classes of the realification of a complex bundle with the given
// Chern classes.
std::pair<CohClass, CohClass> q_of_complex(const Manifold& m, const CohClass& c2, const CohClass& c4);

// Integral degree-8 representative of Sq^2 applied to the mod-2 reduction
// of a degree-6 class, characterized through the nondegenerate pairing:
// for every degree-2 basis class y,
//   <y . Sq^2(z mod 2)> = <c . y . z> + <y . y . z>  (mod 2).
CohClass sq2_on_h6(const Manifold& m, const CohClass& z);

// The tangent data of m, re-encoded as bundle data (degree-8 lift taken
// from the closed formula w8 = w4^2 + w2^4).
BundleCharData tangent_as_bundle(const Manifold& m);

}  // namespace sacs
