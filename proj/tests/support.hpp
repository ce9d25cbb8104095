#pragma once

// Shared helpers for the test binaries: deterministic randomness, matrix
// generators, an independent invariant-factor oracle, graded basis changes,
// and torsion-padded manifold mutants.

#include <cstdint>
#include <random>
#include <vector>

#include "sacs/intmat.hpp"
#include "sacs/manifold.hpp"

namespace sacs::test {

std::mt19937 make_rng(std::uint32_t seed);

int rand_int(std::mt19937& g, int lo, int hi);

IntMat random_matrix(std::mt19937& g, int rows, int cols, int lo = -9, int hi = 9);

// Random unimodular matrix built from elementary row operations, with the
// exact inverse maintained alongside.
struct UnimodularPair {
    IntMat p;
    IntMat pinv;
};
UnimodularPair random_unimodular(std::mt19937& g, int n, int ops = 12);

// gcd of all k x k minors (0 when they all vanish).  Exponential in k; for
// oracle use on small matrices only.
std::int64_t minor_gcd(const IntMat& a, int k);

// Invariant factors d1 | d2 | ... derived from minor gcd quotients, padded
// with zeros to min(rows, cols) entries.  Independent of the Smith normal
// form routine under test.
std::vector<std::int64_t> invariant_factors_by_minors(const IntMat& a);

// True iff det(m) = +-1, decided exactly: the determinant is computed modulo
// enough ~2^30 primes that their product exceeds twice the Hadamard bound,
// so the residues pin the integer value.  Never overflows, whatever the
// entries -- unimodular transforms accumulate entries near the 64-bit edge.
bool is_unimodular(const IntMat& m);

// True iff u * d * v == a, decided the same modular way.  Exact for any
// 64-bit matrices; a direct product would overflow even 128-bit integers.
bool product_equals(const IntMat& a, const IntMat& u, const IntMat& d, const IntMat& v);

// Degree-preserving change of basis respecting the torsion decomposition:
// per degree, new basis vectors as integer combinations of the old
// (columns of s), with sinv undoing it (exactly on free rows, modulo the
// torsion orders on torsion rows).
struct BasisChange {
    std::vector<IntMat> s;     // one per degree 0..10
    std::vector<IntMat> sinv;
};

BasisChange identity_change(const Manifold& m);
BasisChange random_change(const Manifold& m, std::mt19937& g, int ops_per_degree = 6);

// Coordinates of a (given in the old basis) over the new basis.
CohClass transform(const Manifold& m, const BasisChange& bc, const CohClass& a);

// Rebuild the manifold over the new basis: transported structure
// constants, characteristic classes, orientation, and bundles.  Labels are
// dropped (the new basis has no names).
Manifold apply_change(const Manifold& m, const BasisChange& bc);

// Random valid mutant: extra torsion summands padded into dual degree
// pairs (4,7), (5,6), (3,8) with zero products.  Preserves validity and
// every decision.
Manifold pad_torsion(const Manifold& m, std::mt19937& g);

}  // namespace sacs::test
