// The involutions i, j of the simple roots, the <ij>-orbits they generate,
// and the free semigroup of dominant weights lambda with
// (w0' lambda - w0 lambda, alpha) = 0 for every alpha in pi'.

#pragma once

#include "iwc/rootsys.hpp"

#include <map>
#include <optional>
#include <vector>

namespace iwc {

struct OrbitDatum {
    std::vector<int> gamma;  // sorted simple-root indices
    Weight d_gamma;          // sum of the fundamental weights over gamma
    Weight delta_gamma;      // w0' d - w0 d
};

/// j(alpha) = -w0(alpha), as a simple-root index.
int involution_j(const RootSystem& rs, int alpha);

/// On pi', i = -w0'. Off pi', i(alpha) = j(alpha) when that leaves pi', and
/// otherwise j (ij)^r (alpha) for the least r leaving pi'. Every step of the
/// iteration applies i only to roots of pi', so the closed form suffices.
int involution_i(const RootSystem& rs, const SimpleSubset& pi_prime, int alpha);

/// <ij>-orbits ordered by their least element.
std::vector<OrbitDatum> orbit_set(const RootSystem& rs, const SimpleSubset& pi_prime);

/// Throws DomainError unless lambda is dominant.
bool is_in_D(const RootSystem& rs, const SimpleSubset& pi_prime, const Weight& lambda);

/// Unique nonnegative-integer coefficients over the orbit generators, or
/// nullopt when lambda is not in the semigroup. Cross-checks against is_in_D
/// and throws InternalError when the two disagree.
std::optional<std::vector<long>> decompose_in_D(const RootSystem& rs, const SimpleSubset& pi_prime,
                                                const std::vector<OrbitDatum>& orbits, const Weight& lambda);

/// Coordinates of the projection of lambda on the weight lattice of the
/// Levi factor, one per element of pi' (in the fundamental weights of r').
std::vector<Rational> levi_projection(const RootSystem& rs, const SimpleSubset& pi_prime, const Weight& lambda);

/// w0' lambda - w0 lambda.
Weight generator_weight(const RootSystem& rs, const SimpleSubset& pi_prime, const Weight& lambda);

struct SemigroupCheck {
    std::size_t tested = 0;
    std::size_t members = 0;
    std::vector<Weight> counterexamples;
};

/// Two-sided check over all dominant weights with deg <= cutoff: membership
/// by the pairing condition agrees with decomposability over the generators,
/// and every such combination of generators passes the pairing test.
SemigroupCheck check_semigroup(const RootSystem& rs, const SimpleSubset& pi_prime, std::int64_t cutoff);

/// Rank of the fundamental-coordinate matrix of the generators.
std::size_t generator_rank(const std::vector<OrbitDatum>& orbits);

}  // namespace iwc
