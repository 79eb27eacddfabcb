// Semi-invariants of the symmetric algebra S(p~) under the derived algebra,
// computed block by block in (polynomial degree, weight).
//
// The variables of S(p~) are the p-basis elements in g-basis order. A
// monomial is an exponent vector over these variables; within a block the
// monomials are sorted in decreasing lexicographic order of exponents.

#pragma once

#include "iwc/charring.hpp"
#include "iwc/chevalley.hpp"
#include "iwc/orbits.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace iwc {

using Monomial = std::vector<std::uint8_t>;
using Polynomial = std::map<Monomial, Rational>;

/// Variables of S(p~), their weights, and the bracket of every derived
/// generator with every variable.
class SymmetricAlgebra {
public:
    SymmetricAlgebra(const ParabolicContraction& P, BracketMode mode = BracketMode::Contracted,
                     std::size_t monomial_ceiling = 4'000'000);

    const ParabolicContraction& contraction() const { return *P_; }
    BracketMode mode() const { return mode_; }
    std::size_t num_vars() const { return vars_.size(); }
    int var_basis_index(std::size_t v) const { return vars_[v]; }
    const Root& var_root(std::size_t v) const { return var_root_[v]; }
    const std::vector<int>& generators() const { return gens_; }

    Root monomial_root(const Monomial& m) const;
    Weight monomial_weight(const Monomial& m) const;
    std::string monomial_str(const Monomial& m) const;

    /// Degree-k monomials bucketed by weight (simple-root coordinates).
    const std::map<Root, std::vector<Monomial>>& monomials(int k) const;

    /// ad(g) of the generator with index gi in generators(), as a derivation.
    Polynomial apply(std::size_t gi, const Polynomial& p) const;
    /// Same for a single monomial, with integer coefficients.
    void apply(std::size_t gi, const Monomial& m, std::map<Monomial, Integer>& out) const;

    bool is_semi_invariant(const Polynomial& p) const;

private:
    const ParabolicContraction* P_;
    BracketMode mode_;
    std::size_t ceiling_;
    std::vector<int> vars_;
    std::vector<int> var_of_;  // g-basis index -> variable, or -1
    std::vector<Root> var_root_;
    std::vector<int> gens_;
    // brackets_[gi][v]: [gen, var] as (variable, coefficient) pairs
    std::vector<std::vector<std::vector<std::pair<std::size_t, Integer>>>> brackets_;
    mutable std::map<int, std::map<Root, std::vector<Monomial>>> cache_;
};

struct GradedVectorBlock {
    int degree = 0;
    Weight weight;
    std::vector<Monomial> monomials;

    std::size_t dim() const { return monomials.size(); }
};

GradedVectorBlock enumerate_block(const SymmetricAlgebra& S, int k, const Weight& nu);

struct GeneratorMatrix {
    GradedVectorBlock target;
    SparseMatrix matrix;  // target.dim() x source.dim()
};

/// Matrix of the derivation ad(g) from a block to the block of weight nu + wt(g).
GeneratorMatrix ad_generator_matrix(const SymmetricAlgebra& S, std::size_t gi, const GradedVectorBlock& source);

struct SemiInvariantSpace {
    GradedVectorBlock block;
    std::vector<Vec> basis;  // coordinates over block.monomials

    Polynomial polynomial(std::size_t i) const;
};

/// Semi-invariants of a single block; every basis vector is re-checked
/// against all generators after elimination.
SemiInvariantSpace semi_invariants_block(const SymmetricAlgebra& S, const GradedVectorBlock& block);

/// All nonzero semi-invariant spaces of polynomial degree k, by weight.
std::vector<SemiInvariantSpace> semi_invariants(const SymmetricAlgebra& S, int k);

/// The same computation for the original bracket of p.
std::vector<SemiInvariantSpace> sy_nondegenerate(const ParabolicContraction& P, int k);

struct WeightStatus {
    Weight weight;
    Integer bound;             // coefficient in the lower-bound character
    std::size_t found = 0;     // independent semi-invariants found of this weight
    std::vector<int> degrees;  // polynomial degree of each one found
    int searched_to = -1;      // highest polynomial degree examined
    bool confirmed = false;
};

struct SemiInvariantReport {
    std::int64_t trunc = 0;
    int max_degree = 0;
    std::vector<WeightStatus> rows;  // in lower-bound support order

    bool all_confirmed() const;
};

/// One-sided check of the lower bound: a weight is confirmed once the
/// number of independent semi-invariants found reaches the bound, and the
/// search at that weight stops there. A shortfall only means "not yet found".
SemiInvariantReport verify_lower_bound(const SymmetricAlgebra& S, const std::vector<OrbitDatum>& orbits,
                                       std::int64_t trunc, int max_degree);

struct SyCharacter {
    FormalCharacter chi;
    int max_degree = 0;
    std::vector<Weight> outside;  // weights of semi-invariants not in Q+ (not stored in chi)
};

/// Character of the semi-invariants of polynomial degree <= max_degree,
/// restricted to deg <= trunc.
SyCharacter semi_invariant_character(const SymmetricAlgebra& S, std::int64_t trunc, int max_degree);

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

}  // namespace iwc
