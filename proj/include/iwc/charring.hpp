// Truncated formal characters: finitely supported maps from weights to
// positive integers, cut off at a bound on deg.

#pragma once

#include "iwc/orbits.hpp"
#include "iwc/rootsys.hpp"

#include <map>
#include <optional>
#include <vector>

namespace iwc {

class FormalCharacter {
public:
    FormalCharacter() = default;
    /// deg_coeffs is the deg functional on fundamental coordinates.
    FormalCharacter(Vec deg_coeffs, std::int64_t trunc);

    static FormalCharacter one(const RootSystem& rs, std::int64_t trunc);
    static FormalCharacter monomial(const RootSystem& rs, const Weight& w, std::int64_t trunc, long coeff = 1);

    std::int64_t trunc() const { return trunc_; }
    const Vec& deg_coefficients() const { return deg_; }
    const std::map<Weight, Integer>& coeffs() const { return coeffs_; }

    Rational deg(const Weight& w) const;
    /// Adds c e^w; weights beyond the truncation are dropped.
    void add(const Weight& w, const Integer& c);
    Integer operator[](const Weight& w) const;
    std::size_t support_size() const { return coeffs_.size(); }

    bool operator==(const FormalCharacter& o) const;

private:
    Vec deg_;
    std::int64_t trunc_ = 0;
    std::map<Weight, Integer> coeffs_;
};

/// Convolution product truncated to the smaller bound.
FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b);

/// prod over the orbits of (1 - e^delta)^{-1}, expanded up to deg <= trunc.
FormalCharacter lower_bound_character(const RootSystem& rs, const std::vector<OrbitDatum>& orbits, std::int64_t trunc);

struct CharComparison {
    bool leq = true;
    std::optional<Weight> witness;  // first weight with a(nu) > b(nu)
};

/// Throws DomainError when the truncations differ.
CharComparison char_leq(const FormalCharacter& a, const FormalCharacter& b);

/// Weyl dimension formula.
Integer weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Dominant weights with weyl_dim <= bound, in increasing lexicographic order.
/// Uses that weyl_dim increases in each fundamental coordinate.
std::vector<Weight> dominant_weights_with_dim_at_most(const RootSystem& rs, const Integer& bound);

}  // namespace iwc
