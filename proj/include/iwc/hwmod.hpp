// Irreducible highest-weight modules, the filtration of V(lambda) by powers
// of m^- applied to V'(lambda), and the invariant count in V''(lambda)* (x) V'(lambda).
//
// V(lambda) is built weight by weight from the top. V(lambda)_mu is spanned by
// the vectors f_i b with b in V(lambda)_{mu + alpha_i}. Their contravariant Gram
// matrix is computed from the already-built higher weight spaces via
// <f_i b, f_j b'> = <b, e_i f_j b'>. A basis is chosen among the pivot rows,
// and f_i is then read off by solving against that basis.

#pragma once

#include "iwc/chevalley.hpp"
#include "iwc/rootsys.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace iwc {

using PBWMonomial = std::vector<std::uint8_t>;  // exponents of x_{-beta}, beta in root order

/// Verma module M(lambda) on ordered PBW monomials in the negative root vectors.
class VermaModule {
public:
    VermaModule(std::shared_ptr<const LieAlgebraBasis> g, Weight lambda);

    using Vector = std::map<PBWMonomial, Rational>;

    Weight weight(const PBWMonomial& m) const;
    /// All monomials of weight mu, in decreasing lexicographic order.
    std::vector<PBWMonomial> monomials(const Weight& mu) const;
    /// Basis element a of g acting on a monomial.
    Vector act(int a, const PBWMonomial& m) const;
    /// Contravariant form, <v_lambda, v_lambda> = 1.
    Rational form(const PBWMonomial& a, const PBWMonomial& b) const;

private:
    Vector mul_negative(std::size_t j, const PBWMonomial& m) const;

    std::shared_ptr<const LieAlgebraBasis> g_;
    Weight lambda_;
    mutable std::map<std::pair<int, PBWMonomial>, Vector> act_memo_;
    mutable std::map<std::pair<std::size_t, PBWMonomial>, Vector> mul_memo_;
    mutable std::map<std::pair<PBWMonomial, PBWMonomial>, Rational> form_memo_;
};

/// Gram matrix of the contravariant form on M(lambda)_mu. Throws ResourceError
/// when lambda - mu has height above max_height and DomainError when mu is not
/// below lambda.
Matrix verma_gram(std::shared_ptr<const LieAlgebraBasis> g, const Weight& lambda, const Weight& mu,
                  int max_height = 12);

struct WeightModule {
    std::shared_ptr<const LieAlgebraBasis> g;
    Weight highest;
    std::vector<Weight> weights;  // top-down
    std::map<Weight, int> index;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::vector<Matrix> gram;            // contravariant form on each weight space
    std::vector<SparseMatrix> action;    // every g-basis element on the flat basis
    // blocks[a][w]: action of basis element a from weight space w to the
    // weight space of weights[w] + wt(a); 0 x 0 when that weight is absent.
    std::vector<std::vector<Matrix>> blocks;

    std::size_t dim() const { return offsets.empty() ? 0 : offsets.back() + dims.back(); }
    int weight_index(const Weight& w) const;
    /// Weight-space index reached by applying basis element a to weight space w, or -1.
    int target(int a, int w) const;
    /// Index of the one-dimensional lowest weight space.
    int lowest() const;
};

/// Throws ResourceError when weyl_dim(lambda) exceeds the ceiling and
/// InternalError when the result fails the dimension or relation checks.
WeightModule build_irreducible(std::shared_ptr<const LieAlgebraBasis> g, const Weight& lambda,
                               std::size_t dim_ceiling = 300);

/// [e_i, f_j] = delta_ij h_i and [h_i, e_j] = A_ij e_j on the module; returns failures.
std::size_t check_module_relations(const WeightModule& M);

/// A subspace of a module that is a sum of its intersections with weight spaces.
struct WeightedSubspace {
    std::vector<Subspace> parts;  // one per weight space, in local coordinates

    std::size_t dim() const;
    std::size_t dim_at(std::size_t w) const { return parts[w].dim(); }
    bool operator==(const WeightedSubspace& o) const { return parts == o.parts; }
    bool contains(const WeightedSubspace& o) const;
};

WeightedSubspace zero_subspace(const WeightModule& M);
WeightedSubspace whole_module(const WeightModule& M);
/// The sum of the images of a weighted subspace under the given basis elements.
WeightedSubspace image(const WeightModule& M, const std::vector<int>& ops, const WeightedSubspace& S);
/// Smallest subspace containing S stable under the given basis elements.
WeightedSubspace closure(const WeightModule& M, const std::vector<int>& ops, WeightedSubspace S);

/// V'(lambda) = U(r) v_lambda.
WeightedSubspace levi_submodule(const WeightModule& M, const ParabolicContraction& P);
/// V''(lambda) = U(r) v_{w0 lambda}.
WeightedSubspace lowest_levi_submodule(const WeightModule& M, const ParabolicContraction& P);

struct PBWFiltration {
    std::vector<WeightedSubspace> levels;  // F_0 = V', F_k = F_{k-1} + m^- F_{k-1}
    /// gr_dims[k][w] = dim F_k - dim F_{k-1} on weight space w.
    std::vector<std::vector<std::size_t>> gr_dims;
    bool exhaustive = false;
};

PBWFiltration pbw_filtration(const WeightModule& M, const ParabolicContraction& P);

struct GradedCheck {
    bool ok = true;
    std::vector<std::size_t> ordered_dims;  // per k: dim of (ordered monomials . V' + F_{k-1}) / F_{k-1}
    std::string detail;
};

/// gr_k equals the image of ordered degree-k monomials in m^- applied to V',
/// modulo F_{k-1}, at every weight.
GradedCheck check_graded_identity(const WeightModule& M, const ParabolicContraction& P, const PBWFiltration& F);

/// V'(lambda) equals the joint kernel of the m action.
bool check_annihilator(const WeightModule& M, const ParabolicContraction& P);

struct InvariantResult {
    std::size_t dim = 0;
    std::vector<std::pair<Weight, std::size_t>> by_weight;  // nonzero kernels only
};

/// Joint kernel of the diagonal action of e_i, f_i (i in pi') on V''* (x) V'.
InvariantResult matrix_coeff_invariant_dim(const WeightModule& M, const ParabolicContraction& P);

}  // namespace iwc
