// Chevalley basis of a simple Lie algebra, the parabolic split p = r + m and
// the contraction of p in which m becomes an abelian ideal.
//
// Basis order of g: x_beta for the positive roots (root-system order), then
// x_{-beta} in the same order, then the simple coroots h_1..h_n.
//
// Sign convention: for every non-simple positive root xi with extraspecial
// pair (alpha, beta), N_{alpha,beta} = p + 1 where p is the largest integer
// with beta - p alpha a root; moreover N_{-alpha,-beta} = -N_{alpha,beta} for
// all pairs and [x_alpha, x_{-alpha}] = h_alpha (the coroot). The anti-
// involution x_alpha <-> x_{-alpha}, h -> h is then an anti-automorphism.

#pragma once

#include "iwc/linalg.hpp"
#include "iwc/rootsys.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace iwc {

/// Sparse element of g over the Chevalley basis.
using Element = std::map<int, Rational>;

void add_scaled(Element& acc, const Element& x, const Rational& s);

enum class BasisKind { Positive, Negative, Cartan };

class LieAlgebraBasis {
public:
    using IntVec = std::vector<std::pair<int, long>>;  // sorted by basis index

    explicit LieAlgebraBasis(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    std::size_t dim() const { return 2 * npos_ + static_cast<std::size_t>(rs_.rank()); }
    std::size_t num_positive() const { return npos_; }

    int positive(std::size_t j) const { return static_cast<int>(j); }
    int negative(std::size_t j) const { return static_cast<int>(npos_ + j); }
    int cartan(int i) const { return static_cast<int>(2 * npos_) + i; }

    BasisKind kind(int a) const;
    /// Positive-root index underlying x_{+-beta}; -1 for h_i.
    int root_index(int a) const;
    /// Signed simple-root coordinates of the weight of basis element a.
    Root root_of(int a) const;
    Weight weight_of(int a) const;
    /// Basis index of x_r for a signed root r, or -1.
    int index_of_root(const Root& r) const;

    const IntVec& bracket(int a, int b) const { return table_[a * dim() + b]; }
    Element bracket_element(int a, int b) const;
    Element bracket(const Element& x, const Element& y) const;

    /// N_{r,s} for signed roots with r + s a root, 0 otherwise.
    long structure_constant(const Root& r, const Root& s) const;

    /// Killing form tr(ad a ad b) on basis elements.
    const Rational& killing(int a, int b) const { return killing_[a * dim() + b]; }
    Rational killing(const Element& x, const Element& y) const;

    std::string label(int a) const;  // "x[1,1]", "x[-1,0]", "h2"

    /// For a non-simple positive root j with extraspecial pair (first, second):
    /// x_j = scale [x_first, x_second] and x_{-j} = -scale [x_{-first}, x_{-second}].
    struct Recipe {
        int first;
        int second;
        Rational scale;
    };
    const Recipe& recipe(std::size_t j) const { return recipes_[j]; }

    /// Exhaustive Jacobi identity check; returns the number of failing triples.
    std::size_t jacobi_failures() const;

private:
    void build_from_adjoint();
    void build_killing();

    RootSystem rs_;
    std::size_t npos_;
    std::vector<Recipe> recipes_;
    std::vector<IntVec> table_;
    std::vector<Rational> killing_;
};

/// Matrices of every basis element of g in a representation given by the
/// actions of the Chevalley generators e_i, f_i, in the g-basis order.
std::vector<SparseMatrix> extend_representation(const LieAlgebraBasis& g, const std::vector<SparseMatrix>& e,
                                                const std::vector<SparseMatrix>& f);

/// Builds the basis and verifies Jacobi exhaustively when rank <= 3.
std::shared_ptr<const LieAlgebraBasis> build_chevalley(const RootSystem& rs);

enum class BracketMode { Contracted, Original };

class ParabolicContraction {
public:
    ParabolicContraction(std::shared_ptr<const LieAlgebraBasis> g, SimpleSubset pi_prime);

    const LieAlgebraBasis& algebra() const { return *g_; }
    std::shared_ptr<const LieAlgebraBasis> algebra_ptr() const { return g_; }
    const RootSystem& root_system() const { return g_->root_system(); }
    const SimpleSubset& pi_prime() const { return pi_prime_; }
    bool in_pi_prime(int i) const;

    /// Positive root j lies in the subsystem spanned by pi'.
    bool levi_root(std::size_t j) const { return levi_[j]; }

    bool in_r(int a) const;
    bool in_m(int a) const;
    bool in_m_minus(int a) const;
    bool in_p(int a) const { return in_r(a) || in_m(a); }
    bool in_p_minus(int a) const { return in_r(a) || in_m_minus(a); }

    // Basis index lists, ascending in the g-basis order.
    const std::vector<int>& p_basis() const { return p_; }
    const std::vector<int>& r_basis() const { return r_; }
    const std::vector<int>& m_basis() const { return m_; }
    const std::vector<int>& m_minus_basis() const { return m_minus_; }
    const std::vector<int>& p_minus_basis() const { return p_minus_; }

    Element bracket_p(int a, int b) const;
    /// [z,x] and [z,z'] inherited from p; [x,x'] = 0 on m.
    Element bracket_ptilde(int a, int b) const;
    Element bracket(BracketMode mode, int a, int b) const;

    /// ad*x(y) for x in the contraction and y in p^-.
    Element coadjoint(int x, int y) const;
    Element coadjoint(int x, const Element& y) const;

    /// e_i, f_i for i in pi' followed by the m basis; these generate the
    /// derived algebra r' + m of the contraction.
    std::vector<int> derived_generators() const;

private:
    std::shared_ptr<const LieAlgebraBasis> g_;
    SimpleSubset pi_prime_;
    std::vector<bool> levi_;
    std::vector<int> p_, r_, m_, m_minus_, p_minus_;
};

/// Throws ConfigError("parabolic must be proper") when pi' is all of pi.
ParabolicContraction split_parabolic(std::shared_ptr<const LieAlgebraBasis> g, SimpleSubset pi_prime);

/// (1/k!) sum over permutations of prod K(a_i, b_sigma(i)); a in S_k of the
/// contraction, b in S_k(p^-), both given as lists of basis indices.
Rational sym_killing_pairing(const ParabolicContraction& P, const std::vector<int>& a, const std::vector<int>& b);

struct IdentityCheck {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

/// The contracted bracket equals the bracket of p with m-components dropped
/// on m x m, and the bracket of p otherwise.
IdentityCheck check_contraction(const ParabolicContraction& P);
/// ad*[x,x'] = [ad*x, ad*x'] on every basis pair, evaluated on all of p^-.
IdentityCheck check_coadjoint_action(const ParabolicContraction& P);
/// K([x,y], z) = -K(y, ad*x(z)) for x, y in the contraction and z in p^-.
IdentityCheck check_killing_intertwiner(const ParabolicContraction& P);
/// Killing pairing matrix between the bases of p and p^- is invertible.
bool killing_nondegenerate(const ParabolicContraction& P);

}  // namespace iwc
