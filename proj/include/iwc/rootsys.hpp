// Root systems of simple Lie algebras in the Bourbaki numbering.
//
// Weights are stored in fundamental-weight coordinates. The Cartan matrix is
// A(i, j) = <alpha_i^vee, alpha_j>, so the fundamental coordinates of the
// simple root alpha_j are the j-th column of A. The invariant form is
// normalized so that long roots have squared length 2.

#pragma once

#include "iwc/linalg.hpp"

#include <compare>
#include <map>
#include <cstdint>
#include <string>
#include <vector>

namespace iwc {

struct SimpleType {
    char family = 'A';  // one of A..G
    int rank = 1;

    /// Parses "A2", "b3", "E6". Throws ConfigError on inadmissible input.
    static SimpleType parse(const std::string& text);

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const SimpleType&) const = default;
};

/// Exact weight in fundamental-weight coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : c_(rank) {}
    explicit Weight(Vec coords) : c_(std::move(coords)) {}
    Weight(std::initializer_list<long> coords);

    static Weight fundamental(std::size_t rank, std::size_t i);

    std::size_t rank() const { return c_.size(); }
    const Vec& coords() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const { return iwc::is_zero(c_); }
    bool is_integral() const;
    bool is_dominant() const;  // integral with nonnegative coordinates

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator*(const Rational& s, const Weight& w);

    bool operator==(const Weight& o) const { return c_ == o.c_; }
    bool operator<(const Weight& o) const { return c_ < o.c_; }

    /// "[1, 0, 2/3]"
    std::string str() const;

private:
    Vec c_;
};

using Root = std::vector<int>;  // simple-root coordinates

/// Subset of simple roots, held as sorted 0-based indices.
using SimpleSubset = std::vector<int>;

/// Parses "1,3" (1-based Bourbaki indices) into {0, 2}. Empty string is the
/// empty set. Throws ConfigError on out-of-range or repeated indices.
SimpleSubset parse_subset(const std::string& text, int rank);
std::string subset_str(const SimpleSubset& s);  // 1-based, "{1,3}"

class RootSystem {
public:
    explicit RootSystem(SimpleType t);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }

    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const Matrix& inverse_cartan() const { return inverse_cartan_; }
    /// Gram matrix (alpha_i, alpha_j) of the invariant form on simple roots.
    const Matrix& symmetrized_form() const { return form_; }
    /// (alpha_i, alpha_i) / 2
    const Rational& symmetrizer(int i) const { return sym_[i]; }

    /// Positive roots ordered by height, then with the coordinate vectors in
    /// decreasing lexicographic order (so alpha_1, ..., alpha_n come first).
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }
    /// Index into positive_roots(), or -1.
    int positive_index(const Root& r) const;
    bool is_root(const Root& r) const;  // either sign
    const Root& highest_root() const { return positive_.back(); }
    int height(const Root& r) const;

    /// (alpha, alpha) / 2 for a positive root.
    Rational half_norm(const Root& r) const;
    /// Coefficients of the coroot alpha^vee in the simple coroots.
    std::vector<int> coroot(const Root& r) const;

    Weight root_weight(const Root& r) const;
    Weight simple_root(int i) const;
    Vec to_root_coords(const Weight& w) const;
    Weight from_root_coords(const Vec& c) const;
    Weight rho() const;

    Rational inner_product(const Weight& a, const Weight& b) const;
    /// <alpha^vee, w> for a positive root alpha.
    Rational pairing(const Root& coroot_of, const Weight& w) const;

    Weight reflect(int i, const Weight& w) const;

    /// Reduced word of the longest element of W_sub, found by descending a
    /// regular dominant weight of the subsystem, always reflecting at the
    /// lowest-index simple root with positive pairing. The longest element
    /// is the product word[k-1] ... word[0].
    std::vector<int> longest_word(const SimpleSubset& sub) const;
    Weight apply_w0(const SimpleSubset& sub, const Weight& w) const;
    Weight apply_w0(const Weight& w) const;  // full Weyl group

    /// deg(lambda) = 2 * (sum of simple-root coordinates). Requires dominance.
    std::int64_t deg(const Weight& w) const;
    /// The same linear functional, without the dominance requirement.
    Rational deg_functional(const Weight& w) const;
    /// deg as a linear form on fundamental coordinates.
    const Vec& deg_coefficients() const { return deg_coeffs_; }

    /// True when lambda - mu is a nonnegative integer combination of simple roots.
    bool root_order_leq(const Weight& mu, const Weight& lambda) const;

    /// Dominant weights with deg <= bound, in increasing lexicographic order.
    std::vector<Weight> dominant_weights_up_to_deg(std::int64_t bound) const;

    /// Classical count of positive roots for the type.
    static std::size_t classical_positive_count(SimpleType t);

private:
    void build_cartan();
    void build_roots();

    SimpleType type_;
    std::vector<std::vector<int>> cartan_;
    Matrix inverse_cartan_;
    Matrix form_;
    std::vector<Rational> sym_;
    std::vector<Root> positive_;
    std::map<Root, int> index_;
    Vec deg_coeffs_;
};

RootSystem build_root_system(SimpleType t);

}  // namespace iwc
