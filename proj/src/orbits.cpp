#include "iwc/orbits.hpp"

#include "iwc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace iwc {

namespace {

// -w(alpha_i) for an element of W mapping simple roots to negative simple roots.
int negated_image(const RootSystem& rs, const SimpleSubset& sub, int alpha) {
    const Weight img = -rs.apply_w0(sub, rs.simple_root(alpha));
    for (int k = 0; k < rs.rank(); ++k)
        if (img == rs.simple_root(k)) return k;
    throw InternalError("-w0 does not permute the simple roots");
}

bool contains(const SimpleSubset& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

SimpleSubset all_roots(const RootSystem& rs) {
    SimpleSubset all(rs.rank());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

}  // namespace

int involution_j(const RootSystem& rs, int alpha) { return negated_image(rs, all_roots(rs), alpha); }

int involution_i(const RootSystem& rs, const SimpleSubset& pi_prime, int alpha) {
    if (contains(pi_prime, alpha)) return negated_image(rs, pi_prime, alpha);
    int t = alpha;
    for (int r = 0; r <= rs.rank(); ++r) {
        const int jt = involution_j(rs, t);
        if (!contains(pi_prime, jt)) return jt;
        t = negated_image(rs, pi_prime, jt);  // (ij)(t), with j(t) in pi'
    }
    throw InternalError("involution_i: iteration did not leave pi'");
}

Weight generator_weight(const RootSystem& rs, const SimpleSubset& pi_prime, const Weight& lambda) {
    return rs.apply_w0(pi_prime, lambda) - rs.apply_w0(lambda);
}

std::vector<OrbitDatum> orbit_set(const RootSystem& rs, const SimpleSubset& pi_prime) {
    const int n = rs.rank();
    std::vector<int> ij(n);
    for (int a = 0; a < n; ++a) ij[a] = involution_i(rs, pi_prime, involution_j(rs, a));
    std::vector<bool> seen(n, false);
    std::vector<OrbitDatum> out;
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        OrbitDatum o;
        for (int t = a; !seen[t]; t = ij[t]) {
            seen[t] = true;
            o.gamma.push_back(t);
        }
        std::sort(o.gamma.begin(), o.gamma.end());
        o.d_gamma = Weight(static_cast<std::size_t>(n));
        for (int g : o.gamma) o.d_gamma[g] = 1;
        o.delta_gamma = generator_weight(rs, pi_prime, o.d_gamma);
        out.push_back(std::move(o));
    }
    return out;
}

bool is_in_D(const RootSystem& rs, const SimpleSubset& pi_prime, const Weight& lambda) {
    if (!lambda.is_dominant()) throw DomainError("is_in_D: weight " + lambda.str() + " is not dominant");
    const Weight delta = generator_weight(rs, pi_prime, lambda);
    return std::all_of(pi_prime.begin(), pi_prime.end(),
                       [&](int a) { return rs.inner_product(delta, rs.simple_root(a)) == 0; });
}

std::optional<std::vector<long>> decompose_in_D(const RootSystem& rs, const SimpleSubset& pi_prime,
                                                const std::vector<OrbitDatum>& orbits, const Weight& lambda) {
    const bool member = is_in_D(rs, pi_prime, lambda);
    const std::size_t n = static_cast<std::size_t>(rs.rank());
    Matrix gens(n, orbits.size());
    for (std::size_t k = 0; k < orbits.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) gens(i, k) = orbits[k].d_gamma[i];
    std::optional<std::vector<long>> result;
    if (auto x = solve(gens, lambda.coords())) {
        const bool ok = std::all_of(x->begin(), x->end(), [](const Rational& q) { return is_integral(q) && q >= 0; });
        if (ok) {
            std::vector<long> coeffs;
            for (const auto& q : *x) coeffs.push_back(q.get_num().get_si());
            result = std::move(coeffs);
        }
    }
    if (member != result.has_value())
        throw InternalError("semigroup membership routes disagree at " + lambda.str() + " for pi' = " +
                            subset_str(pi_prime));
    return result;
}

std::vector<Rational> levi_projection(const RootSystem&, const SimpleSubset& pi_prime, const Weight& lambda) {
    std::vector<Rational> out;
    for (int a : pi_prime) out.push_back(lambda[a]);
    return out;
}

SemigroupCheck check_semigroup(const RootSystem& rs, const SimpleSubset& pi_prime, std::int64_t cutoff) {
    SemigroupCheck c;
    const auto orbits = orbit_set(rs, pi_prime);
    if (generator_rank(orbits) != orbits.size())
        throw InternalError("orbit generators are linearly dependent");
    for (const Weight& lambda : rs.dominant_weights_up_to_deg(cutoff)) {
        ++c.tested;
        try {
            if (decompose_in_D(rs, pi_prime, orbits, lambda)) ++c.members;
        } catch (const InternalError&) {
            c.counterexamples.push_back(lambda);
        }
    }
    // Converse direction: generator combinations within the cutoff pass the pairing test.
    std::vector<long> n(orbits.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, Weight acc) -> void {
        if (rs.deg_functional(acc) > cutoff) return;
        if (k == orbits.size()) {
            if (!is_in_D(rs, pi_prime, acc)) c.counterexamples.push_back(acc);
            return;
        }
        for (Weight cur = acc; rs.deg_functional(cur) <= cutoff; cur += orbits[k].d_gamma) self(self, k + 1, cur);
    };
    rec(rec, 0, Weight(static_cast<std::size_t>(rs.rank())));
    return c;
}

std::size_t generator_rank(const std::vector<OrbitDatum>& orbits) {
    if (orbits.empty()) return 0;
    const std::size_t n = orbits.front().d_gamma.rank();
    Matrix m(orbits.size(), n);
    for (std::size_t k = 0; k < orbits.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) m(k, i) = orbits[k].d_gamma[i];
    return rank(m);
}

}  // namespace iwc
