#include "iwc/charring.hpp"
#include "iwc/errors.hpp"
#include "iwc/layered.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace iwc;

namespace {

RootSystem rsys(const char* t) { return build_root_system(SimpleType::parse(t)); }

const std::pair<const char*, const char*> kPairs[] = {{"A1", ""},  {"A2", ""},  {"A2", "1"},
                                                      {"A3", "1,2"}, {"B2", "1"}, {"B2", "2"}};

}  // namespace

TEST_CASE("character products") {
    const RootSystem a2 = rsys("A2");
    const Weight d{0, 3};
    const auto one = FormalCharacter::one(a2, 24);
    const auto e = FormalCharacter::monomial(a2, d, 24);
    CHECK(char_mul(one, e) == e);
    CHECK(char_mul(e, one) == e);
    CHECK(char_mul(e, e) == FormalCharacter::monomial(a2, d + d, 24));
    FormalCharacter s = one;
    s.add(d, 1);
    const auto sq = char_mul(s, s);
    CHECK(sq.support_size() == 3);
    CHECK(sq[Weight{0, 0}] == 1);
    CHECK(sq[d] == 2);
    CHECK(sq[d + d] == 1);
    // Terms beyond the truncation are dropped.
    const auto small = FormalCharacter::monomial(a2, d, 6);
    CHECK(char_mul(small, small).support_size() == 0);
    CHECK(char_mul(small, e).trunc() == 6);
}

TEST_CASE("char_mul is associative and commutative") {
    const RootSystem b2 = rsys("B2");
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(0, 3), n(1, 5);
    const auto ws = b2.dominant_weights_up_to_deg(10);
    auto random_char = [&]() {
        FormalCharacter x(b2.deg_coefficients(), 30);
        for (int k = 0; k < 4; ++k) x.add(ws[rng() % ws.size()], n(rng));
        return x;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_char(), b = random_char(), d = random_char();
        CHECK(char_mul(a, b) == char_mul(b, a));
        CHECK(char_mul(char_mul(a, b), d) == char_mul(a, char_mul(b, d)));
    }
}

TEST_CASE("lower bound character examples") {
    const RootSystem a2 = rsys("A2");
    const auto lb = lower_bound_character(a2, orbit_set(a2, {0}), 12);
    CHECK(lb.support_size() == 3);
    CHECK(lb[Weight{0, 0}] == 1);
    CHECK(lb[Weight{0, 3}] == 1);
    CHECK(lb[Weight{0, 6}] == 1);
    CHECK(lower_bound_character(a2, {}, 12) == FormalCharacter::one(a2, 12));
    const RootSystem a1 = rsys("A1");
    const auto b = lower_bound_character(a1, orbit_set(a1, {}), 8);
    CHECK(b.support_size() == 5);
    for (long k = 0; k <= 4; ++k) CHECK(b[Weight{2 * k}] == 1);
}

TEST_CASE("lower bound coefficients count decompositions") {
    for (const auto& [t, s] : kPairs) {
        INFO("type ", std::string(t));
        const RootSystem rs = rsys(t);
        auto orbits = orbit_set(rs, parse_subset(s, rs.rank()));
        const std::int64_t trunc = 24;
        const auto lb = lower_bound_character(rs, orbits, trunc);
        // Brute force over n_Gamma <= trunc / deg(delta_Gamma).
        std::map<Weight, Integer> count;
        std::vector<long> n(orbits.size(), 0);
        std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t k, std::int64_t used) {
            if (k == orbits.size()) {
                Weight w(static_cast<std::size_t>(rs.rank()));
                for (std::size_t g = 0; g < orbits.size(); ++g) w += Rational(n[g]) * orbits[g].delta_gamma;
                count[w] += 1;
                return;
            }
            const std::int64_t dg = rs.deg(orbits[k].delta_gamma);
            for (n[k] = 0; used + n[k] * dg <= trunc; ++n[k]) walk(k + 1, used + n[k] * dg);
            n[k] = 0;
        };
        walk(0, 0);
        CHECK(lb.coeffs() == count);
        // Orbit order does not matter.
        std::reverse(orbits.begin(), orbits.end());
        CHECK(lower_bound_character(rs, orbits, trunc) == lb);
    }
}

TEST_CASE("char_leq") {
    const RootSystem a2 = rsys("A2");
    const Weight d{0, 3};
    const auto one = FormalCharacter::one(a2, 12);
    CHECK(char_leq(one, one).leq);
    FormalCharacter s = one;
    s.add(d, 1);
    CHECK(char_leq(one, s).leq);
    const auto cmp = char_leq(FormalCharacter::monomial(a2, d, 12, 2), FormalCharacter::monomial(a2, d, 12));
    CHECK(!cmp.leq);
    REQUIRE(cmp.witness.has_value());
    CHECK(*cmp.witness == d);
    CHECK_THROWS_AS(char_leq(one, FormalCharacter::one(a2, 6)), DomainError);
}

TEST_CASE("weyl_dim") {
    CHECK(weyl_dim(rsys("A2"), Weight{0, 0}) == 1);
    CHECK(weyl_dim(rsys("A2"), Weight{1, 0}) == 3);
    for (long n = 0; n < 10; ++n) CHECK(weyl_dim(rsys("A1"), Weight{n}) == n + 1);
    CHECK(weyl_dim(rsys("G2"), Weight{1, 0}) == 7);
    CHECK(weyl_dim(rsys("G2"), Weight{0, 1}) == 14);
    CHECK(weyl_dim(rsys("E6"), Weight{1, 0, 0, 0, 0, 0}) == 27);
    CHECK_THROWS_AS(weyl_dim(rsys("A2"), Weight{-1, 0}), DomainError);
    // Against modules built from the Cartan matrix alone.
    for (const char* t : {"A2", "A3", "B2", "C3", "G2"}) {
        const RootSystem rs = rsys(t);
        for (const auto& w : rs.dominant_weights_up_to_deg(8)) {
            if (weyl_dim(rs, w) > 200) continue;
            CAPTURE(w.str());
            CHECK(Integer(static_cast<unsigned long>(build_layered_module(rs, w).dim())) == weyl_dim(rs, w));
        }
    }
}

TEST_CASE("dominant weights with bounded dimension") {
    for (const char* t : {"A1", "A2", "A3", "B2"}) {
        const RootSystem rs = rsys(t);
        const Integer bound = 200;
        const auto got = dominant_weights_with_dim_at_most(rs, bound);
        // Box search: weyl_dim(k w_i) > 200 once k is large enough.
        std::vector<Weight> expect;
        const long box = 200;
        Weight w(static_cast<std::size_t>(rs.rank()));
        std::function<void(int)> walk = [&](int i) {
            if (i == rs.rank()) {
                if (weyl_dim(rs, w) <= bound) expect.push_back(w);
                return;
            }
            for (long k = 0; k < box; ++k) {
                w[i] = k;
                Weight probe(static_cast<std::size_t>(rs.rank()));
                probe[i] = k;
                if (weyl_dim(rs, probe) > bound) break;
                walk(i + 1);
            }
            w[i] = 0;
        };
        walk(0);
        std::sort(expect.begin(), expect.end());
        CHECK(got == expect);
    }
}
