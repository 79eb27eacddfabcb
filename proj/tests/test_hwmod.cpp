#include "iwc/charring.hpp"
#include "iwc/errors.hpp"
#include "iwc/hwmod.hpp"
#include "iwc/layered.hpp"
#include "iwc/orbits.hpp"

#include <doctest.h>

using namespace iwc;

namespace {

std::shared_ptr<const LieAlgebraBasis> algebra(const char* t) {
    return build_chevalley(build_root_system(SimpleType::parse(t)));
}

std::size_t total(const std::vector<std::size_t>& v) {
    std::size_t t = 0;
    for (auto x : v) t += x;
    return t;
}

Vec basis_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

// Span of a vector under the operators, by plain iteration on the flat module.
Subspace dense_closure(const WeightModule& M, const std::vector<int>& ops, const Vec& start) {
    Subspace s(M.dim());
    std::vector<Vec> todo{start};
    s.add(start);
    while (!todo.empty()) {
        const Vec v = todo.back();
        todo.pop_back();
        for (int a : ops) {
            const Vec w = M.action[a] * v;
            if (s.add(w)) todo.push_back(w);
        }
    }
    return s;
}

std::vector<int> levi_ops(const ParabolicContraction& P) {
    std::vector<int> ops;
    for (int i : P.pi_prime()) {
        ops.push_back(P.algebra().positive(i));
        ops.push_back(P.algebra().negative(i));
    }
    return ops;
}

// Matrix of op restricted to an invariant subspace, in the given basis.
Matrix restrict(const WeightModule& M, int op, const std::vector<Vec>& basis) {
    const std::size_t d = basis.size();
    Matrix b(M.dim(), d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < M.dim(); ++r) b(r, j) = basis[j][r];
    Matrix out(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const auto x = solve(b, M.action[op] * basis[j]);
        REQUIRE(x.has_value());
        for (std::size_t r = 0; r < d; ++r) out(r, j) = (*x)[r];
    }
    return out;
}

// dim Hom_{r'}(V'', V') = dim (V''* (x) V')^{r'}, by one big linear system.
std::size_t hom_dim(const WeightModule& M, const ParabolicContraction& P) {
    const auto ops = levi_ops(P);
    const Subspace v1 = dense_closure(M, ops, basis_vector(M.dim(), 0));
    const Subspace v2 = dense_closure(M, ops, basis_vector(M.dim(), M.offsets[M.lowest()]));
    const std::size_t d1 = v1.dim(), d2 = v2.dim();
    if (ops.empty()) return d1 * d2;
    Matrix sys(ops.size() * d1 * d2, d1 * d2);
    std::size_t row = 0;
    for (int op : ops) {
        const Matrix a1 = restrict(M, op, v1.basis());
        const Matrix a2 = restrict(M, op, v2.basis());
        // (a1 T - T a2)(r, c), with T(r, c) the unknown r * d2 + c.
        for (std::size_t r = 0; r < d1; ++r)
            for (std::size_t c = 0; c < d2; ++c, ++row) {
                for (std::size_t k = 0; k < d1; ++k) sys(row, k * d2 + c) += a1(r, k);
                for (std::size_t k = 0; k < d2; ++k) sys(row, r * d2 + k) -= a2(k, c);
            }
    }
    return d1 * d2 - rank(sys);
}

const std::pair<const char*, const char*> kPairs[] = {{"A1", ""},  {"A2", ""},  {"A2", "1"},
                                                      {"A3", "1,2"}, {"B2", "1"}, {"B2", "2"}};

}  // namespace

TEST_CASE("Verma Gram matrices") {
    const auto a1 = algebra("A1");
    CHECK(verma_gram(a1, Weight{1}, Weight{1}) == Matrix::identity(1));
    CHECK(verma_gram(a1, Weight{1}, Weight{-1})(0, 0) == 1);
    CHECK(verma_gram(a1, Weight{1}, Weight{-3})(0, 0) == 0);
    // <f^k v, f^k v> = k! n (n - 1) ... (n - k + 1) for sl2.
    for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= 6; ++k) {
            Rational expect = 1;
            for (long i = 0; i < k; ++i) expect *= (i + 1) * (n - i);
            CHECK(verma_gram(a1, Weight{n}, Weight{n - 2 * k})(0, 0) == expect);
        }
    CHECK_THROWS_AS(verma_gram(a1, Weight{1}, Weight{3}), DomainError);
    CHECK_THROWS_AS(verma_gram(a1, Weight{1}, Weight{0}), DomainError);
    CHECK_THROWS_AS(verma_gram(a1, Weight{1}, Weight{-29}, 12), ResourceError);
    const auto a2 = algebra("A2");
    const Matrix g = verma_gram(a2, Weight{1, 1}, Weight{0, 0});
    CHECK(g.rows() == 2);
    CHECK(g == g.transpose());
    CHECK(rank(g) == 2);
}

TEST_CASE("irreducible modules: examples") {
    const auto a2 = algebra("A2");
    const WeightModule t = build_irreducible(a2, Weight{0, 0});
    CHECK(t.dim() == 1);
    const WeightModule v = build_irreducible(a2, Weight{1, 0});
    CHECK(v.weights == std::vector<Weight>{Weight{1, 0}, Weight{-1, 1}, Weight{0, -1}});
    CHECK(v.dims == std::vector<std::size_t>{1, 1, 1});
    const WeightModule s = build_irreducible(algebra("A1"), Weight{2});
    CHECK(s.dims == std::vector<std::size_t>{1, 1, 1});
    CHECK_THROWS_AS(build_irreducible(a2, Weight{4, 4}, 100), ResourceError);
}

TEST_CASE("irreducible modules: Gram ranks, layered dimensions, relations") {
    for (const char* t : {"A1", "A2", "B2", "A3", "G2"}) {
        INFO("type ", std::string(t));
        const auto g = algebra(t);
        const RootSystem& rs = g->root_system();
        for (const Weight& l : dominant_weights_with_dim_at_most(rs, 40)) {
            CAPTURE(l.str());
            const WeightModule M = build_irreducible(g, l);
            CHECK(Integer(static_cast<unsigned long>(M.dim())) == weyl_dim(rs, l));
            CHECK(check_module_relations(M) == 0);
            CHECK(M.dims[M.lowest()] == 1);
            const LayeredModule L = build_layered_module(rs, l);
            for (std::size_t w = 0; w < M.weights.size(); ++w) {
                const int lw = L.weight_index(M.weights[w]);
                REQUIRE(lw >= 0);
                CHECK(L.dims[lw] == M.dims[w]);
                const Vec rc = rs.to_root_coords(l - M.weights[w]);
                int height = 0;
                for (const auto& x : rc) height += static_cast<int>(x.get_num().get_si());
                if (height <= 6) CHECK(rank(verma_gram(g, l, M.weights[w])) == M.dims[w]);
            }
            // e_i kills the highest weight vector, h_i acts by lambda_i.
            for (int i = 0; i < rs.rank(); ++i) {
                CHECK(M.action[g->positive(i)] * basis_vector(M.dim(), 0) == Vec(M.dim()));
                Vec hv(M.dim());
                hv[0] = l[i];
                CHECK(M.action[g->cartan(i)] * basis_vector(M.dim(), 0) == hv);
            }
        }
    }
}

TEST_CASE("PBW filtration examples") {
    const auto a2 = algebra("A2");
    const ParabolicContraction P(a2, {0});
    const WeightModule w2 = build_irreducible(a2, Weight{0, 1});
    CHECK(levi_submodule(w2, P).dim() == 1);
    const PBWFiltration F = pbw_filtration(w2, P);
    REQUIRE(F.levels.size() >= 2);
    CHECK(F.levels[1].dim() == 3);
    CHECK(total(F.gr_dims[0]) == 1);
    CHECK(total(F.gr_dims[1]) == 2);
    CHECK(F.exhaustive);
    CHECK(check_graded_identity(w2, P, F).ok);
    CHECK(check_annihilator(w2, P));
    const WeightModule w1 = build_irreducible(a2, Weight{1, 0});
    CHECK(levi_submodule(w1, P).dim() == 2);
    CHECK(check_annihilator(w1, P));
    const auto a1 = algebra("A1");
    const ParabolicContraction B(a1, {});
    const WeightModule s = build_irreducible(a1, Weight{2});
    const PBWFiltration G = pbw_filtration(s, B);
    REQUIRE(G.gr_dims.size() >= 3);
    for (int k = 0; k < 3; ++k) CHECK(total(G.gr_dims[k]) == 1);
    const WeightModule triv = build_irreducible(a2, Weight{0, 0});
    CHECK(check_annihilator(triv, P));
    CHECK(pbw_filtration(triv, P).levels[0].dim() == 1);
}

TEST_CASE("invariant dimension examples") {
    const auto a2 = algebra("A2");
    const ParabolicContraction P(a2, {0});
    CHECK(matrix_coeff_invariant_dim(build_irreducible(a2, Weight{0, 0}), P).dim == 1);
    CHECK(matrix_coeff_invariant_dim(build_irreducible(a2, Weight{0, 1}), P).dim == 0);
    const InvariantResult r = matrix_coeff_invariant_dim(build_irreducible(a2, Weight{1, 1}), P);
    CHECK(r.dim == 1);
    REQUIRE(r.by_weight.size() == 1);
    CHECK(r.by_weight[0].first == Weight{0, 3});
}

TEST_CASE("module checks against dense oracles on the test matrix") {
    for (const auto& [t, s] : kPairs) {
        INFO("type ", std::string(t));
        INFO("pi_prime ", std::string(s));
        const auto g = algebra(t);
        const RootSystem& rs = g->root_system();
        const ParabolicContraction P(g, parse_subset(s, rs.rank()));
        for (const Weight& l : dominant_weights_with_dim_at_most(rs, 30)) {
            CAPTURE(l.str());
            const WeightModule M = build_irreducible(g, l);
            // V' against the joint kernel of m, both computed densely.
            const Subspace v1 = dense_closure(M, levi_ops(P), basis_vector(M.dim(), 0));
            CHECK(levi_submodule(M, P).dim() == v1.dim());
            std::vector<Vec> rows;
            for (int a : P.m_basis()) {
                const Matrix d = M.action[a].to_dense();
                for (std::size_t r = 0; r < d.rows(); ++r) rows.push_back(d.row(r));
            }
            const std::size_t kernel = rows.empty() ? M.dim() : nullspace(Matrix::from_rows(rows, M.dim())).size();
            CHECK(kernel == v1.dim());
            CHECK(check_annihilator(M, P));
            const PBWFiltration F = pbw_filtration(M, P);
            CHECK(F.exhaustive);
            for (std::size_t w = 0; w < M.weights.size(); ++w) {
                std::size_t sum = 0;
                for (const auto& row : F.gr_dims) sum += row[w];
                CHECK(sum == M.dims[w]);
            }
            CHECK(check_graded_identity(M, P, F).ok);
            const InvariantResult inv = matrix_coeff_invariant_dim(M, P);
            CHECK(inv.dim == hom_dim(M, P));
            CHECK(inv.dim == (is_in_D(rs, P.pi_prime(), l) ? 1u : 0u));
            if (inv.dim == 1) CHECK(inv.by_weight[0].first == generator_weight(rs, P.pi_prime(), l));
        }
    }
}
