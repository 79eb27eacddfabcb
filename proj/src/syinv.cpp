#include "iwc/syinv.hpp"

#include "iwc/errors.hpp"

#include <algorithm>

namespace iwc {

namespace {

Root to_int_root(const RootSystem& rs, const Weight& w) {
    const Vec c = rs.to_root_coords(w);
    Root r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_integral(c[i])) throw DomainError("weight " + w.str() + " is not in the root lattice");
        r[i] = static_cast<int>(c[i].get_num().get_si());
    }
    return r;
}

Integer binomial(std::size_t n, std::size_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

SymmetricAlgebra::SymmetricAlgebra(const ParabolicContraction& P, BracketMode mode, std::size_t monomial_ceiling)
    : P_(&P), mode_(mode), ceiling_(monomial_ceiling), vars_(P.p_basis()), gens_(P.derived_generators()) {
    const LieAlgebraBasis& g = P.algebra();
    var_of_.assign(g.dim(), -1);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        var_of_[vars_[v]] = static_cast<int>(v);
        var_root_.push_back(g.root_of(vars_[v]));
    }
    brackets_.resize(gens_.size());
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        brackets_[gi].resize(vars_.size());
        for (std::size_t v = 0; v < vars_.size(); ++v)
            for (const auto& [b, c] : P.bracket(mode, gens_[gi], vars_[v])) {
                if (var_of_[b] < 0) throw InternalError("bracket leaves p");
                if (!is_integral(c)) throw InternalError("non-integral structure constant");
                brackets_[gi][v].emplace_back(static_cast<std::size_t>(var_of_[b]), c.get_num());
            }
    }
}

Root SymmetricAlgebra::monomial_root(const Monomial& m) const {
    Root r(static_cast<std::size_t>(P_->root_system().rank()), 0);
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v])
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += m[v] * var_root_[v][i];
    return r;
}

Weight SymmetricAlgebra::monomial_weight(const Monomial& m) const {
    return P_->root_system().root_weight(monomial_root(m));
}

std::string SymmetricAlgebra::monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (!m[v]) continue;
        if (!s.empty()) s += "*";
        s += P_->algebra().label(vars_[v]);
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

const std::map<Root, std::vector<Monomial>>& SymmetricAlgebra::monomials(int k) const {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    if (k < 0) throw DomainError("negative polynomial degree");
    if (k > 255) throw ResourceError("polynomial degree too large");
    const std::size_t n = vars_.size();
    if (n > 0 && binomial(n + k - 1, k) > Integer(static_cast<unsigned long>(ceiling_)))
        throw ResourceError("degree " + std::to_string(k) + " monomial count exceeds ceiling " +
                            std::to_string(ceiling_));
    std::map<Root, std::vector<Monomial>> out;
    Monomial m(n, 0);
    // Decreasing lexicographic order: put as much as possible on early variables first.
    auto rec = [&](auto&& self, std::size_t v, int left) -> void {
        if (v + 1 == n || n == 0) {
            if (n) m[v] = static_cast<std::uint8_t>(left);
            if (n || left == 0) out[monomial_root(m)].push_back(m);
            if (n) m[v] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[v] = static_cast<std::uint8_t>(e);
            self(self, v + 1, left - e);
        }
        m[v] = 0;
    };
    rec(rec, 0, k);
    return cache_.emplace(k, std::move(out)).first->second;
}

void SymmetricAlgebra::apply(std::size_t gi, const Monomial& m, std::map<Monomial, Integer>& out) const {
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (!m[v]) continue;
        for (const auto& [w, c] : brackets_[gi][v]) {
            Monomial t = m;
            --t[v];
            ++t[w];
            Integer& slot = out[t];
            slot += c * m[v];
            if (slot == 0) out.erase(t);
        }
    }
}

Polynomial SymmetricAlgebra::apply(std::size_t gi, const Polynomial& p) const {
    Polynomial out;
    for (const auto& [m, a] : p) {
        std::map<Monomial, Integer> img;
        apply(gi, m, img);
        for (const auto& [t, c] : img) {
            Rational& slot = out[t];
            slot += a * c;
            if (slot == 0) out.erase(t);
        }
    }
    return out;
}

bool SymmetricAlgebra::is_semi_invariant(const Polynomial& p) const {
    for (std::size_t gi = 0; gi < gens_.size(); ++gi)
        if (!apply(gi, p).empty()) return false;
    return true;
}

GradedVectorBlock enumerate_block(const SymmetricAlgebra& S, int k, const Weight& nu) {
    GradedVectorBlock b;
    b.degree = k;
    b.weight = nu;
    const auto& buckets = S.monomials(k);
    auto it = buckets.find(to_int_root(S.contraction().root_system(), nu));
    if (it != buckets.end()) b.monomials = it->second;
    return b;
}

GeneratorMatrix ad_generator_matrix(const SymmetricAlgebra& S, std::size_t gi, const GradedVectorBlock& source) {
    const LieAlgebraBasis& g = S.contraction().algebra();
    GeneratorMatrix out;
    out.target = enumerate_block(S, source.degree, source.weight + g.weight_of(S.generators()[gi]));
    std::map<Monomial, std::size_t> row;
    for (std::size_t r = 0; r < out.target.dim(); ++r) row[out.target.monomials[r]] = r;
    out.matrix = SparseMatrix(out.target.dim(), source.dim());
    for (std::size_t c = 0; c < source.dim(); ++c) {
        std::map<Monomial, Integer> img;
        S.apply(gi, source.monomials[c], img);
        for (const auto& [t, v] : img) {
            auto it = row.find(t);
            if (it == row.end()) throw InternalError("derivation image outside the target block");
            out.matrix.rows[it->second][static_cast<int>(c)] = Rational(v);
        }
    }
    return out;
}

Polynomial SemiInvariantSpace::polynomial(std::size_t i) const {
    Polynomial p;
    for (std::size_t c = 0; c < block.dim(); ++c)
        if (basis[i][c] != 0) p[block.monomials[c]] = basis[i][c];
    return p;
}

SemiInvariantSpace semi_invariants_block(const SymmetricAlgebra& S, const GradedVectorBlock& block) {
    SemiInvariantSpace out;
    out.block = block;
    const std::size_t cols = block.dim();
    if (cols == 0) return out;
    std::map<std::pair<std::size_t, Monomial>, SparseRow> rows;
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t gi = 0; gi < S.generators().size(); ++gi) {
            std::map<Monomial, Integer> img;
            S.apply(gi, block.monomials[c], img);
            for (auto& [t, v] : img) rows[{gi, t}].emplace_back(c, v);
        }
    SparseEchelon ech(cols);
    for (auto& [key, row] : rows) {
        ech.insert(std::move(row));
        if (ech.rank() == cols) break;
    }
    out.basis = ech.kernel();
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        if (!S.is_semi_invariant(out.polynomial(i)))
            throw InternalError("kernel vector is not annihilated by the generators");
    return out;
}

std::vector<SemiInvariantSpace> semi_invariants(const SymmetricAlgebra& S, int k) {
    std::vector<SemiInvariantSpace> out;
    const RootSystem& rs = S.contraction().root_system();
    for (const auto& [root, monos] : S.monomials(k)) {
        GradedVectorBlock b;
        b.degree = k;
        b.weight = rs.root_weight(root);
        b.monomials = monos;
        auto space = semi_invariants_block(S, b);
        if (!space.basis.empty()) out.push_back(std::move(space));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.block.weight < b.block.weight; });
    return out;
}

std::vector<SemiInvariantSpace> sy_nondegenerate(const ParabolicContraction& P, int k) {
    return semi_invariants(SymmetricAlgebra(P, BracketMode::Original), k);
}

bool SemiInvariantReport::all_confirmed() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.confirmed; });
}

SemiInvariantReport verify_lower_bound(const SymmetricAlgebra& S, const std::vector<OrbitDatum>& orbits,
                                       std::int64_t trunc, int max_degree) {
    if (max_degree < 0) throw DomainError("negative degree ceiling");
    const RootSystem& rs = S.contraction().root_system();
    SemiInvariantReport rep;
    rep.trunc = trunc;
    rep.max_degree = max_degree;
    const FormalCharacter bound = lower_bound_character(rs, orbits, trunc);
    for (const auto& [w, c] : bound.coeffs()) {
        WeightStatus s;
        s.weight = w;
        s.bound = c;
        rep.rows.push_back(std::move(s));
    }
    for (int k = 0; k <= max_degree; ++k) {
        bool pending = false;
        for (auto& row : rep.rows) {
            if (row.confirmed) continue;
            pending = true;
            const auto space = semi_invariants_block(S, enumerate_block(S, k, row.weight));
            for (std::size_t i = 0; i < space.basis.size(); ++i) row.degrees.push_back(k);
            row.found += space.basis.size();
            row.searched_to = k;
            if (Integer(static_cast<unsigned long>(row.found)) >= row.bound) row.confirmed = true;
        }
        if (!pending) break;
    }
    return rep;
}

SyCharacter semi_invariant_character(const SymmetricAlgebra& S, std::int64_t trunc, int max_degree) {
    const RootSystem& rs = S.contraction().root_system();
    SyCharacter out{FormalCharacter(rs.deg_coefficients(), trunc), max_degree, {}};
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& space : semi_invariants(S, k)) {
            const Weight& w = space.block.weight;
            if (rs.deg_functional(w) > trunc) continue;
            const Vec rc = rs.to_root_coords(w);
            if (std::any_of(rc.begin(), rc.end(), [](const Rational& x) { return x < 0; }))
                out.outside.push_back(w);
            else
                out.chi.add(w, Integer(static_cast<unsigned long>(space.basis.size())));
        }
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [m, x] : a)
        for (const auto& [n, y] : b) {
            Monomial t = m;
            for (std::size_t v = 0; v < t.size(); ++v) t[v] += n[v];
            Rational& slot = out[t];
            slot += x * y;
            if (slot == 0) out.erase(t);
        }
    return out;
}

}  // namespace iwc
