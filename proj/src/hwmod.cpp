#include "iwc/hwmod.hpp"

#include "iwc/charring.hpp"
#include "iwc/errors.hpp"

#include <algorithm>
#include <set>

namespace iwc {

namespace {

int first_nonzero(const PBWMonomial& m) {
    for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j]) return static_cast<int>(j);
    return -1;
}

void accumulate(VermaModule::Vector& acc, const VermaModule::Vector& v, const Rational& s) {
    if (s == 0) return;
    for (const auto& [m, c] : v) {
        Rational& slot = acc[m];
        slot += s * c;
        if (slot == 0) acc.erase(m);
    }
}

}  // namespace

// Verma module

VermaModule::VermaModule(std::shared_ptr<const LieAlgebraBasis> g, Weight lambda)
    : g_(std::move(g)), lambda_(std::move(lambda)) {}

Weight VermaModule::weight(const PBWMonomial& m) const {
    Weight w = lambda_;
    for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j]) w -= Rational(m[j]) * g_->weight_of(g_->positive(j));
    return w;
}

std::vector<PBWMonomial> VermaModule::monomials(const Weight& mu) const {
    const RootSystem& rs = g_->root_system();
    const Vec diff = rs.to_root_coords(lambda_ - mu);
    std::vector<long> need(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (!is_integral(diff[i]) || diff[i] < 0) return {};
        need[i] = diff[i].get_num().get_si();
    }
    const auto& roots = rs.positive_roots();
    std::vector<PBWMonomial> out;
    PBWMonomial m(roots.size(), 0);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == roots.size()) {
            if (std::all_of(need.begin(), need.end(), [](long x) { return x == 0; })) out.push_back(m);
            return;
        }
        long most = 255;
        for (std::size_t i = 0; i < need.size(); ++i)
            if (roots[j][i] > 0) most = std::min(most, need[i] / roots[j][i]);
        for (long e = most; e >= 0; --e) {
            m[j] = static_cast<std::uint8_t>(e);
            for (std::size_t i = 0; i < need.size(); ++i) need[i] -= e * roots[j][i];
            self(self, j + 1);
            for (std::size_t i = 0; i < need.size(); ++i) need[i] += e * roots[j][i];
        }
        m[j] = 0;
    };
    rec(rec, 0);
    return out;
}

VermaModule::Vector VermaModule::mul_negative(std::size_t j, const PBWMonomial& m) const {
    const auto key = std::make_pair(j, m);
    if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
    Vector out;
    const int k = first_nonzero(m);
    if (k < 0 || j <= static_cast<std::size_t>(k)) {
        PBWMonomial t = m;
        ++t[j];
        out[t] = 1;
    } else {
        // y_j y_k y^{m'} = y_k (y_j y^{m'}) + [y_j, y_k] y^{m'}
        PBWMonomial rest = m;
        --rest[k];
        for (const auto& [t, c] : mul_negative(j, rest)) accumulate(out, mul_negative(k, t), c);
        for (const auto& [l, c] : g_->bracket(g_->negative(j), g_->negative(k)))
            accumulate(out, mul_negative(g_->root_index(l), rest), c);
    }
    mul_memo_.emplace(key, out);
    return out;
}

VermaModule::Vector VermaModule::act(int a, const PBWMonomial& m) const {
    const auto key = std::make_pair(a, m);
    if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;
    Vector out;
    const int j = first_nonzero(m);
    if (j < 0) {
        switch (g_->kind(a)) {
            case BasisKind::Positive: break;
            case BasisKind::Cartan: {
                const Rational c = lambda_[a - g_->cartan(0)];
                if (c != 0) out[m] = c;
                break;
            }
            case BasisKind::Negative: out = mul_negative(g_->root_index(a), m); break;
        }
    } else {
        // a y_j y^{m'} = y_j (a y^{m'}) + [a, y_j] y^{m'}
        PBWMonomial rest = m;
        --rest[j];
        for (const auto& [t, c] : act(a, rest)) accumulate(out, mul_negative(j, t), c);
        for (const auto& [l, c] : g_->bracket(a, g_->negative(j))) accumulate(out, act(l, rest), c);
    }
    act_memo_.emplace(key, out);
    return out;
}

Rational VermaModule::form(const PBWMonomial& a, const PBWMonomial& b) const {
    const int j = first_nonzero(a);
    if (j < 0) return first_nonzero(b) < 0 ? Rational(1) : Rational(0);
    if (first_nonzero(b) < 0) return 0;
    if (!(weight(a) == weight(b))) return 0;
    const auto key = std::make_pair(a, b);
    if (auto it = form_memo_.find(key); it != form_memo_.end()) return it->second;
    // <y_j u, w> = <u, x_j w>
    PBWMonomial rest = a;
    --rest[j];
    Rational s = 0;
    for (const auto& [t, c] : act(g_->positive(j), b)) s += c * form(rest, t);
    form_memo_.emplace(key, s);
    return s;
}

Matrix verma_gram(std::shared_ptr<const LieAlgebraBasis> g, const Weight& lambda, const Weight& mu, int max_height) {
    const RootSystem& rs = g->root_system();
    if (!rs.root_order_leq(mu, lambda)) throw DomainError("verma_gram: " + mu.str() + " is not below " + lambda.str());
    const Vec diff = rs.to_root_coords(lambda - mu);
    Rational h = 0;
    for (const auto& x : diff) h += x;
    if (h > max_height) throw ResourceError("verma_gram: height " + to_string(h) + " exceeds bound");
    VermaModule V(g, lambda);
    const auto monos = V.monomials(mu);
    Matrix G(monos.size(), monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r)
        for (std::size_t c = r; c < monos.size(); ++c) G(r, c) = G(c, r) = V.form(monos[r], monos[c]);
    return G;
}

// Irreducible modules

int WeightModule::weight_index(const Weight& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

int WeightModule::target(int a, int w) const { return weight_index(weights[w] + g->weight_of(a)); }

int WeightModule::lowest() const {
    const int w = weight_index(g->root_system().apply_w0(highest));
    if (w < 0 || dims[w] != 1) throw InternalError("lowest weight space is not one-dimensional");
    return w;
}

namespace {

Vec mat_vec(const Matrix& m, const Vec& v) { return m * v; }

Vec unit(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

SparseMatrix flatten(const WeightModule& M, const std::vector<Matrix>& blocks, const Weight& shift) {
    SparseMatrix out(M.dim(), M.dim());
    for (std::size_t w = 0; w < M.weights.size(); ++w) {
        const Matrix& b = blocks[w];
        if (b.rows() == 0 || b.cols() == 0) continue;
        const int t = M.weight_index(M.weights[w] + shift);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b(r, c) != 0) out.rows[M.offsets[t] + r][static_cast<int>(M.offsets[w] + c)] = b(r, c);
    }
    return out;
}

}  // namespace

WeightModule build_irreducible(std::shared_ptr<const LieAlgebraBasis> g, const Weight& lambda, std::size_t dim_ceiling) {
    const RootSystem& rs = g->root_system();
    const Integer expected = weyl_dim(rs, lambda);
    if (expected > Integer(static_cast<unsigned long>(dim_ceiling)))
        throw ResourceError("dim V(" + lambda.str() + ") = " + expected.get_str() + " exceeds ceiling " +
                            std::to_string(dim_ceiling));
    const int n = rs.rank();
    WeightModule M;
    M.g = g;
    M.highest = lambda;
    std::vector<Weight> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(rs.simple_root(i));
    std::vector<std::vector<Matrix>> eb(n), fb(n);  // eb[i][w]: V_w -> V_{w+a_i}; fb[i][w]: V_w -> V_{w-a_i}

    auto add_weight = [&](const Weight& w, std::size_t d, Matrix gram) {
        M.index[w] = static_cast<int>(M.weights.size());
        M.offsets.push_back(M.weights.empty() ? 0 : M.offsets.back() + M.dims.back());
        M.weights.push_back(w);
        M.dims.push_back(d);
        M.gram.push_back(std::move(gram));
        for (int i = 0; i < n; ++i) {
            eb[i].emplace_back();
            fb[i].emplace_back();
        }
    };
    Matrix one(1, 1);
    one(0, 0) = 1;
    add_weight(lambda, 1, one);

    // f_j applied to the basis vector b of V_w, as a vector of V_{w - a_j} (zero if absent).
    auto f_apply = [&](int j, int w, const Vec& v) -> Vec {
        const Matrix& m = fb[j][w];
        if (m.rows() == 0) {
            const int t = M.weight_index(M.weights[w] - alpha[j]);
            return Vec(t < 0 ? 0 : M.dims[t]);
        }
        return mat_vec(m, v);
    };
    auto e_apply = [&](int i, int w, const Vec& v) -> Vec {
        const Matrix& m = eb[i][w];
        if (m.rows() == 0) {
            const int t = M.weight_index(M.weights[w] + alpha[i]);
            return Vec(t < 0 ? 0 : M.dims[t]);
        }
        return mat_vec(m, v);
    };

    std::vector<Weight> level{lambda};
    while (!level.empty()) {
        std::set<Weight> next_weights;
        for (const Weight& v : level)
            for (int j = 0; j < n; ++j) next_weights.insert(v - alpha[j]);
        std::vector<Weight> next;
        for (const Weight& mu : next_weights) {
            std::vector<int> up(n);
            for (int i = 0; i < n; ++i) up[i] = M.weight_index(mu + alpha[i]);
            struct Candidate {
                int j;
                std::size_t b;
                std::vector<Vec> e_image;  // e_i f_j b in V_{mu + a_i}, per i (empty when absent)
            };
            std::vector<Candidate> cands;
            for (int j = 0; j < n; ++j) {
                if (up[j] < 0) continue;
                for (std::size_t b = 0; b < M.dims[up[j]]; ++b) {
                    Candidate c{j, b, std::vector<Vec>(n)};
                    const Vec bv = unit(M.dims[up[j]], b);
                    for (int i = 0; i < n; ++i) {
                        if (up[i] < 0) continue;
                        Vec img(M.dims[up[i]]);
                        const int top = M.weight_index(M.weights[up[j]] + alpha[i]);
                        if (top >= 0) img = f_apply(j, top, e_apply(i, up[j], bv));
                        if (i == j) {
                            const Rational hval = M.weights[up[j]][i];
                            for (std::size_t k = 0; k < img.size(); ++k) img[k] += hval * bv[k];
                        }
                        c.e_image[i] = std::move(img);
                    }
                    cands.push_back(std::move(c));
                }
            }
            const std::size_t nc = cands.size();
            Matrix C(nc, nc);
            for (std::size_t r = 0; r < nc; ++r)
                for (std::size_t s = r; s < nc; ++s) {
                    // <f_i b, f_j b'> = <b, e_i f_j b'>
                    const int i = cands[r].j;
                    const Vec gv = M.gram[up[i]] * cands[s].e_image[i];
                    C(r, s) = C(s, r) = gv[cands[r].b];
                }
            const Echelon ech = reduced_row_echelon(C);
            const std::vector<std::size_t>& basis = ech.pivots;
            if (basis.empty()) continue;
            const std::size_t d = basis.size();
            Matrix Gbb(d, d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) Gbb(r, s) = C(basis[r], basis[s]);
            const auto Ginv = inverse(Gbb);
            if (!Ginv) throw InternalError("contravariant form singular on chosen basis");
            add_weight(mu, d, Gbb);
            if (M.dim() > dim_ceiling) throw ResourceError("module dimension exceeds ceiling");
            const int here = M.weight_index(mu);
            next.push_back(mu);
            for (int i = 0; i < n; ++i) {
                if (up[i] < 0) continue;
                Matrix e(M.dims[up[i]], d);
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t r = 0; r < M.dims[up[i]]; ++r) e(r, k) = cands[basis[k]].e_image[i][r];
                eb[i][here] = std::move(e);
                fb[i][up[i]] = Matrix(d, M.dims[up[i]]);
            }
            for (std::size_t c = 0; c < nc; ++c) {
                Vec rhs(d);
                for (std::size_t r = 0; r < d; ++r) rhs[r] = C(basis[r], c);
                const Vec x = *Ginv * rhs;
                for (std::size_t k = 0; k < d; ++k) fb[cands[c].j][up[cands[c].j]](k, cands[c].b) = x[k];
            }
        }
        level = std::move(next);
    }

    if (Integer(static_cast<unsigned long>(M.dim())) != expected)
        throw InternalError("dim V(" + lambda.str() + ") = " + std::to_string(M.dim()) + ", Weyl formula gives " +
                            expected.get_str());
    std::vector<SparseMatrix> e(n), f(n);
    for (int i = 0; i < n; ++i) {
        e[i] = flatten(M, eb[i], alpha[i]);
        f[i] = flatten(M, fb[i], -alpha[i]);
    }
    M.action = extend_representation(*g, e, f);
    M.blocks.assign(g->dim(), std::vector<Matrix>(M.weights.size()));
    for (std::size_t a = 0; a < g->dim(); ++a) {
        const SparseMatrix& A = M.action[a];
        for (std::size_t w = 0; w < M.weights.size(); ++w) {
            const int t = M.target(static_cast<int>(a), static_cast<int>(w));
            if (t < 0) continue;
            Matrix b(M.dims[t], M.dims[w]);
            for (std::size_t r = 0; r < M.dims[t]; ++r)
                for (const auto& [c, v] : A.rows[M.offsets[t] + r]) {
                    const auto uc = static_cast<std::size_t>(c);
                    if (uc >= M.offsets[w] && uc < M.offsets[w] + M.dims[w]) b(r, uc - M.offsets[w]) = v;
                }
            M.blocks[a][w] = std::move(b);
        }
    }
    if (check_module_relations(M) != 0) throw InternalError("module relations fail for V(" + lambda.str() + ")");
    return M;
}

std::size_t check_module_relations(const WeightModule& M) {
    const LieAlgebraBasis& g = *M.g;
    const RootSystem& rs = g.root_system();
    const int n = rs.rank();
    std::size_t failures = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SparseMatrix ef = commutator(M.action[g.positive(i)], M.action[g.negative(j)]);
            if (!(ef == (i == j ? M.action[g.cartan(i)] : SparseMatrix(M.dim(), M.dim())))) ++failures;
            const SparseMatrix he = commutator(M.action[g.cartan(i)], M.action[g.positive(j)]);
            if (!(he == M.action[g.positive(j)].scaled(rs.cartan(i, j)))) ++failures;
        }
    for (std::size_t w = 0; w < M.weights.size(); ++w)
        for (int i = 0; i < n; ++i)
            for (std::size_t k = 0; k < M.dims[w]; ++k) {
                const auto& row = M.action[g.cartan(i)].rows[M.offsets[w] + k];
                const Rational expect = M.weights[w][i];
                const bool ok = expect == 0 ? row.empty()
                                            : row.size() == 1 && row.begin()->first == static_cast<int>(M.offsets[w] + k) &&
                                                  row.begin()->second == expect;
                if (!ok) ++failures;
            }
    return failures;
}

// Weighted subspaces

std::size_t WeightedSubspace::dim() const {
    std::size_t d = 0;
    for (const auto& p : parts) d += p.dim();
    return d;
}

bool WeightedSubspace::contains(const WeightedSubspace& o) const {
    for (std::size_t w = 0; w < parts.size(); ++w)
        if (!parts[w].contains(o.parts[w])) return false;
    return true;
}

WeightedSubspace zero_subspace(const WeightModule& M) {
    WeightedSubspace s;
    for (std::size_t d : M.dims) s.parts.emplace_back(d);
    return s;
}

WeightedSubspace whole_module(const WeightModule& M) {
    WeightedSubspace s;
    for (std::size_t d : M.dims) s.parts.push_back(Subspace::whole(d));
    return s;
}

WeightedSubspace image(const WeightModule& M, const std::vector<int>& ops, const WeightedSubspace& S) {
    WeightedSubspace out = zero_subspace(M);
    for (int a : ops)
        for (std::size_t w = 0; w < S.parts.size(); ++w) {
            if (S.parts[w].dim() == 0) continue;
            const int t = M.target(a, static_cast<int>(w));
            if (t < 0) continue;
            for (const Vec& v : S.parts[w].basis()) out.parts[t].add(M.blocks[a][w] * v);
        }
    return out;
}

WeightedSubspace closure(const WeightModule& M, const std::vector<int>& ops, WeightedSubspace S) {
    while (true) {
        const WeightedSubspace img = image(M, ops, S);
        if (S.contains(img)) return S;
        for (std::size_t w = 0; w < S.parts.size(); ++w) S.parts[w].add_all(img.parts[w]);
    }
}

namespace {

std::vector<int> levi_generators(const ParabolicContraction& P) {
    std::vector<int> ops;
    for (int i : P.pi_prime()) {
        ops.push_back(P.algebra().positive(i));
        ops.push_back(P.algebra().negative(i));
    }
    return ops;
}

}  // namespace

WeightedSubspace levi_submodule(const WeightModule& M, const ParabolicContraction& P) {
    WeightedSubspace s = zero_subspace(M);
    s.parts[0].add(unit(1, 0));
    return closure(M, levi_generators(P), std::move(s));
}

WeightedSubspace lowest_levi_submodule(const WeightModule& M, const ParabolicContraction& P) {
    WeightedSubspace s = zero_subspace(M);
    s.parts[M.lowest()].add(unit(1, 0));
    return closure(M, levi_generators(P), std::move(s));
}

PBWFiltration pbw_filtration(const WeightModule& M, const ParabolicContraction& P) {
    PBWFiltration F;
    const std::vector<int>& ops = P.m_minus_basis();
    F.levels.push_back(levi_submodule(M, P));
    while (true) {
        WeightedSubspace next = F.levels.back();
        const WeightedSubspace img = image(M, ops, next);
        if (next.contains(img)) break;
        for (std::size_t w = 0; w < next.parts.size(); ++w) next.parts[w].add_all(img.parts[w]);
        F.levels.push_back(std::move(next));
    }
    for (std::size_t k = 0; k < F.levels.size(); ++k) {
        std::vector<std::size_t> row(M.weights.size());
        for (std::size_t w = 0; w < row.size(); ++w)
            row[w] = F.levels[k].dim_at(w) - (k ? F.levels[k - 1].dim_at(w) : 0);
        F.gr_dims.push_back(std::move(row));
    }
    F.exhaustive = F.levels.back() == whole_module(M);
    return F;
}

GradedCheck check_graded_identity(const WeightModule& M, const ParabolicContraction& P, const PBWFiltration& F) {
    GradedCheck out;
    const std::vector<int>& ys = P.m_minus_basis();
    const std::size_t nm = ys.size();
    // prev[j]: span of ordered monomials y_{j1}...y_{jk} v with j <= j1 <= ... <= jk, v in V'.
    std::vector<WeightedSubspace> prev(nm + 1, F.levels[0]);
    for (std::size_t k = 0; k < F.levels.size(); ++k) {
        if (k > 0) {
            std::vector<WeightedSubspace> cur(nm + 1, zero_subspace(M));
            for (std::size_t j = nm; j-- > 0;) {
                cur[j] = cur[j + 1];
                const WeightedSubspace img = image(M, {ys[j]}, prev[j]);
                for (std::size_t w = 0; w < img.parts.size(); ++w) cur[j].parts[w].add_all(img.parts[w]);
            }
            prev = std::move(cur);
        }
        const WeightedSubspace& A = prev[0];
        std::size_t total = 0;
        for (std::size_t w = 0; w < M.weights.size(); ++w) {
            Subspace sum = k ? F.levels[k - 1].parts[w] : Subspace(M.dims[w]);
            const std::size_t base = sum.dim();
            sum.add_all(A.parts[w]);
            const std::size_t got = sum.dim() - base;
            total += got;
            if (got != F.gr_dims[k][w] || !F.levels[k].parts[w].contains(A.parts[w])) {
                if (out.ok)
                    out.detail = "degree " + std::to_string(k) + " weight " + M.weights[w].str() + ": ordered image " +
                                 std::to_string(got) + ", gr " + std::to_string(F.gr_dims[k][w]);
                out.ok = false;
            }
        }
        out.ordered_dims.push_back(total);
    }
    for (std::size_t w = 0; w < M.weights.size(); ++w) {
        std::size_t s = 0;
        for (const auto& row : F.gr_dims) s += row[w];
        if (s != M.dims[w]) {
            if (out.ok) out.detail = "graded dimensions do not sum to dim V at " + M.weights[w].str();
            out.ok = false;
        }
    }
    return out;
}

bool check_annihilator(const WeightModule& M, const ParabolicContraction& P) {
    const WeightedSubspace vprime = levi_submodule(M, P);
    for (std::size_t w = 0; w < M.weights.size(); ++w) {
        std::vector<Vec> rows;
        for (int x : P.m_basis()) {
            if (M.target(x, static_cast<int>(w)) < 0) continue;
            const Matrix& b = M.blocks[x][w];
            for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
        }
        const Subspace kernel =
            rows.empty() ? Subspace::whole(M.dims[w]) : Subspace::span(M.dims[w], nullspace(Matrix::from_rows(rows, M.dims[w])));
        if (!(kernel == vprime.parts[w])) return false;
    }
    return true;
}

namespace {

// Action of basis element a restricted to an invariant weighted subspace,
// in the coordinates of the stored bases: out[w] maps part w to part target(a, w).
std::vector<Matrix> restricted_action(const WeightModule& M, const WeightedSubspace& S, int a) {
    std::vector<Matrix> out(M.weights.size());
    for (std::size_t w = 0; w < M.weights.size(); ++w) {
        const auto& src = S.parts[w].basis();
        if (src.empty()) continue;
        const int t = M.target(a, static_cast<int>(w));
        if (t < 0) continue;
        const auto& dst = S.parts[t].basis();
        Matrix basis(M.dims[t], dst.size());
        for (std::size_t k = 0; k < dst.size(); ++k)
            for (std::size_t r = 0; r < M.dims[t]; ++r) basis(r, k) = dst[k][r];
        Matrix m(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            const Vec img = M.blocks[a][w] * src[c];
            if (is_zero(img)) continue;
            const auto x = solve(basis, img);
            if (!x) throw InternalError("subspace is not stable under the Levi action");
            for (std::size_t k = 0; k < dst.size(); ++k) m(k, c) = (*x)[k];
        }
        out[w] = std::move(m);
    }
    return out;
}

}  // namespace

InvariantResult matrix_coeff_invariant_dim(const WeightModule& M, const ParabolicContraction& P) {
    const WeightedSubspace v1 = levi_submodule(M, P);         // V'
    const WeightedSubspace v2 = lowest_levi_submodule(M, P);  // V''
    const std::vector<int> ops = levi_generators(P);
    std::vector<std::vector<Matrix>> act1, act2;
    for (int a : ops) {
        act1.push_back(restricted_action(M, v1, a));
        act2.push_back(restricted_action(M, v2, a));
    }
    std::vector<std::size_t> w1, w2;
    for (std::size_t w = 0; w < M.weights.size(); ++w) {
        if (v1.dim_at(w)) w1.push_back(w);
        if (v2.dim_at(w)) w2.push_back(w);
    }
    std::set<Weight> deltas;
    for (std::size_t a : w1)
        for (std::size_t b : w2) deltas.insert(M.weights[a] - M.weights[b]);

    InvariantResult out;
    for (const Weight& delta : deltas) {
        // Unknown T of weight delta: blocks T_nu : V''_nu -> V'_{nu + delta}.
        std::map<std::size_t, std::size_t> var_off;  // V'' weight index -> first variable
        std::map<std::size_t, int> tgt;
        std::size_t nvars = 0;
        for (std::size_t b : w2) {
            const int t = M.weight_index(M.weights[b] + delta);
            if (t < 0 || !v1.dim_at(t)) continue;
            var_off[b] = nvars;
            tgt[b] = t;
            nvars += v1.dim_at(t) * v2.dim_at(b);
        }
        if (nvars == 0) continue;
        auto var = [&](std::size_t b, std::size_t r, std::size_t c) { return var_off.at(b) + r * v2.dim_at(b) + c; };
        std::vector<Vec> eqs;
        for (std::size_t o = 0; o < ops.size(); ++o) {
            const int a = ops[o];
            // (a T - T a) on V''_nu, landing in V'_{nu + delta + wt(a)}.
            for (std::size_t b : w2) {
                const int t_up = M.weight_index(M.weights[b] + delta + M.g->weight_of(a));
                if (t_up < 0 || !v1.dim_at(t_up)) continue;
                const std::size_t rows = v1.dim_at(t_up), cols = v2.dim_at(b);
                std::vector<Vec> block(rows * cols, Vec(nvars));
                if (var_off.count(b)) {
                    const Matrix& A1 = act1[o][tgt[b]];  // V'_{nu+delta} -> V'_{nu+delta+wt}
                    for (std::size_t r = 0; r < rows; ++r)
                        for (std::size_t c = 0; c < cols; ++c)
                            for (std::size_t k = 0; k < A1.cols(); ++k)
                                if (A1(r, k) != 0) block[r * cols + c][var(b, k, c)] += A1(r, k);
                }
                const int b_up = M.target(a, static_cast<int>(b));
                if (b_up >= 0 && v2.dim_at(b_up) && var_off.count(b_up)) {
                    const Matrix& A2 = act2[o][b];  // V''_nu -> V''_{nu+wt}
                    for (std::size_t r = 0; r < rows; ++r)
                        for (std::size_t c = 0; c < cols; ++c)
                            for (std::size_t k = 0; k < A2.rows(); ++k)
                                if (A2(k, c) != 0) block[r * cols + c][var(b_up, r, k)] -= A2(k, c);
                }
                for (auto& e : block)
                    if (!is_zero(e)) eqs.push_back(std::move(e));
            }
        }
        const std::size_t kdim = eqs.empty() ? nvars : nvars - rank(Matrix::from_rows(eqs, nvars));
        if (kdim) {
            out.dim += kdim;
            out.by_weight.emplace_back(delta, kdim);
        }
    }
    return out;
}

}  // namespace iwc
