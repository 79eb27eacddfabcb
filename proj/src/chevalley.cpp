#include "iwc/chevalley.hpp"

#include "iwc/errors.hpp"
#include "iwc/layered.hpp"

#include <algorithm>
#include <numeric>

namespace iwc {

void add_scaled(Element& acc, const Element& x, const Rational& s) {
    if (s == 0) return;
    for (const auto& [k, v] : x) {
        Rational& slot = acc[k];
        slot += s * v;
        if (slot == 0) acc.erase(k);
    }
}

namespace {


Root negated(Root r) {
    for (auto& x : r) x = -x;
    return r;
}

Root sum(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool is_zero_root(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

// Largest p with s - p r a root.
int string_below(const RootSystem& rs, const Root& r, const Root& s) {
    int p = 0;
    Root t = s;
    while (true) {
        for (std::size_t i = 0; i < t.size(); ++i) t[i] -= r[i];
        if (!rs.is_root(t)) return p;
        ++p;
    }
}

}  // namespace

LieAlgebraBasis::LieAlgebraBasis(RootSystem rs) : rs_(std::move(rs)), npos_(rs_.num_positive()) {
    build_from_adjoint();
    build_killing();
}

BasisKind LieAlgebraBasis::kind(int a) const {
    const auto u = static_cast<std::size_t>(a);
    if (u < npos_) return BasisKind::Positive;
    if (u < 2 * npos_) return BasisKind::Negative;
    return BasisKind::Cartan;
}

int LieAlgebraBasis::root_index(int a) const {
    switch (kind(a)) {
        case BasisKind::Positive: return a;
        case BasisKind::Negative: return a - static_cast<int>(npos_);
        default: return -1;
    }
}

Root LieAlgebraBasis::root_of(int a) const {
    switch (kind(a)) {
        case BasisKind::Positive: return rs_.positive_roots()[a];
        case BasisKind::Negative: return negated(rs_.positive_roots()[root_index(a)]);
        default: return Root(rs_.rank(), 0);
    }
}

Weight LieAlgebraBasis::weight_of(int a) const { return rs_.root_weight(root_of(a)); }

int LieAlgebraBasis::index_of_root(const Root& r) const {
    const int j = rs_.positive_index(r);
    if (j >= 0) return positive(j);
    const int k = rs_.positive_index(negated(r));
    return k >= 0 ? negative(k) : -1;
}

Element LieAlgebraBasis::bracket_element(int a, int b) const {
    Element out;
    for (const auto& [k, v] : bracket(a, b)) out[k] = v;
    return out;
}

Element LieAlgebraBasis::bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [a, s] : x)
        for (const auto& [b, t] : y)
            for (const auto& [c, v] : bracket(a, b)) {
                Rational& slot = out[c];
                slot += s * t * v;
                if (slot == 0) out.erase(c);
            }
    return out;
}

long LieAlgebraBasis::structure_constant(const Root& r, const Root& s) const {
    const int a = index_of_root(r), b = index_of_root(s);
    if (a < 0 || b < 0) throw DomainError("structure_constant: argument is not a root");
    const int c = index_of_root(sum(r, s));
    if (c < 0) return 0;
    for (const auto& [k, v] : bracket(a, b))
        if (k == c) return v;
    return 0;
}

Rational LieAlgebraBasis::killing(const Element& x, const Element& y) const {
    Rational s = 0;
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y) s += u * v * killing(a, b);
    return s;
}

std::string LieAlgebraBasis::label(int a) const {
    if (kind(a) == BasisKind::Cartan) return "h" + std::to_string(a - cartan(0) + 1);
    const Root r = root_of(a);
    std::string s = "x[";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "]";
}

void LieAlgebraBasis::build_from_adjoint() {
    const int n = rs_.rank();
    const auto& roots = rs_.positive_roots();
    const LayeredModule adj = build_layered_module(rs_, rs_.root_weight(rs_.highest_root()), 1u << 20);
    if (adj.dim() != dim())
        throw InternalError("adjoint module has dimension " + std::to_string(adj.dim()) + ", expected " +
                            std::to_string(dim()));

    recipes_.assign(npos_, {-1, -1, Rational(0)});
    for (std::size_t j = static_cast<std::size_t>(n); j < npos_; ++j) {
        const Root& xi = roots[j];
        for (std::size_t k = 0; k < j; ++k) {
            Root beta = xi;
            for (int i = 0; i < n; ++i) beta[i] -= roots[k][i];
            const int l = rs_.positive_index(beta);
            if (l < 0 || static_cast<std::size_t>(l) <= k) continue;
            recipes_[j] = {static_cast<int>(k), l, Rational(1, string_below(rs_, roots[k], beta) + 1)};
            break;
        }
        if (recipes_[j].first < 0) throw InternalError("no extraspecial pair for a non-simple root");
    }
    std::vector<SparseMatrix> e(n), f(n);
    for (int i = 0; i < n; ++i) {
        e[i] = SparseMatrix::from_dense(adj.e_matrix(i));
        f[i] = SparseMatrix::from_dense(adj.f_matrix(i));
    }
    const std::vector<SparseMatrix> rep = extend_representation(*this, e, f);
    for (int i = 0; i < n; ++i)
        if (!(rep[cartan(i)] == SparseMatrix::from_dense(adj.h_matrix(i))))
            throw InternalError("[e_i, f_i] does not act as the simple coroot");
    std::vector<SparseMatrix> h(rep.begin() + cartan(0), rep.end());

    auto mat = [&](int a) -> const SparseMatrix& { return rep[a]; };

    const std::size_t d = dim();
    table_.assign(d * d, {});
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const int ia = static_cast<int>(a), ib = static_cast<int>(b);
            IntVec& out = table_[a * d + b];
            const BasisKind ka = kind(ia), kb = kind(ib);
            if (ka == BasisKind::Cartan && kb == BasisKind::Cartan) continue;
            if (ka == BasisKind::Cartan || kb == BasisKind::Cartan) {
                const int hi = (ka == BasisKind::Cartan ? ia : ib) - cartan(0);
                const int xv = ka == BasisKind::Cartan ? ib : ia;
                const Rational c = weight_of(xv)[hi] * (ka == BasisKind::Cartan ? 1 : -1);
                if (c != 0) out.emplace_back(xv, c.get_num().get_si());
                continue;
            }
            const Root r = root_of(ia), s = root_of(ib);
            const Root t = sum(r, s);
            const SparseMatrix comm = commutator(mat(ia), mat(ib));
            if (is_zero_root(t)) {
                const int sign = ka == BasisKind::Positive ? 1 : -1;
                const auto co = rs_.coroot(rs_.positive_roots()[root_index(ia)]);
                SparseMatrix expect(d);
                for (int i = 0; i < n; ++i) {
                    if (co[i] == 0) continue;
                    expect = expect.axpy(sign * co[i], h[i]);
                    out.emplace_back(cartan(i), sign * co[i]);
                }
                if (!(comm == expect)) throw InternalError("[x_a, x_-a] is not the coroot");
                continue;
            }
            const int c = index_of_root(t);
            if (c < 0) {
                if (!comm.is_zero()) throw InternalError("nonzero bracket outside the root system");
                continue;
            }
            const SparseMatrix& target = mat(c);
            const auto row = std::find_if(target.rows.begin(), target.rows.end(),
                                          [](const auto& r) { return !r.empty(); });
            const auto [col, tv] = *row->begin();
            const auto cit = comm.rows[row - target.rows.begin()].find(col);
            const Rational coeff = cit == comm.rows[row - target.rows.begin()].end() ? Rational(0) : cit->second / tv;
            if (!(comm == target.scaled(coeff)) || !is_integral(coeff))
                throw InternalError("bracket is not an integer multiple of the root vector");
            const long nval = coeff.get_num().get_si();
            const int p = string_below(rs_, r, s);
            if (std::labs(nval) != p + 1) throw InternalError("structure constant violates |N| = p + 1");
            out.emplace_back(c, nval);
        }
    }
    for (auto& v : table_) std::sort(v.begin(), v.end());
}

void LieAlgebraBasis::build_killing() {
    const std::size_t d = dim();
    killing_.assign(d * d, Rational(0));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Rational s = 0;
            for (std::size_t c = 0; c < d; ++c)
                for (const auto& [k, v] : bracket(static_cast<int>(b), static_cast<int>(c)))
                    for (const auto& [l, w] : bracket(static_cast<int>(a), k))
                        if (static_cast<std::size_t>(l) == c) s += v * w;
            killing_[a * d + b] = s;
            killing_[b * d + a] = s;
        }
}

std::size_t LieAlgebraBasis::jacobi_failures() const {
    const int d = static_cast<int>(dim());
    std::size_t failures = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int c = b + 1; c < d; ++c) {
                Element acc;
                const Element ea{{a, 1}}, eb{{b, 1}}, ec{{c, 1}};
                add_scaled(acc, bracket(ea, bracket_element(b, c)), 1);
                add_scaled(acc, bracket(eb, bracket_element(c, a)), 1);
                add_scaled(acc, bracket(ec, bracket_element(a, b)), 1);
                if (!acc.empty()) ++failures;
            }
    return failures;
}

std::vector<SparseMatrix> extend_representation(const LieAlgebraBasis& g, const std::vector<SparseMatrix>& e,
                                                const std::vector<SparseMatrix>& f) {
    const int n = g.root_system().rank();
    const std::size_t npos = g.num_positive();
    std::vector<SparseMatrix> x(npos), y(npos);
    for (int i = 0; i < n; ++i) {
        x[i] = e[i];
        y[i] = f[i];
    }
    for (std::size_t j = static_cast<std::size_t>(n); j < npos; ++j) {
        const auto& r = g.recipe(j);
        x[j] = commutator(x[r.first], x[r.second]).scaled(r.scale);
        y[j] = commutator(y[r.first], y[r.second]).scaled(-r.scale);
    }
    std::vector<SparseMatrix> out;
    out.reserve(g.dim());
    for (auto& m : x) out.push_back(std::move(m));
    for (auto& m : y) out.push_back(std::move(m));
    for (int i = 0; i < n; ++i) out.push_back(commutator(e[i], f[i]));
    return out;
}

std::shared_ptr<const LieAlgebraBasis> build_chevalley(const RootSystem& rs) {
    auto g = std::make_shared<const LieAlgebraBasis>(rs);
    if (rs.rank() <= 3 && g->jacobi_failures() != 0) throw InternalError("Jacobi identity fails");
    return g;
}

// ParabolicContraction

ParabolicContraction::ParabolicContraction(std::shared_ptr<const LieAlgebraBasis> g, SimpleSubset pi_prime)
    : g_(std::move(g)), pi_prime_(std::move(pi_prime)) {
    const RootSystem& rs = g_->root_system();
    std::sort(pi_prime_.begin(), pi_prime_.end());
    for (int i : pi_prime_)
        if (i < 0 || i >= rs.rank()) throw ConfigError("pi' index out of range");
    for (const Root& r : rs.positive_roots()) {
        bool inside = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (r[i] != 0 && !in_pi_prime(i)) inside = false;
        levi_.push_back(inside);
    }
    for (int a = 0; a < static_cast<int>(g_->dim()); ++a) {
        if (in_r(a)) r_.push_back(a);
        if (in_m(a)) m_.push_back(a);
        if (in_m_minus(a)) m_minus_.push_back(a);
        if (in_p(a)) p_.push_back(a);
        if (in_p_minus(a)) p_minus_.push_back(a);
    }
}

bool ParabolicContraction::in_pi_prime(int i) const {
    return std::binary_search(pi_prime_.begin(), pi_prime_.end(), i);
}

bool ParabolicContraction::in_r(int a) const {
    return g_->kind(a) == BasisKind::Cartan || levi_[g_->root_index(a)];
}

bool ParabolicContraction::in_m(int a) const {
    return g_->kind(a) == BasisKind::Positive && !levi_[g_->root_index(a)];
}

bool ParabolicContraction::in_m_minus(int a) const {
    return g_->kind(a) == BasisKind::Negative && !levi_[g_->root_index(a)];
}

Element ParabolicContraction::bracket_p(int a, int b) const { return g_->bracket_element(a, b); }

Element ParabolicContraction::bracket_ptilde(int a, int b) const {
    if (in_m(a) && in_m(b)) return {};
    return g_->bracket_element(a, b);
}

Element ParabolicContraction::bracket(BracketMode mode, int a, int b) const {
    return mode == BracketMode::Contracted ? bracket_ptilde(a, b) : bracket_p(a, b);
}

Element ParabolicContraction::coadjoint(int x, int y) const {
    Element out = g_->bracket_element(x, y);
    if (in_m(x)) std::erase_if(out, [this](const auto& kv) { return !in_r(kv.first); });
    return out;
}

Element ParabolicContraction::coadjoint(int x, const Element& y) const {
    Element out;
    for (const auto& [b, v] : y) add_scaled(out, coadjoint(x, b), v);
    return out;
}

std::vector<int> ParabolicContraction::derived_generators() const {
    std::vector<int> gens;
    for (int i : pi_prime_) gens.push_back(g_->positive(static_cast<std::size_t>(i)));
    for (int i : pi_prime_) gens.push_back(g_->negative(static_cast<std::size_t>(i)));
    gens.insert(gens.end(), m_.begin(), m_.end());
    return gens;
}

ParabolicContraction split_parabolic(std::shared_ptr<const LieAlgebraBasis> g, SimpleSubset pi_prime) {
    std::sort(pi_prime.begin(), pi_prime.end());
    pi_prime.erase(std::unique(pi_prime.begin(), pi_prime.end()), pi_prime.end());
    if (static_cast<int>(pi_prime.size()) == g->root_system().rank())
        throw ConfigError("parabolic must be proper");
    return ParabolicContraction(std::move(g), std::move(pi_prime));
}

Rational sym_killing_pairing(const ParabolicContraction& P, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw DomainError("sym_killing_pairing: degree mismatch");
    for (int x : a)
        if (!P.in_p(x)) throw DomainError("sym_killing_pairing: first argument not in the contraction");
    for (int y : b)
        if (!P.in_p_minus(y)) throw DomainError("sym_killing_pairing: second argument not in p^-");
    const std::size_t k = a.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    Integer factorial = 1;
    for (std::size_t i = 2; i <= k; ++i) factorial *= static_cast<unsigned long>(i);
    do {
        Rational prod = 1;
        for (std::size_t i = 0; i < k && prod != 0; ++i) prod *= P.algebra().killing(a[i], b[perm[i]]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rational(factorial);
}

namespace {

void record(IdentityCheck& c, bool ok, const std::string& what) {
    ++c.checked;
    if (ok) return;
    if (c.failures++ == 0) c.first_failure = what;
}

}  // namespace

IdentityCheck check_contraction(const ParabolicContraction& P) {
    IdentityCheck c;
    for (int x : P.p_basis())
        for (int y : P.p_basis()) {
            Element expect = P.bracket_p(x, y);
            if (P.in_m(x) && P.in_m(y)) std::erase_if(expect, [&](const auto& kv) { return P.in_m(kv.first); });
            record(c, expect == P.bracket_ptilde(x, y), P.algebra().label(x) + "," + P.algebra().label(y));
        }
    return c;
}

IdentityCheck check_coadjoint_action(const ParabolicContraction& P) {
    IdentityCheck c;
    for (int x : P.p_basis())
        for (int x2 : P.p_basis()) {
            const Element br = P.bracket_ptilde(x, x2);
            for (int y : P.p_minus_basis()) {
                Element lhs = P.coadjoint(x, P.coadjoint(x2, y));
                add_scaled(lhs, P.coadjoint(x2, P.coadjoint(x, y)), -1);
                Element rhs;
                for (const auto& [b, v] : br) add_scaled(rhs, P.coadjoint(b, y), v);
                record(c, lhs == rhs,
                       P.algebra().label(x) + "," + P.algebra().label(x2) + " on " + P.algebra().label(y));
            }
        }
    return c;
}

IdentityCheck check_killing_intertwiner(const ParabolicContraction& P) {
    IdentityCheck c;
    const LieAlgebraBasis& g = P.algebra();
    for (int x : P.p_basis())
        for (int y : P.p_basis()) {
            const Element br = P.bracket_ptilde(x, y);
            const Element ey{{y, 1}};
            for (int z : P.p_minus_basis()) {
                const Rational lhs = g.killing(br, Element{{z, 1}});
                const Rational rhs = -g.killing(ey, P.coadjoint(x, z));
                record(c, lhs == rhs, g.label(x) + "," + g.label(y) + "," + g.label(z));
            }
        }
    return c;
}

bool killing_nondegenerate(const ParabolicContraction& P) {
    const auto& pb = P.p_basis();
    const auto& qb = P.p_minus_basis();
    if (pb.size() != qb.size()) return false;
    Matrix gram(pb.size(), qb.size());
    for (std::size_t i = 0; i < pb.size(); ++i)
        for (std::size_t j = 0; j < qb.size(); ++j) gram(i, j) = P.algebra().killing(pb[i], qb[j]);
    return rank(gram) == pb.size();
}

}  // namespace iwc
