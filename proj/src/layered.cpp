#include "iwc/layered.hpp"

#include "iwc/errors.hpp"

#include <set>

namespace iwc {

int LayeredModule::weight_index(const Weight& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
}

namespace {

Matrix flatten(const LayeredModule& m, const std::vector<Matrix>& blocks, const Weight& shift) {
    Matrix out(m.dim(), m.dim());
    for (std::size_t w = 0; w < m.weights.size(); ++w) {
        const Matrix& b = blocks[w];
        if (b.rows() == 0 || b.cols() == 0) continue;
        const int t = m.weight_index(m.weights[w] + shift);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(m.offsets[t] + r, m.offsets[w] + c) = b(r, c);
    }
    return out;
}

}  // namespace

Matrix LayeredModule::e_matrix(int i) const { return flatten(*this, raise[i], simple_roots[i]); }
Matrix LayeredModule::f_matrix(int i) const { return flatten(*this, lower[i], -simple_roots[i]); }

Matrix LayeredModule::h_matrix(int i) const {
    Matrix out(dim(), dim());
    for (std::size_t w = 0; w < weights.size(); ++w)
        for (std::size_t k = 0; k < dims[w]; ++k) out(offsets[w] + k, offsets[w] + k) = weights[w][i];
    return out;
}

LayeredModule build_layered_module(const RootSystem& rs, const Weight& lambda, std::size_t dim_ceiling) {
    if (!lambda.is_dominant()) throw DomainError("highest weight " + lambda.str() + " is not dominant");
    const int n = rs.rank();
    LayeredModule m;
    m.highest = lambda;
    for (int i = 0; i < n; ++i) m.simple_roots.push_back(rs.simple_root(i));
    m.raise.assign(n, {});
    m.lower.assign(n, {});

    auto add_weight = [&](const Weight& w, std::size_t d) {
        m.index[w] = static_cast<int>(m.weights.size());
        m.offsets.push_back(m.weights.empty() ? 0 : m.offsets.back() + m.dims.back());
        m.weights.push_back(w);
        m.dims.push_back(d);
        for (int i = 0; i < n; ++i) {
            m.raise[i].emplace_back();
            m.lower[i].emplace_back();
        }
        if (m.dim() > dim_ceiling) throw ResourceError("module dimension exceeds ceiling " + std::to_string(dim_ceiling));
    };
    add_weight(lambda, 1);

    std::vector<Weight> level{lambda};
    while (!level.empty()) {
        std::set<Weight> candidates;
        for (const Weight& v : level)
            for (int j = 0; j < n; ++j) candidates.insert(v - m.simple_roots[j]);
        std::vector<Weight> next;
        for (const Weight& mu : candidates) {
            // Candidate vectors f_j b, identified with their e-images.
            std::vector<int> up(n, -1);
            std::size_t image_dim = 0;
            std::vector<std::size_t> image_off(n, 0);
            for (int i = 0; i < n; ++i) {
                up[i] = m.weight_index(mu + m.simple_roots[i]);
                image_off[i] = image_dim;
                if (up[i] >= 0) image_dim += m.dims[up[i]];
            }
            struct Candidate {
                int j;
                std::size_t b;
                Vec image;
            };
            std::vector<Candidate> cands;
            for (int j = 0; j < n; ++j) {
                if (up[j] < 0) continue;
                const int src = up[j];  // mu + alpha_j
                for (std::size_t b = 0; b < m.dims[src]; ++b) {
                    Vec image(image_dim);
                    for (int i = 0; i < n; ++i) {
                        if (up[i] < 0) continue;
                        // f_j (e_i b)
                        const Matrix& rise = m.raise[i][src];
                        const int top = m.weight_index(m.weights[src] + m.simple_roots[i]);
                        if (top >= 0 && rise.rows() > 0) {
                            const Matrix& fall = m.lower[j][top];
                            for (std::size_t r = 0; r < fall.rows(); ++r) {
                                Rational acc = 0;
                                for (std::size_t k = 0; k < rise.rows(); ++k)
                                    if (rise(k, b) != 0) acc += fall(r, k) * rise(k, b);
                                image[image_off[i] + r] += acc;
                            }
                        }
                        if (i == j) image[image_off[i] + b] += m.weights[src][i];
                    }
                    cands.push_back({j, b, std::move(image)});
                }
            }
            Subspace span(image_dim);
            std::vector<std::size_t> chosen;
            for (std::size_t c = 0; c < cands.size(); ++c)
                if (span.add(cands[c].image)) chosen.push_back(c);
            if (chosen.empty()) continue;

            add_weight(mu, chosen.size());
            const int here = m.weight_index(mu);
            next.push_back(mu);

            Matrix basis(image_dim, chosen.size());
            for (std::size_t k = 0; k < chosen.size(); ++k)
                for (std::size_t r = 0; r < image_dim; ++r) basis(r, k) = cands[chosen[k]].image[r];
            for (int i = 0; i < n; ++i) {
                if (up[i] < 0) continue;
                Matrix e(m.dims[up[i]], chosen.size());
                for (std::size_t k = 0; k < chosen.size(); ++k)
                    for (std::size_t r = 0; r < m.dims[up[i]]; ++r) e(r, k) = basis(image_off[i] + r, k);
                m.raise[i][here] = std::move(e);
                m.lower[i][up[i]] = Matrix(chosen.size(), m.dims[up[i]]);
            }
            for (const auto& c : cands) {
                auto coords = solve(basis, c.image);
                if (!coords) throw InternalError("layered module: candidate outside chosen span");
                for (std::size_t k = 0; k < chosen.size(); ++k) m.lower[c.j][up[c.j]](k, c.b) = (*coords)[k];
            }
        }
        level = std::move(next);
    }
    return m;
}

}  // namespace iwc
