// Irreducible highest-weight modules built from the Cartan matrix alone.
//
// Weight spaces are constructed top-down: V(lambda)_mu is the span of the
// vectors f_j v (v in V(lambda)_{mu + alpha_j}), and below the top a vector
// vanishes exactly when every e_i kills it. Each candidate f_j v is therefore
// identified with its image under (e_1, ..., e_n), which is computable from
// the already-built higher weight spaces via e_i f_j = f_j e_i + delta_ij h_i.
//
// No structure constants are needed, so this construction is what the
// Chevalley basis is extracted from (as a faithful adjoint representation).

#pragma once

#include "iwc/linalg.hpp"
#include "iwc/rootsys.hpp"

#include <map>
#include <vector>

namespace iwc {

struct LayeredModule {
    Weight highest;
    std::vector<Weight> simple_roots;
    std::vector<Weight> weights;  // by depth below the highest weight
    std::map<Weight, int> index;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;  // position of each weight space in the flat basis
    // raise[i][w]: V_w -> V_{w + alpha_i}; lower[i][w]: V_w -> V_{w - alpha_i}.
    // Matrices are empty (0 x 0) when the target weight is absent.
    std::vector<std::vector<Matrix>> raise;
    std::vector<std::vector<Matrix>> lower;

    std::size_t dim() const { return offsets.empty() ? 0 : offsets.back() + dims.back(); }
    int weight_index(const Weight& w) const;

    /// Flat matrices of e_i, f_i, h_i on the whole module.
    Matrix e_matrix(int i) const;
    Matrix f_matrix(int i) const;
    Matrix h_matrix(int i) const;
};

LayeredModule build_layered_module(const RootSystem& rs, const Weight& lambda, std::size_t dim_ceiling = 4096);

}  // namespace iwc
