#include "iwc/charring.hpp"

#include "iwc/errors.hpp"

#include <algorithm>

namespace iwc {

FormalCharacter::FormalCharacter(Vec deg_coeffs, std::int64_t trunc) : deg_(std::move(deg_coeffs)), trunc_(trunc) {
    if (trunc < 0) throw DomainError("negative truncation");
}

FormalCharacter FormalCharacter::one(const RootSystem& rs, std::int64_t trunc) {
    return monomial(rs, Weight(static_cast<std::size_t>(rs.rank())), trunc);
}

FormalCharacter FormalCharacter::monomial(const RootSystem& rs, const Weight& w, std::int64_t trunc, long coeff) {
    FormalCharacter c(rs.deg_coefficients(), trunc);
    c.add(w, coeff);
    return c;
}

Rational FormalCharacter::deg(const Weight& w) const {
    Rational s = 0;
    for (std::size_t i = 0; i < deg_.size(); ++i) s += deg_[i] * w[i];
    return s;
}

void FormalCharacter::add(const Weight& w, const Integer& c) {
    if (c == 0 || deg(w) > trunc_) return;
    Integer& slot = coeffs_[w];
    slot += c;
    if (slot == 0) coeffs_.erase(w);
    else if (slot < 0) throw DomainError("negative coefficient at " + w.str());
}

Integer FormalCharacter::operator[](const Weight& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

bool FormalCharacter::operator==(const FormalCharacter& o) const {
    return trunc_ == o.trunc_ && deg_ == o.deg_ && coeffs_ == o.coeffs_;
}

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.deg_coefficients() != b.deg_coefficients()) throw DomainError("characters over different root systems");
    FormalCharacter out(a.deg_coefficients(), std::min(a.trunc(), b.trunc()));
    for (const auto& [u, x] : a.coeffs())
        for (const auto& [v, y] : b.coeffs()) out.add(u + v, x * y);
    return out;
}

FormalCharacter lower_bound_character(const RootSystem& rs, const std::vector<OrbitDatum>& orbits, std::int64_t trunc) {
    FormalCharacter acc = FormalCharacter::one(rs, trunc);
    for (const auto& o : orbits) {
        const std::int64_t step = rs.deg(o.delta_gamma);
        if (step <= 0) throw InternalError("orbit weight with nonpositive deg");
        FormalCharacter series(rs.deg_coefficients(), trunc);
        Weight w(static_cast<std::size_t>(rs.rank()));
        for (std::int64_t d = 0; d <= trunc; d += step, w += o.delta_gamma) series.add(w, 1);
        acc = char_mul(acc, series);
    }
    return acc;
}

CharComparison char_leq(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.trunc() != b.trunc()) throw DomainError("char_leq: truncation mismatch");
    CharComparison r;
    for (const auto& [w, c] : a.coeffs())
        if (c > b[w]) {
            r.leq = false;
            r.witness = w;
            break;
        }
    return r;
}

Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw DomainError("weyl_dim: weight " + lambda.str() + " is not dominant");
    const Weight rho = rs.rho();
    const Weight shifted = lambda + rho;
    Rational prod = 1;
    for (const Root& beta : rs.positive_roots()) {
        const Weight b = rs.root_weight(beta);
        prod *= rs.inner_product(shifted, b) / rs.inner_product(rho, b);
    }
    if (!is_integral(prod)) throw InternalError("weyl_dim: non-integral value");
    return prod.get_num();
}

std::vector<Weight> dominant_weights_with_dim_at_most(const RootSystem& rs, const Integer& bound) {
    std::vector<Weight> out;
    Weight cur(static_cast<std::size_t>(rs.rank()));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rs.rank()) {
            out.push_back(cur);
            return;
        }
        for (long m = 0;; ++m) {
            cur[i] = m;
            Weight floor = cur;  // later coordinates at zero
            if (weyl_dim(rs, floor) > bound) break;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace iwc
