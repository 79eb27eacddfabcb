#include "iwc/report.hpp"

#include "iwc/errors.hpp"

namespace iwc {

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& x : w.coords()) a.push_back(to_string(x));
    return a;
}

Weight weight_from_json(const Json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return Weight(std::move(v));
}

Json weight_both_json(const RootSystem& rs, const Weight& w) {
    Json a = Json::array();
    for (const auto& x : rs.to_root_coords(w)) a.push_back(to_string(x));
    return Json{{"fundamental", weight_json(w)}, {"simple_root", a}};
}

Json subset_json(const SimpleSubset& s) {
    Json a = Json::array();
    for (int i : s) a.push_back(i + 1);
    return a;
}

SimpleSubset subset_from_json(const Json& j) {
    SimpleSubset s;
    for (const auto& x : j) s.push_back(x.get<int>() - 1);
    return s;
}

Json orbits_json(const RootSystem& rs, const std::vector<OrbitDatum>& orbits) {
    Json a = Json::array();
    for (const auto& o : orbits)
        a.push_back({{"gamma", subset_json(o.gamma)},
                     {"d_gamma", weight_both_json(rs, o.d_gamma)},
                     {"delta_gamma", weight_both_json(rs, o.delta_gamma)},
                     {"deg_delta", rs.deg(o.delta_gamma)}});
    return a;
}

std::vector<OrbitDatum> orbits_from_json(const Json& j) {
    std::vector<OrbitDatum> out;
    for (const auto& o : j)
        out.push_back({subset_from_json(o.at("gamma")), weight_from_json(o.at("d_gamma").at("fundamental")),
                       weight_from_json(o.at("delta_gamma").at("fundamental"))});
    return out;
}

Json character_json(const FormalCharacter& c) {
    Json terms = Json::array();
    for (const auto& [w, n] : c.coeffs()) terms.push_back({{"weight", weight_json(w)}, {"coefficient", n.get_str()}});
    Json deg = Json::array();
    for (const auto& x : c.deg_coefficients()) deg.push_back(to_string(x));
    return Json{{"trunc", c.trunc()}, {"deg_coefficients", deg}, {"terms", terms}};
}

FormalCharacter character_from_json(const Json& j) {
    Vec deg;
    for (const auto& x : j.at("deg_coefficients")) deg.push_back(parse_rational(x.get<std::string>()));
    FormalCharacter c(deg, j.at("trunc").get<std::int64_t>());
    for (const auto& t : j.at("terms"))
        c.add(weight_from_json(t.at("weight")), Integer(t.at("coefficient").get<std::string>()));
    return c;
}

Json report_json(const SemiInvariantReport& r) {
    Json rows = Json::array();
    for (const auto& s : r.rows)
        rows.push_back({{"weight", weight_json(s.weight)},
                        {"bound", s.bound.get_str()},
                        {"found", s.found},
                        {"degrees", s.degrees},
                        {"searched_to", s.searched_to},
                        {"status", s.confirmed ? "confirmed" : "not-yet-found"}});
    return Json{{"trunc", r.trunc},
                {"max_degree", r.max_degree},
                {"status", r.all_confirmed() ? "confirmed" : "incomplete"},
                {"weights", rows}};
}

SemiInvariantReport report_from_json(const Json& j) {
    SemiInvariantReport r;
    r.trunc = j.at("trunc").get<std::int64_t>();
    r.max_degree = j.at("max_degree").get<int>();
    for (const auto& row : j.at("weights")) {
        WeightStatus s;
        s.weight = weight_from_json(row.at("weight"));
        s.bound = Integer(row.at("bound").get<std::string>());
        s.found = row.at("found").get<std::size_t>();
        s.degrees = row.at("degrees").get<std::vector<int>>();
        s.searched_to = row.at("searched_to").get<int>();
        s.confirmed = row.at("status").get<std::string>() == "confirmed";
        r.rows.push_back(std::move(s));
    }
    return r;
}

Json describe_json(const ParabolicContraction& P) {
    const LieAlgebraBasis& g = P.algebra();
    const RootSystem& rs = P.root_system();
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots()) roots.push_back(r);
    auto labels = [&](const std::vector<int>& idx) {
        Json a = Json::array();
        for (int i : idx) a.push_back(g.label(i));
        return a;
    };
    const auto contraction = check_contraction(P);
    const auto coadjoint = check_coadjoint_action(P);
    const auto intertwiner = check_killing_intertwiner(P);
    auto check = [](const IdentityCheck& c) {
        return Json{{"checked", c.checked}, {"failures", c.failures}, {"first_failure", c.first_failure}};
    };
    return Json{{"rank", rs.rank()},
                {"dim_g", g.dim()},
                {"positive_roots", roots},
                {"highest_root", rs.highest_root()},
                {"dim_p", P.p_basis().size()},
                {"dim_r", P.r_basis().size()},
                {"dim_m", P.m_basis().size()},
                {"dim_m_minus", P.m_minus_basis().size()},
                {"r_basis", labels(P.r_basis())},
                {"m_basis", labels(P.m_basis())},
                {"checks",
                 {{"contraction", check(contraction)},
                  {"coadjoint_action", check(coadjoint)},
                  {"killing_intertwiner", check(intertwiner)},
                  {"killing_nondegenerate", killing_nondegenerate(P)}}}};
}

Json semigroup_json(const SemigroupCheck& c, std::int64_t cutoff) {
    Json cex = Json::array();
    for (const auto& w : c.counterexamples) cex.push_back(weight_json(w));
    return Json{{"cutoff_deg", cutoff}, {"tested", c.tested}, {"members", c.members}, {"counterexamples", cex}};
}

HwmodSummary summarize_hwmod(const WeightModule& M, const ParabolicContraction& P) {
    const RootSystem& rs = P.root_system();
    HwmodSummary s;
    s.lambda = M.highest;
    s.dim = M.dim();
    s.weyl = weyl_dim(rs, M.highest);
    for (std::size_t w = 0; w < M.weights.size(); ++w) s.weight_dims.emplace_back(M.weights[w], M.dims[w]);
    s.levi_dim = levi_submodule(M, P).dim();
    const PBWFiltration F = pbw_filtration(M, P);
    s.gr_dims = F.gr_dims;
    s.exhaustive = F.exhaustive;
    s.annihilator = check_annihilator(M, P);
    const GradedCheck gc = check_graded_identity(M, P, F);
    s.graded_identity = gc.ok;
    s.graded_detail = gc.detail;
    s.invariants = matrix_coeff_invariant_dim(M, P);
    s.in_D = is_in_D(rs, P.pi_prime(), M.highest);
    s.expected_weight = generator_weight(rs, P.pi_prime(), M.highest);
    s.consistent = s.invariants.dim == (s.in_D ? 1u : 0u) &&
                   (s.invariants.dim == 0 ||
                    (s.invariants.by_weight.size() == 1 && s.invariants.by_weight[0].first == s.expected_weight));
    return s;
}

Json hwmod_json(const HwmodSummary& s) {
    Json wd = Json::array();
    for (const auto& [w, d] : s.weight_dims) wd.push_back({{"weight", weight_json(w)}, {"dim", d}});
    Json inv = Json::array();
    for (const auto& [w, d] : s.invariants.by_weight) inv.push_back({{"weight", weight_json(w)}, {"dim", d}});
    Json gr_total = Json::array();
    for (const auto& row : s.gr_dims) {
        std::size_t t = 0;
        for (auto d : row) t += d;
        gr_total.push_back(t);
    }
    return Json{{"lambda", weight_json(s.lambda)},
                {"dim", s.dim},
                {"weyl_dim", s.weyl.get_str()},
                {"weight_dims", wd},
                {"levi_submodule_dim", s.levi_dim},
                {"gr_dims_total", gr_total},
                {"gr_dims", s.gr_dims},
                {"filtration_exhaustive", s.exhaustive},
                {"annihilator", s.annihilator},
                {"graded_identity", s.graded_identity},
                {"graded_detail", s.graded_detail},
                {"invariant_dim", s.invariants.dim},
                {"invariant_weights", inv},
                {"in_D", s.in_D},
                {"expected_weight", weight_json(s.expected_weight)},
                {"consistent", s.consistent}};
}

Json report_header(const std::string& command, const RootSystem& rs, const SimpleSubset& pi_prime) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"type", rs.type().name()},
                {"pi_prime", subset_json(pi_prime)}};
}

}  // namespace iwc
