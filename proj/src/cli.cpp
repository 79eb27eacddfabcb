#include "iwc/cli.hpp"

#include "iwc/charring.hpp"
#include "iwc/chevalley.hpp"
#include "iwc/errors.hpp"
#include "iwc/hwmod.hpp"
#include "iwc/orbits.hpp"
#include "iwc/report.hpp"
#include "iwc/syinv.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace iwc {

namespace {

struct Setup {
    RootSystem rs;
    std::shared_ptr<const LieAlgebraBasis> g;
    SimpleSubset pi_prime;
};

Setup make_setup(const RunConfig& cfg) {
    if (cfg.type.empty()) throw ConfigError("--type is required");
    const SimpleType t = SimpleType::parse(cfg.type);
    if (t.rank > cfg.max_rank)
        throw ConfigError("rank " + std::to_string(t.rank) + " is above --max-rank " + std::to_string(cfg.max_rank));
    RootSystem rs = build_root_system(t);
    SimpleSubset pp = parse_subset(cfg.pi_prime, rs.rank());
    if (static_cast<int>(pp.size()) == rs.rank()) throw ConfigError("parabolic must be proper");
    auto g = build_chevalley(rs);
    return {std::move(rs), std::move(g), std::move(pp)};
}

std::string fmt_weight(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (w[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (w[i] != 1) s += to_string(w[i]) + "*";
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::int64_t max_delta_deg(const RootSystem& rs, const std::vector<OrbitDatum>& orbits) {
    std::int64_t d = 0;
    for (const auto& o : orbits) d = std::max(d, rs.deg(o.delta_gamma));
    return d;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string check_line(const std::string& name, const IdentityCheck& c) {
    std::ostringstream s;
    s << "  " << name << ": " << c.checked << " checked, " << c.failures << " failures";
    if (!c.ok()) s << " (first: " << c.first_failure << ")";
    return s.str();
}

int cmd_describe(const RunConfig& cfg, std::ostream& out) {
    const Setup s = make_setup(cfg);
    const ParabolicContraction P = split_parabolic(s.g, s.pi_prime);
    const Json d = describe_json(P);
    const auto& checks = d.at("checks");
    const bool ok = checks.at("contraction").at("failures") == 0 && checks.at("coadjoint_action").at("failures") == 0 &&
                    checks.at("killing_intertwiner").at("failures") == 0 &&
                    checks.at("killing_nondegenerate").get<bool>();
    if (cfg.format == "json") {
        Json j = report_header("describe", s.rs, s.pi_prime);
        j.update(d);
        emit(out, j);
    } else {
        out << "type " << s.rs.type().name() << ", pi' = " << subset_str(s.pi_prime) << "\n";
        out << "dim g = " << s.g->dim() << ", positive roots = " << s.rs.num_positive() << "\n";
        out << "dim p = " << P.p_basis().size() << ", dim r = " << P.r_basis().size()
            << ", dim m = " << P.m_basis().size() << ", dim m^- = " << P.m_minus_basis().size() << "\n";
        if (P.pi_prime().empty()) out << "p is a Borel subalgebra\n";
        out << "m basis:";
        for (int a : P.m_basis()) out << " " << s.g->label(a);
        out << "\nchecks:\n";
        out << check_line("contracted bracket", check_contraction(P)) << "\n";
        out << check_line("coadjoint action", check_coadjoint_action(P)) << "\n";
        out << check_line("Killing intertwiner", check_killing_intertwiner(P)) << "\n";
        out << "  Killing pairing on p x p^- nondegenerate: " << (killing_nondegenerate(P) ? "yes" : "no") << "\n";
    }
    return ok ? kExitOk : kExitInternal;
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out) {
    const Setup s = make_setup(cfg);
    const auto orbits = orbit_set(s.rs, s.pi_prime);
    const std::int64_t cutoff = cfg.trunc >= 0 ? cfg.trunc : 2 * s.rs.deg(s.rs.rho());
    const SemigroupCheck sc = check_semigroup(s.rs, s.pi_prime, cutoff);
    if (cfg.format == "json") {
        Json j = report_header("orbits", s.rs, s.pi_prime);
        Json inv_i = Json::array(), inv_j = Json::array();
        for (int a = 0; a < s.rs.rank(); ++a) {
            inv_i.push_back(involution_i(s.rs, s.pi_prime, a) + 1);
            inv_j.push_back(involution_j(s.rs, a) + 1);
        }
        j["i"] = inv_i;
        j["j"] = inv_j;
        j["orbits"] = orbits_json(s.rs, orbits);
        j["semigroup"] = semigroup_json(sc, cutoff);
        emit(out, j);
    } else {
        out << "type " << s.rs.type().name() << ", pi' = " << subset_str(s.pi_prime) << "\n";
        out << "i:";
        for (int a = 0; a < s.rs.rank(); ++a) out << " " << a + 1 << "->" << involution_i(s.rs, s.pi_prime, a) + 1;
        out << "\nj:";
        for (int a = 0; a < s.rs.rank(); ++a) out << " " << a + 1 << "->" << involution_j(s.rs, a) + 1;
        out << "\n" << orbits.size() << " orbit(s)\n";
        for (const auto& o : orbits)
            out << "  " << subset_str(o.gamma) << ": d = " << fmt_weight(o.d_gamma) << ", delta = " << fmt_weight(o.delta_gamma)
                << ", deg(delta) = " << s.rs.deg(o.delta_gamma) << "\n";
        out << "semigroup check up to deg " << cutoff << ": " << sc.tested << " dominant weights, " << sc.members
            << " in D, " << sc.counterexamples.size() << " counterexamples\n";
    }
    return sc.counterexamples.empty() ? kExitOk : kExitInternal;
}

int cmd_lower_bound(const RunConfig& cfg, std::ostream& out) {
    const Setup s = make_setup(cfg);
    const auto orbits = orbit_set(s.rs, s.pi_prime);
    const std::int64_t trunc = cfg.trunc >= 0 ? cfg.trunc : max_delta_deg(s.rs, orbits);
    const FormalCharacter c = lower_bound_character(s.rs, orbits, trunc);
    if (cfg.format == "json") {
        Json j = report_header("lower-bound", s.rs, s.pi_prime);
        j["orbits"] = orbits_json(s.rs, orbits);
        j["character"] = character_json(c);
        emit(out, j);
    } else {
        out << "lower bound prod (1 - e^delta)^-1 up to deg " << trunc << ":\n";
        for (const auto& [w, n] : c.coeffs())
            out << "  " << n.get_str() << " e^(" << fmt_weight(w) << ")  deg " << to_string(c.deg(w)) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Setup s = make_setup(cfg);
    const ParabolicContraction P = split_parabolic(s.g, s.pi_prime);
    const auto orbits = orbit_set(s.rs, s.pi_prime);
    const std::int64_t trunc = cfg.trunc >= 0 ? cfg.trunc : max_delta_deg(s.rs, orbits);
    const SymmetricAlgebra S(P);
    const SemiInvariantReport rep = verify_lower_bound(S, orbits, trunc, cfg.max_degree);
    Json j = report_header("verify", s.rs, s.pi_prime);
    j["orbits"] = orbits_json(s.rs, orbits);
    j["report"] = report_json(rep);
    std::string equality;
    if (cfg.character) {
        const SyCharacter sy = semi_invariant_character(S, trunc, cfg.max_degree);
        const FormalCharacter lb = lower_bound_character(s.rs, orbits, trunc);
        const bool leq = char_leq(lb, sy.chi).leq;
        const bool eq = sy.outside.empty() && lb == sy.chi;
        j["character"] = {{"semi_invariants", character_json(sy.chi)},
                          {"outside_positive_cone", sy.outside.size()},
                          {"lower_bound_leq", leq},
                          {"equal_to_lower_bound", eq}};
        equality = eq ? "character of semi-invariants up to polynomial degree " + std::to_string(cfg.max_degree) +
                            " equals the lower bound"
                      : "character of semi-invariants up to polynomial degree " + std::to_string(cfg.max_degree) +
                            " exceeds the lower bound somewhere";
    }
    if (cfg.format == "json") {
        emit(out, j);
    } else {
        out << "type " << s.rs.type().name() << ", pi' = " << subset_str(s.pi_prime) << ", trunc " << trunc
            << ", polynomial degree <= " << cfg.max_degree << "\n";
        for (const auto& r : rep.rows) {
            out << "  e^(" << fmt_weight(r.weight) << "): bound " << r.bound.get_str() << ", found " << r.found;
            if (!r.degrees.empty()) {
                out << " at degree";
                for (int d : r.degrees) out << " " << d;
            }
            out << " -> " << (r.confirmed ? "confirmed" : "not yet found (searched to degree " +
                                                              std::to_string(r.searched_to) + ")")
                << "\n";
        }
        out << (rep.all_confirmed() ? "all weights confirmed" : "incomplete") << "\n";
        if (!equality.empty()) out << equality << "\n";
    }
    return rep.all_confirmed() ? kExitOk : kExitIncomplete;
}

int cmd_hwmod(const RunConfig& cfg, std::ostream& out) {
    const Setup s = make_setup(cfg);
    const ParabolicContraction P = split_parabolic(s.g, s.pi_prime);
    if (cfg.lambda.empty()) throw ConfigError("--lambda is required");
    Vec coords;
    std::stringstream ss(cfg.lambda);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(parse_rational(tok));
    if (static_cast<int>(coords.size()) != s.rs.rank())
        throw ConfigError("--lambda needs " + std::to_string(s.rs.rank()) + " coordinates");
    const Weight lambda(coords);
    if (!lambda.is_dominant()) throw ConfigError("--lambda must be dominant");
    const WeightModule M = build_irreducible(s.g, lambda, cfg.dim_ceiling);
    const HwmodSummary h = summarize_hwmod(M, P);
    const bool ok = h.exhaustive && h.annihilator && h.graded_identity && h.consistent;
    if (cfg.format == "json") {
        Json j = report_header("hwmod", s.rs, s.pi_prime);
        j.update(hwmod_json(h));
        emit(out, j);
    } else {
        out << "V(" << fmt_weight(lambda) << "): dim " << h.dim << " (Weyl " << h.weyl.get_str() << "), "
            << h.weight_dims.size() << " weights\n";
        out << "V' dim " << h.levi_dim << "; filtration levels";
        for (const auto& row : h.gr_dims) {
            std::size_t t = 0;
            for (auto d : row) t += d;
            out << " " << t;
        }
        out << (h.exhaustive ? " (exhaustive)" : " (not exhaustive)") << "\n";
        out << "annihilator check: " << (h.annihilator ? "pass" : "FAIL") << "\n";
        out << "graded identity: " << (h.graded_identity ? "pass" : "FAIL " + h.graded_detail) << "\n";
        out << "invariant dim " << h.invariants.dim;
        for (const auto& [w, d] : h.invariants.by_weight) out << " (weight " << fmt_weight(w) << ")";
        out << "; lambda " << (h.in_D ? "in D" : "not in D") << ", expected weight " << fmt_weight(h.expected_weight)
            << "\n";
        out << (h.consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return ok ? kExitOk : kExitInternal;
}

struct SelfTestLine {
    std::string name;
    bool ok;
};

std::vector<SelfTestLine> selftest_pair(const std::string& type, const std::string& pi, std::mt19937_64& rng) {
    std::vector<SelfTestLine> lines;
    RunConfig cfg;
    cfg.type = type;
    cfg.pi_prime = pi;
    const Setup s = make_setup(cfg);
    const std::string tag = type + "/" + subset_str(s.pi_prime) + " ";
    lines.push_back({tag + "jacobi", s.rs.rank() > 3 || s.g->jacobi_failures() == 0});
    const ParabolicContraction P = split_parabolic(s.g, s.pi_prime);
    lines.push_back({tag + "contraction", check_contraction(P).ok()});
    lines.push_back({tag + "coadjoint action", check_coadjoint_action(P).ok()});
    lines.push_back({tag + "killing intertwiner", check_killing_intertwiner(P).ok()});
    const auto orbits = orbit_set(s.rs, s.pi_prime);
    lines.push_back({tag + "semigroup", check_semigroup(s.rs, s.pi_prime, 2 * s.rs.deg(s.rs.rho())).counterexamples.empty()});
    const SymmetricAlgebra S(P);
    const auto rep = verify_lower_bound(S, orbits, max_delta_deg(s.rs, orbits), 8);
    lines.push_back({tag + "lower bound", rep.all_confirmed()});
    // Products of random pairs of low-degree semi-invariants stay semi-invariant.
    std::vector<Polynomial> found;
    for (int k = 1; k <= 3; ++k)
        for (const auto& sp : semi_invariants(S, k))
            for (std::size_t i = 0; i < sp.basis.size(); ++i) found.push_back(sp.polynomial(i));
    bool closed = true;
    if (!found.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
        for (int t = 0; t < 8; ++t) closed = closed && S.is_semi_invariant(poly_mul(found[pick(rng)], found[pick(rng)]));
    }
    lines.push_back({tag + "product closure", closed});
    bool hw = true;
    for (const Weight& l : dominant_weights_with_dim_at_most(s.rs, 30)) {
        const WeightModule M = build_irreducible(s.g, l);
        const HwmodSummary h = summarize_hwmod(M, P);
        hw = hw && h.exhaustive && h.annihilator && h.graded_identity && h.consistent;
    }
    lines.push_back({tag + "highest weight modules", hw});
    return lines;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::pair<std::string, std::string>> pairs;
    if (cfg.type.empty())
        pairs = {{"A1", ""}, {"A2", ""}, {"A2", "1"}, {"A3", "1,2"}, {"B2", "1"}, {"B2", "2"}};
    else
        pairs = {{cfg.type, cfg.pi_prime}};
    std::vector<SelfTestLine> lines;
    for (const auto& [t, p] : pairs)
        for (auto& l : selftest_pair(t, p, rng)) lines.push_back(std::move(l));
    const bool ok = std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.ok; });
    if (cfg.format == "json") {
        Json j{{"schema_version", kSchemaVersion}, {"command", "selftest"}, {"seed", cfg.seed}};
        Json a = Json::array();
        for (const auto& l : lines) a.push_back({{"check", l.name}, {"ok", l.ok}});
        j["checks"] = a;
        j["ok"] = ok;
        emit(out, j);
    } else {
        for (const auto& l : lines) out << (l.ok ? "PASS " : "FAIL ") << l.name << "\n";
    }
    return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "text" && cfg.format != "json") throw ConfigError("--format must be text or json");
        if (cfg.command == "describe") return cmd_describe(cfg, out);
        if (cfg.command == "orbits") return cmd_orbits(cfg, out);
        if (cfg.command == "lower-bound") return cmd_lower_bound(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "hwmod") return cmd_hwmod(cfg, out);
        if (cfg.command == "selftest") return cmd_selftest(cfg, out);
        throw ConfigError("unknown command '" + cfg.command + "'");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "incomplete: " << e.what() << "\n";
        return kExitIncomplete;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parabolic contractions: orbit semigroup, lower-bound characters, semi-invariants, "
                 "highest-weight module checks"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"describe", "root system, parabolic split, bracket identity checks"},
        {"orbits", "orbits of <ij>, generators d and weights delta, semigroup check up to --trunc"},
        {"lower-bound", "expand prod (1 - e^delta)^-1 up to deg --trunc"},
        {"verify", "search semi-invariants confirming the lower bound up to polynomial degree --max-degree"},
        {"hwmod", "build V(--lambda) and run the filtration and invariant checks"},
        {"selftest", "quick checks over the default test matrix, or over --type/--pi-prime"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--type", cfg.type, "simple type, e.g. A2, B3, G2");
        sub->add_option("--pi-prime", cfg.pi_prime, "simple roots of the Levi factor, 1-based Bourbaki, e.g. 1,3");
        sub->add_option("--trunc", cfg.trunc, "bound on deg for characters and semigroup checks");
        sub->add_option("--max-degree", cfg.max_degree, "polynomial degree ceiling for the semi-invariant search")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--dim-ceiling", cfg.dim_ceiling, "largest module dimension hwmod will build");
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-rank", cfg.max_rank, "refuse types of larger rank");
        sub->add_option("--seed", cfg.seed, "seed for randomized selftest sampling");
        if (name == "hwmod") sub->add_option("--lambda", cfg.lambda, "highest weight, fundamental coordinates, e.g. 1,1");
        if (name == "verify")
            sub->add_flag("--character", cfg.character, "also compute the full semi-invariant character and compare");
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    return run_command(cfg, out, err);
}

}  // namespace iwc
