// JSON reports. Rationals are written as strings ("3", "-1/2") so values
// round-trip exactly; subsets and orbit members are 1-based.

#pragma once

#include "iwc/charring.hpp"
#include "iwc/chevalley.hpp"
#include "iwc/hwmod.hpp"
#include "iwc/orbits.hpp"
#include "iwc/syinv.hpp"

#include <json.hpp>

namespace iwc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);
/// {"fundamental": [...], "simple_root": [...]}
Json weight_both_json(const RootSystem& rs, const Weight& w);

Json subset_json(const SimpleSubset& s);
SimpleSubset subset_from_json(const Json& j);

Json orbits_json(const RootSystem& rs, const std::vector<OrbitDatum>& orbits);
std::vector<OrbitDatum> orbits_from_json(const Json& j);

Json character_json(const FormalCharacter& c);
FormalCharacter character_from_json(const Json& j);

Json report_json(const SemiInvariantReport& r);
SemiInvariantReport report_from_json(const Json& j);

Json describe_json(const ParabolicContraction& P);
Json semigroup_json(const SemigroupCheck& c, std::int64_t cutoff);

struct HwmodSummary {
    Weight lambda;
    std::size_t dim = 0;
    Integer weyl = 0;
    std::vector<std::pair<Weight, std::size_t>> weight_dims;
    std::size_t levi_dim = 0;
    std::vector<std::vector<std::size_t>> gr_dims;  // per k, aligned with weight_dims
    bool exhaustive = false;
    bool annihilator = false;
    bool graded_identity = false;
    std::string graded_detail;
    InvariantResult invariants;
    bool in_D = false;
    Weight expected_weight;   // w0' lambda - w0 lambda
    bool consistent = false;  // invariants.dim == [in_D] and weight matches when 1
};

HwmodSummary summarize_hwmod(const WeightModule& M, const ParabolicContraction& P);
Json hwmod_json(const HwmodSummary& s);

/// Common header: schema_version, command, type, pi_prime.
Json report_header(const std::string& command, const RootSystem& rs, const SimpleSubset& pi_prime);

}  // namespace iwc
