#pragma once

#include <json.hpp>

#include "lgrexc/bbw.hpp"
#include "lgrexc/kclass.hpp"
#include "lgrexc/numeric.hpp"
#include "lgrexc/staircase.hpp"

namespace lgrexc {

/// BigInt values render as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that, so output stays loss-free and stable.
inline nlohmann::json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

inline nlohmann::json to_json(const KClass& x) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [label, coeff] : x.terms()) j[to_string(label)] = coeff;
    return j;
}

inline nlohmann::json to_json(const CohomCell& cell, int n, Group g) {
    if (cell.is_zero()) return {{"zero", true}};
    nlohmann::json j;
    j["degree"] = cell.degree;
    j["weight"] = to_string(cell.weight);
    j["dim"] = big_to_json(g == Group::sp ? dim_sp(cell.weight, n)
                                          : dim_gl(cell.weight, n));
    return j;
}

inline nlohmann::json to_json(const std::map<int, VirtualModule>& graded, int n) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [degree, module] : graded) {
        for (const auto& [weight, mult] : module.terms()) {
            cells.push_back({{"degree", degree},
                             {"weight", to_string(weight)},
                             {"mult", mult},
                             {"dim", big_to_json(mult * dim_sp(weight, n))}});
        }
    }
    return {{"cells", cells}};
}

inline nlohmann::json to_json(const StairComplex& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const StairTerm& t : c.terms) {
        terms.push_back({{"position", t.position},
                         {"multiplicity_dim", t.multiplicity_dim},
                         {"description", t.description},
                         {"kclass", to_json(t.kclass)}});
    }
    return {{"n", c.n}, {"terms", terms}};
}

}  // namespace lgrexc
