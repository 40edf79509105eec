/**************************************************************************
 * report_json.cpp
 *
 * Copyright 2026 The bchmp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "bchmp/report_json.hpp"

namespace bchmp {

using nlohmann::json;

json to_json(const DistanceResult& r) {
    return json{
        {"kind", r.kind == DistanceResult::Kind::exact ? "exact" : "lower_bound_only"},
        {"value", r.value},
        {"enumerated", r.enumerated},
        {"swept_weight", r.swept_weight},
    };
}

DistanceResult distance_from_json(const json& j) {
    DistanceResult r;
    r.kind = j.at("kind").get<std::string>() == "exact"
                 ? DistanceResult::Kind::exact
                 : DistanceResult::Kind::lower_bound_only;
    r.value = j.at("value").get<std::uint64_t>();
    r.enumerated = j.at("enumerated").get<std::uint64_t>();
    r.swept_weight = j.at("swept_weight").get<std::uint32_t>();
    return r;
}

json to_json(const DualityStatus& s) {
    return json{
        {"self_orthogonal", s.self_orthogonal},
        {"dual_containing", s.dual_containing},
        {"self_dual", s.self_dual},
    };
}

DualityStatus duality_from_json(const json& j) {
    DualityStatus s;
    s.self_orthogonal = j.at("self_orthogonal").get<bool>();
    s.dual_containing = j.at("dual_containing").get<bool>();
    s.self_dual = j.at("self_dual").get<bool>();
    return s;
}

json to_json(const bounds::BoundClaim& c) {
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    return json{
        {"theorem_id", bounds::theorem_name(c.id)},
        {"params", params},
        {"claimed_bound", c.claimed_bound},
        {"bound_class", bounds::bound_class_name(c.cls)},
        {"detail", c.detail},
    };
}

bounds::BoundClaim claim_from_json(const json& j) {
    bounds::BoundClaim c;
    c.id = bounds::theorem_from_name(j.at("theorem_id").get<std::string>());
    for (const auto& [k, v] : j.at("params").items())
        c.params[k] = v.get<std::int64_t>();
    c.claimed_bound = j.at("claimed_bound").get<std::int64_t>();
    const std::string cls = j.at("bound_class").get<std::string>();
    if (cls == "square_root")
        c.cls = bounds::BoundClass::square_root;
    else if (cls == "square_root_like")
        c.cls = bounds::BoundClass::square_root_like;
    else if (cls == "coset_leader")
        c.cls = bounds::BoundClass::coset_leader;
    else
        c.cls = bounds::BoundClass::dual_distance;
    c.detail = j.at("detail").get<std::string>();
    return c;
}

json to_json(const bounds::BoundReport& r) {
    return json{
        {"claim", to_json(r.claim)},
        {"status", bounds::status_name(r.status)},
        {"evidence", r.evidence},
    };
}

bounds::BoundReport report_from_json(const json& j) {
    bounds::BoundReport r;
    r.claim = claim_from_json(j.at("claim"));
    const std::string s = j.at("status").get<std::string>();
    if (s == "verified_exact")
        r.status = bounds::VerifyStatus::verified_exact;
    else if (s == "verified_bound")
        r.status = bounds::VerifyStatus::verified_bound;
    else if (s == "REFUTED")
        r.status = bounds::VerifyStatus::refuted;
    else
        r.status = bounds::VerifyStatus::inconclusive;
    r.evidence = j.at("evidence").get<std::string>();
    return r;
}

json to_json(const bounds::TableRow& row) {
    return json{
        {"which", row.which},
        {"theorem_id", row.which == 1 ? "thm1" : "thm2"},
        {"analogue", row.analogue},
        {"t", row.t},
        {"m", row.m},
        {"q", row.q},
        {"n", row.n},
        {"delta_min", row.delta_min},
        {"delta_max", row.delta_max},
        {"prior_bounds", row.prior_bounds},
        {"bound", row.bound},
        {"theorem_bound", row.theorem_bound},
        {"claimed_bound", row.theorem_bound},
        {"status", bounds::status_name(row.status)},
        {"evidence", row.evidence},
    };
}

bounds::TableRow table_row_from_json(const json& j) {
    bounds::TableRow row;
    row.which = j.at("which").get<int>();
    row.analogue = j.at("analogue").get<bool>();
    row.t = j.at("t").get<std::int64_t>();
    row.m = j.at("m").get<std::int64_t>();
    row.q = j.at("q").get<std::int64_t>();
    row.n = j.at("n").get<std::int64_t>();
    row.delta_min = j.at("delta_min").get<std::int64_t>();
    row.delta_max = j.at("delta_max").get<std::int64_t>();
    row.prior_bounds = j.at("prior_bounds").get<std::vector<std::int64_t>>();
    row.bound = j.at("bound").get<std::int64_t>();
    row.theorem_bound = j.at("theorem_bound").get<std::int64_t>();
    const std::string s = j.at("status").get<std::string>();
    if (s == "verified_exact")
        row.status = bounds::VerifyStatus::verified_exact;
    else if (s == "verified_bound")
        row.status = bounds::VerifyStatus::verified_bound;
    else if (s == "REFUTED")
        row.status = bounds::VerifyStatus::refuted;
    else
        row.status = bounds::VerifyStatus::inconclusive;
    row.evidence = j.at("evidence").get<std::string>();
    return row;
}

} // namespace bchmp
