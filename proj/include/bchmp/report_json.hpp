/**************************************************************************
 * report_json.hpp
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

#pragma once

#include <json.hpp>

#include "bchmp/bounds.hpp"
#include "bchmp/codes.hpp"
#include "bchmp/mpc.hpp"

namespace bchmp {

/// JSON encodings for the report types. Documents carry schema_version 1
/// and are deterministic (keys are emitted sorted, no timestamps).
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const DistanceResult& r);
DistanceResult distance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DualityStatus& s);
DualityStatus duality_from_json(const nlohmann::json& j);

nlohmann::json to_json(const bounds::BoundClaim& c);
bounds::BoundClaim claim_from_json(const nlohmann::json& j);

nlohmann::json to_json(const bounds::BoundReport& r);
bounds::BoundReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const bounds::TableRow& row);
bounds::TableRow table_row_from_json(const nlohmann::json& j);

} // namespace bchmp
