// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <json.hpp>

#include "dunklkit/kummer.hpp"
#include "dunklkit/monotonicity.hpp"

namespace dunklkit::reports {

using Json = nlohmann::ordered_json;

Json to_json(const mono::CMReport& r);
Json to_json(const mono::GramReport& r);       // matrices row-major re/im
Json to_json(const mono::SchoenbergReport& r);
Json to_json(const mono::ConvexityReport& r);
Json to_json(const kummer::AdjudicationRecord& r);

//! Structural validation against the shipped schema subset: type, required,
//! properties, items, enum.  Returns an empty string on success, else a
//! description of the first mismatch.
std::string schema_mismatch(const Json& value, const Json& schema);

} // namespace dunklkit::reports
