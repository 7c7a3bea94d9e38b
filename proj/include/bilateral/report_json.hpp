#pragma once

#include <string>

#include "json.hpp"

#include "bilateral/identities.hpp"
#include "bilateral/series.hpp"

namespace bilateral {

// Every document uses std::map-ordered keys, and nlohmann writes doubles in
// shortest round-trip form, so parse + dump reproduces the same text.
// Non-finite doubles serialize as null.

nlohmann::json to_json(Complex v);
nlohmann::json to_json(const SeriesResult& r);
nlohmann::json to_json(const TruncationPolicy& p);
nlohmann::json to_json(const IdentityReport& r);

/// Overrides the defaults with whatever keys are present. Throws
/// ConfigError on unknown keys or wrong types.
TruncationPolicy policy_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal form of v (at most 17 significant digits).
std::string format_number(double v);

/// "re", or "re+imi" / "re-imi" when the imaginary part is nonzero.
std::string format_complex(Complex v);

}  // namespace bilateral
