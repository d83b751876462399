#pragma once

#include <json.hpp>

#include <string>

#include "cperm/identities.hpp"
#include "cperm/poly.hpp"
#include "cperm/restriction.hpp"
#include "cperm/series.hpp"
#include "cperm/statistics.hpp"

namespace cperm {

using Json = nlohmann::ordered_json;

/// Coefficients fitting in int64 are numbers, larger ones decimal strings.
Json to_json(const Poly& p);
Json to_json(const CyclotomicInt& c);
Json to_json(const TruncatedSeries& s);
Json to_json(const RestrictionTuple& s);
Json to_json(const IdentityParams& p);
Json to_json(const StatBundle& s);

/// `elapsed_ms` is included only when asked for, so reports stay byte-stable.
Json to_json(const IdentityReport& report, bool with_timing);

/// Arrays of color arrays, e.g. [[0,2],[2,3]]. With r = 2 an entry may also
/// be "+", "-", "−", "±", "+-" or "∅". A bare object {"r": R, "entries": [...]}
/// is accepted as well and overrides `r`.
RestrictionTuple restriction_from_json(const Json& j, int r);

/// Canonical dump: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace cperm
