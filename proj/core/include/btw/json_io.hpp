#pragma once

// JSON encodings of configurations, circle pairs, certificates and reports.
// Decoding errors name the offending field (Error(schema_error)); malformed
// text reports the byte offset (Error(parse_error)).

#include <string>

#include <nlohmann/json.hpp>

#include "btw/arcs.hpp"
#include "btw/case_studies.hpp"
#include "btw/finite_config.hpp"
#include "btw/iso_search.hpp"

namespace btw {

using Json = nlohmann::ordered_json;

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json_input(const std::string& text_or_path);
Json parse_json_text(const std::string& text);

Point point_from_json(const Json& j, const std::string& field);
Json to_json(Point p);

/// {"points": [[x,y],...], "eps_sign": .., "eps_metric": ..}. Missing
/// tolerance fields fall back to `fallback`.
FiniteConfig config_from_json(const Json& j, const Tolerance& fallback = {});
Json to_json(const FiniteConfig& cfg);

/// {"center": [x,y], "rho": .., "rho_prime": ..}
ConcentricPair concentric_pair_from_json(const Json& j);
Json to_json(const ConcentricPair& pair);

/// {"c1": [x,y], "r1": .., "c2": [x,y], "r2": ..}
NonConcentricPair nonconcentric_pair_from_json(const Json& j, const Tolerance& tol = {});
Json to_json(const NonConcentricPair& pair);

/// {"alphas": [...], "k": n}
CoverCertificate cover_from_json(const Json& j);
Json to_json(const CoverCertificate& cert);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const Report& report);

/// Every floating value rounded to `digits` significant digits; integers
/// and other values unchanged. Negative zero becomes zero.
Json round_significant(const Json& j, int digits = 12);

/// Pretty-printed with a trailing newline; rounded to 12 significant
/// digits unless `full_precision`.
std::string dump_json(const Json& j, bool full_precision = false);

}  // namespace btw
