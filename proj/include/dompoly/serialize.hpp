#pragma once

#include <istream>
#include <nlohmann/json.hpp>
#include <string>

#include "dompoly/extremal.hpp"
#include "dompoly/outcome.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/search.hpp"

namespace dompoly {

/// {"n": int, "coeffs": ["0", "0", "7", ...]}; big integers as decimal
/// strings.
nlohmann::json to_json(const Polynomial& p);
/// Inverse of to_json; validates through Polynomial::from_coefficients.
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KKReport& r);
nlohmann::json to_json(const VerificationOutcome& o);
nlohmann::json to_json(const ClassReport& c);

/// {"order": n, "total": m, "classes": [{"poly": [...], "members": [...],
/// "size": s}, ...]} with classes in polynomial order.
nlohmann::json to_json(const Atlas& a);
Atlas atlas_from_json(const nlohmann::json& j);

/// "polynomial,size" header plus one row per class.
std::string atlas_csv(const Atlas& a);

/// One set per line, space-separated vertex indices; blank lines skipped.
/// The ground set is 0..max index. All sets must share one cardinality.
SetFamily parse_family(std::istream& in);

}  // namespace dompoly
