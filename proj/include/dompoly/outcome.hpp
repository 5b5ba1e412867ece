#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace dompoly {

/// Result of one executable claim check. A failing outcome always carries
/// the counter-witness in `evidence`.
struct VerificationOutcome {
    std::string claim_id;
    std::vector<std::int64_t> parameters;
    bool passed = false;
    nlohmann::json evidence = nlohmann::json::object();
};

}  // namespace dompoly
