#pragma once

#include <json.hpp>

#include <string>

#include "forestprob/collision.hpp"
#include "forestprob/process.hpp"

namespace forestprob {

// Exact rationals serialize as decimal-string integer pairs so consumers
// never overflow; decimal renderings are supplementary.
nlohmann::json rational_json(const Rational& q);
nlohmann::json distribution_json(const TreeDistribution& dist);
nlohmann::json mc_estimate_json(const McEstimate& e);

nlohmann::json collision_report_json(const CollisionReport& report);
std::string collision_report_text(const CollisionReport& report);

nlohmann::json verify_summary_json(const VerifySummary& summary);
std::string verify_summary_text(const VerifySummary& summary);

}  // namespace forestprob
