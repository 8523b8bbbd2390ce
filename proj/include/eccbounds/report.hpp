#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "eccbounds/bounds.hpp"
#include "eccbounds/constructions.hpp"
#include "eccbounds/invariants.hpp"
#include "eccbounds/metrics.hpp"
#include "eccbounds/rational.hpp"
#include "eccbounds/scan.hpp"
#include "eccbounds/verify.hpp"

namespace ecc {

// Rationals travel as {num, den, decimal}; never as a bare float.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const IndexReport& x);
void to_json(nlohmann::json& j, const InvariantSet& x);
void to_json(nlohmann::json& j, const FamilySpec& x);
void to_json(nlohmann::json& j, const Predicted& x);
void to_json(nlohmann::json& j, const FamilyInstance& x);
void to_json(nlohmann::json& j, const BoundReport& x);
void to_json(nlohmann::json& j, const Violation& x);
void to_json(nlohmann::json& j, const VerificationRun& x);
void to_json(nlohmann::json& j, const ScanRow& x);

// Envelope every CLI emission is wrapped in:
// {schema_version: 1, command, generated_at, payload}.
nlohmann::json make_report(const std::string& command, nlohmann::json payload);

// CSV writer; rows[0] is the header. Quotes cells only when they contain a
// comma, quote or newline. The CLI feeds it cells rendered from the same
// structs the JSON writer sees, so the two formats agree numerically.
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace ecc
