#pragma once

// JSON / CSV / aligned-text renderings of results. Exact rationals are written as
// {"num": "..", "den": "..", "decimal": ".."} with num and den as decimal strings.

#include "semidecay/exponents.hpp"
#include "semidecay/hcfun.hpp"
#include "semidecay/kazhdan.hpp"
#include "semidecay/orbitlab.hpp"
#include "semidecay/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace semidecay {

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const WeightVector& v);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExponentReport& r);
nlohmann::json to_json(const HCEstimate& e);
nlohmann::json to_json(const HCBoundReport& r);
nlohmann::json to_json(const KazhdanReport& r);
nlohmann::json to_json(const PackingResult& r);
nlohmann::json to_json(const VerifyReport& r);

nlohmann::json table_json(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_text(const std::vector<TableRow>& rows);

/// Left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows);

/// RFC 4180 quoting where needed.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace semidecay
