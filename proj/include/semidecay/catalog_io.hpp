#pragma once

// Human-readable catalog data file: one record per group, representation and improvement.
// Rationals are written as "p/q" strings.

#include "semidecay/catalog.hpp"

#include <json.hpp>

#include <filesystem>

namespace semidecay {

nlohmann::json group_to_json(const GroupSpec& group);
GroupSpec group_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const Catalog& catalog);
Catalog catalog_from_json(const nlohmann::json& j);  // throws Error(invalid_input)

void save_catalog(const Catalog& catalog, const std::filesystem::path& path);
Catalog load_catalog(const std::filesystem::path& path);

}  // namespace semidecay
