#pragma once

// JSON and CSV serialization of seeds, enumeration results and degree
// distributions, and the on-disk enumeration cache.
//
// Seed schema: {"variables": ["x1", ...], "mutable": [1-based positions],
// "B": [[...]], "G": [[...]], "cluster": ["<laurent>", ...]}.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "gradedca/cluster.hpp"
#include "gradedca/degree.hpp"
#include "gradedca/explore.hpp"

namespace gradedca {

using json = nlohmann::ordered_json;

json matrix_to_json(const IntMatrix& m);
/// Rows of equal length; `cols` is used when there are no rows or the rows are empty.
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols_if_empty);

json seed_to_json(const GradedSeed& seed);
/// Throws InputError on schema violations or an invalid seed.
GradedSeed seed_from_json(const json& j);

json degree_to_json(const Degree& d);
json distribution_to_json(const DegreeDistribution& dist);
/// Header `degree,count`; the degree is quoted, e.g. `"[1,0]",6`.
std::string distribution_csv(const DegreeDistribution& dist);

json result_to_json(const EnumerationResult& result);
EnumerationResult result_from_json(const json& j);

/// Content hash of (B, mutable rows, G, limits) as 16 hex digits.
std::string cache_key(const GradedSeed& seed, const EnumerationLimits& limits);
std::optional<EnumerationResult> load_cached(const std::filesystem::path& dir, const std::string& key);
void store_cached(const std::filesystem::path& dir, const std::string& key, const EnumerationResult& result);

}  // namespace gradedca
