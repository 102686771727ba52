#pragma once

#include <json.hpp>

#include "amen/cohomology.hpp"

namespace amen {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "amen";
inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit digest, hex-encoded; tags reports with their input.
std::string digest(const std::string& bytes);

// Algebra file format: label / field ("Q") / dim / table of "p/q" strings /
// optional unit / optional declared characters.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

std::string write_algebra_file(const Algebra& a);
Algebra read_algebra_file(const std::string& text);
Algebra load_algebra(const std::string& path);
void save_algebra(const Algebra& a, const std::string& path);

Json report_to_json(const AmenabilityReport& r, const std::string& label,
                    const std::string& input_digest);

Json character_set_to_json(const CharacterSet& cs);

}  // namespace amen
