#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "turan/exact.hpp"

namespace turan {

inline constexpr const char* kFormatVersion = "1.0";

// Standard report envelope: format version, the command that produced it,
// and the fully resolved configuration (every default spelled out).
nlohmann::json report_envelope(const std::string& command, nlohmann::json config);

// Counts serialize as a JSON number when they fit in 64 bits, otherwise as a
// decimal string.
nlohmann::json count_json(const BigInt& value);

}  // namespace turan
