#include "turan/report.hpp"

#include <cstdint>

namespace turan {

nlohmann::json report_envelope(const std::string& command, nlohmann::json config) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

nlohmann::json count_json(const BigInt& value) {
  if (fits_int64(value)) return value.convert_to<std::int64_t>();
  return big_to_string(value);
}

}  // namespace turan
