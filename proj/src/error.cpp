#include "hbq/error.hpp"

#include <utility>

namespace hbq {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::invalid_spec: return "InvalidSpec";
    case ErrorCode::unknown_region: return "UnknownRegion";
    case ErrorCode::unknown_material: return "UnknownMaterial";
    case ErrorCode::unknown_grade: return "UnknownGrade";
    case ErrorCode::unknown_case: return "UnknownCase";
    case ErrorCode::unknown_format: return "UnknownFormat";
    case ErrorCode::non_positive_price: return "NonPositivePrice";
    case ErrorCode::non_positive_footprint: return "NonPositiveFootprint";
    case ErrorCode::openings_exceed_gross: return "OpeningsExceedGross";
    case ErrorCode::missing_calibration: return "MissingCalibration";
    case ErrorCode::missing_parameter: return "MissingParameter";
    case ErrorCode::invalid_band: return "InvalidBand";
    case ErrorCode::unresolvable_material: return "UnresolvableMaterial";
    case ErrorCode::version_conflict: return "VersionConflict";
    case ErrorCode::io_error: return "IoError";
  }
  return "Error";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, const std::string& field,
                     int line) {
  std::string out = to_string(code);
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  if (!field.empty()) out += " [" + field + "]";
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string field, int line)
    : std::runtime_error(decorate(code, message, field, line)),
      code_(code),
      field_(std::move(field)),
      message_(message),
      line_(line) {}

}  // namespace hbq
