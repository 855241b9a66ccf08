#pragma once

#include <stdexcept>
#include <string>

namespace hbq {

enum class ErrorCode {
  parse_error,
  validation_error,
  invalid_spec,
  unknown_region,
  unknown_material,
  unknown_grade,
  unknown_case,
  unknown_format,
  non_positive_price,
  non_positive_footprint,
  openings_exceed_gross,
  missing_calibration,
  missing_parameter,
  invalid_band,
  unresolvable_material,
  version_conflict,
  io_error,
};

const char* to_string(ErrorCode code);

/// Single exception type for the engine. `field` carries a dotted path
/// ("defaults.cement_bag_50kg", "walls[2].a") when the error concerns one
/// input field; `line` is 1-based and 0 when unknown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {}, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }
  /// The message without the code/line/field decoration.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string field_;
  std::string message_;
  int line_;
};

}  // namespace hbq
