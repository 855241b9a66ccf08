#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbq/estimator.hpp"
#include "hbq/gap.hpp"

namespace hbq {

enum class ExportFormat { csv, json, markdown, table };

/// "csv", "json" (alias "structured"), "markdown" (alias "md"), "table".
/// Throws unknown_format.
ExportFormat parse_export_format(std::string_view text);

/// Columns: category,item,qty,unit,unit_price,cost,omitted_in_informal.
/// RFC 4180 quoting, CRLF-free ("\n" line ends), amounts with two decimals.
std::string to_csv(const Estimate& estimate);

/// Item | Quantity | Unit | Unit Price (GHS) | Cost (GHS), then a summary table.
std::string to_markdown(const Estimate& estimate);

/// Fixed-width plain text for terminals.
std::string to_text_table(const Estimate& estimate);

std::string export_boq(const Estimate& estimate, ExportFormat format);

std::string gap_to_markdown(const GapReport& report);
std::string gap_to_text(const GapReport& report);


}  // namespace hbq
