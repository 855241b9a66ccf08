#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hbq/pricebook.hpp"

namespace hbq {

/// INI-style price-book document; see docs/pricebook-format.md.
/// Syntax problems throw parse_error carrying the 1-based line; semantic
/// problems throw validation_error carrying the field path (and the line
/// where the key was found).
PriceBook load_pricebook(std::istream& in);
PriceBook load_pricebook_text(const std::string& text);
/// Throws io_error when the file cannot be opened.
PriceBook load_pricebook_file(const std::filesystem::path& path);

/// Canonical, byte-stable rendering. load(save(b)) == b.
std::string save_pricebook(const PriceBook& book);

/// Writes to a sibling temp file, then renames over `path`.
void save_pricebook_file(const PriceBook& book, const std::filesystem::path& path);

}  // namespace hbq
