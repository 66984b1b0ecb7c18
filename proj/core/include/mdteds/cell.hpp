#pragma once

#include <string>
#include <string_view>

namespace mdteds {

/// Placeholder the generation conventions use for missing cells.
inline constexpr std::string_view kFillMarker = "-";

/// One table cell. `normalized` is the comparison form of `raw`: NFC,
/// `**` wrappers stripped, outer whitespace trimmed, inner whitespace
/// runs collapsed to a single space. Case is preserved.
struct Cell {
  std::string raw;
  std::string normalized;
  bool is_bold = false;  // raw is fully wrapped in ** after trimming
  bool is_fill = false;  // normalized text equals the fill marker
};

/// Idempotent: normalize_cell(normalize_cell(x)) == normalize_cell(x).
std::string normalize_cell(std::string_view raw);

Cell make_cell(std::string_view raw);

/// Cell whose raw text is the fill marker.
Cell make_fill_cell();

}  // namespace mdteds
