#include "mdteds/cell.hpp"

#include <cstddef>

#include "unicode.hpp"

namespace mdteds {

namespace {

void trim(std::u32string& s) {
  std::size_t begin = 0;
  while (begin < s.size() && uni::is_space(s[begin])) ++begin;
  std::size_t end = s.size();
  while (end > begin && uni::is_space(s[end - 1])) --end;
  s = s.substr(begin, end - begin);
}

bool bold_wrapped(const std::u32string& s) {
  return s.size() >= 4 && s[0] == U'*' && s[1] == U'*' && s[s.size() - 1] == U'*' &&
         s[s.size() - 2] == U'*';
}

void collapse_whitespace(std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  bool in_run = false;
  for (char32_t c : s) {
    if (uni::is_space(c)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out.push_back(U' ');
    in_run = false;
    out.push_back(c);
  }
  s = std::move(out);
}

}  // namespace

std::string normalize_cell(std::string_view raw) {
  std::u32string s = uni::decode_utf8(uni::to_nfc(raw));
  // Strip nested ** wrappers until stable so normalization stays idempotent.
  for (;;) {
    trim(s);
    if (!bold_wrapped(s)) break;
    s = s.substr(2, s.size() - 4);
  }
  collapse_whitespace(s);
  return uni::encode_utf8(s);
}

Cell make_cell(std::string_view raw) {
  Cell cell;
  cell.raw = std::string(raw);
  cell.normalized = normalize_cell(raw);
  std::u32string trimmed = uni::decode_utf8(raw);
  trim(trimmed);
  cell.is_bold = bold_wrapped(trimmed);
  cell.is_fill = cell.normalized == kFillMarker;
  return cell;
}

Cell make_fill_cell() { return make_cell(kFillMarker); }

}  // namespace mdteds
