#pragma once

#include <string>
#include <string_view>

namespace mdteds::uni {

/// Invalid byte sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(const std::u32string& text);

/// Canonical composition (NFC).
std::string to_nfc(std::string_view text);

/// Simple (single code point) case fold.
char32_t fold(char32_t c);
std::u32string fold(std::u32string text);

/// Unicode White_Space property.
bool is_space(char32_t c);

}  // namespace mdteds::uni
