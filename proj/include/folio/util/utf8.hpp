#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace folio::util {

// Number of Unicode code points if `s` is well-formed UTF-8, else nullopt.
// Rejects overlong encodings, surrogates and values beyond U+10FFFF.
std::optional<uint64_t> utf8_count(std::string_view s);

inline bool utf8_valid(std::string_view s) { return utf8_count(s).has_value(); }

}  // namespace folio::util
