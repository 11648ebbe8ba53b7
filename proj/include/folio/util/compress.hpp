#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace folio::util {

// Raw DEFLATE stream (no zlib/gzip wrapper), as used inside zip archives
// and the store's block codec.
std::string deflate_raw(std::string_view data, int level);

// Inflates a raw DEFLATE stream; `expected_size` must match exactly.
std::string inflate_raw(std::string_view data, uint64_t expected_size);

uint32_t crc32(std::string_view data);

}  // namespace folio::util
