#pragma once

#include <string>
#include <string_view>

namespace folio::util {

enum class ChecksumType { MD5, SHA256 };

std::string checksum_name(ChecksumType t);
ChecksumType checksum_from_name(std::string_view name);

// Lowercase hex digest of `data`.
std::string hex_digest(ChecksumType t, std::string_view data);

}  // namespace folio::util
