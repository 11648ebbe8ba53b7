#include "folio/util/utf8.hpp"

namespace folio::util {

std::optional<uint64_t> utf8_count(std::string_view s) {
  const unsigned char* p = reinterpret_cast<const unsigned char*>(s.data());
  const unsigned char* end = p + s.size();
  uint64_t count = 0;
  while (p < end) {
    unsigned char c = *p;
    if (c < 0x80) {
      ++p;
    } else if ((c & 0xe0) == 0xc0) {
      if (end - p < 2 || (p[1] & 0xc0) != 0x80) return std::nullopt;
      uint32_t cp = ((c & 0x1fu) << 6) | (p[1] & 0x3fu);
      if (cp < 0x80) return std::nullopt;
      p += 2;
    } else if ((c & 0xf0) == 0xe0) {
      if (end - p < 3 || (p[1] & 0xc0) != 0x80 || (p[2] & 0xc0) != 0x80) return std::nullopt;
      uint32_t cp = ((c & 0x0fu) << 12) | ((p[1] & 0x3fu) << 6) | (p[2] & 0x3fu);
      if (cp < 0x800 || (cp >= 0xd800 && cp <= 0xdfff)) return std::nullopt;
      p += 3;
    } else if ((c & 0xf8) == 0xf0) {
      if (end - p < 4 || (p[1] & 0xc0) != 0x80 || (p[2] & 0xc0) != 0x80 ||
          (p[3] & 0xc0) != 0x80)
        return std::nullopt;
      uint32_t cp = ((c & 0x07u) << 18) | ((p[1] & 0x3fu) << 12) | ((p[2] & 0x3fu) << 6) |
                    (p[3] & 0x3fu);
      if (cp < 0x10000 || cp > 0x10ffff) return std::nullopt;
      p += 4;
    } else {
      return std::nullopt;
    }
    ++count;
  }
  return count;
}

}  // namespace folio::util
