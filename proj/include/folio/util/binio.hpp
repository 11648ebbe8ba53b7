#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "folio/util/errors.hpp"

namespace folio::util {

// Little-endian append/read helpers for the on-disk record formats.

inline void put_u16(std::string& out, uint16_t v) {
  char b[2];
  std::memcpy(b, &v, 2);
  out.append(b, 2);
}
inline void put_u32(std::string& out, uint32_t v) {
  char b[4];
  std::memcpy(b, &v, 4);
  out.append(b, 4);
}
inline void put_u64(std::string& out, uint64_t v) {
  char b[8];
  std::memcpy(b, &v, 8);
  out.append(b, 8);
}
inline void put_str(std::string& out, std::string_view s) {
  put_u32(out, (uint32_t)s.size());
  out.append(s.data(), s.size());
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  uint16_t u16() { return fixed<uint16_t>(); }
  uint32_t u32() { return fixed<uint32_t>(); }
  uint64_t u64() { return fixed<uint64_t>(); }

  std::string_view str() {
    uint32_t n = u32();
    return bytes(n);
  }

  std::string_view bytes(size_t n) {
    if (pos_ + n > data_.size()) throw DataError("truncated record");
    std::string_view out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  bool at_end() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }
  size_t pos() const { return pos_; }

 private:
  template <typename T>
  T fixed() {
    if (pos_ + sizeof(T) > data_.size()) throw DataError("truncated record");
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  std::string_view data_;
  size_t pos_ = 0;
};

}  // namespace folio::util
