#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace folio::util {

struct ZipEntry {
  std::string name;
  std::string data;
};

// Reads a zip archive held in memory. Supports method 0 (store) and
// method 8 (deflate); verifies sizes and CRC-32 of every entry.
// Throws DataError on any structural problem.
std::vector<ZipEntry> zip_read(std::string_view archive);

class ZipWriter {
 public:
  // level 0 writes stored entries; 1..9 writes deflate at that level.
  explicit ZipWriter(int level = 1) : level_(level) {}

  void add(std::string_view name, std::string_view data);
  std::string finish();

  // Archive byte size a set of (name length, data size) entries would
  // produce with stored (uncompressed) entries.
  static uint64_t stored_size(const std::vector<std::pair<size_t, uint64_t>>& entries);

 private:
  struct Central {
    std::string name;
    uint32_t crc;
    uint64_t csize, usize;
    uint16_t method;
    uint64_t offset;
  };
  int level_;
  std::string out_;
  std::vector<Central> central_;
  bool finished_ = false;
};

}  // namespace folio::util
