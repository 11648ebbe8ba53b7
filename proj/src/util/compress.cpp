#include "folio/util/compress.hpp"

#include <zlib.h>

#include "folio/util/errors.hpp"

namespace folio::util {

std::string deflate_raw(std::string_view data, int level) {
  z_stream zs{};
  if (deflateInit2(&zs, level, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK)
    throw Error("deflateInit2 failed");
  std::string out;
  out.resize(deflateBound(&zs, (uLong)data.size()));
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = (uInt)data.size();
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = (uInt)out.size();
  int rc = deflate(&zs, Z_FINISH);
  if (rc != Z_STREAM_END) {
    deflateEnd(&zs);
    throw Error("deflate failed");
  }
  out.resize(zs.total_out);
  deflateEnd(&zs);
  return out;
}

std::string inflate_raw(std::string_view data, uint64_t expected_size) {
  z_stream zs{};
  if (inflateInit2(&zs, -15) != Z_OK) throw Error("inflateInit2 failed");
  std::string out;
  out.resize(expected_size);
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = (uInt)data.size();
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = (uInt)out.size();
  int rc = inflate(&zs, Z_FINISH);
  bool ok = (rc == Z_STREAM_END) && zs.total_out == expected_size && zs.avail_in == 0;
  inflateEnd(&zs);
  if (!ok) throw DataError("inflate failed: corrupt or mis-sized stream");
  return out;
}

uint32_t crc32(std::string_view data) {
  return (uint32_t)::crc32_z(0, reinterpret_cast<const Bytef*>(data.data()), data.size());
}

}  // namespace folio::util
