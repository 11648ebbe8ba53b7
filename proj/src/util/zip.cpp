#include "folio/util/zip.hpp"

#include <cstring>

#include "folio/util/binio.hpp"
#include "folio/util/compress.hpp"
#include "folio/util/errors.hpp"

namespace folio::util {

namespace {

constexpr uint32_t kLocalSig = 0x04034b50;
constexpr uint32_t kCentralSig = 0x02014b50;
constexpr uint32_t kEndSig = 0x06054b50;
constexpr uint32_t kMax32 = 0xfffffffeu;
// Fixed DOS timestamp (1980-01-01 00:00) keeps archives byte-reproducible.
constexpr uint16_t kDosTime = 0;
constexpr uint16_t kDosDate = 0x0021;

uint32_t read_u32_at(std::string_view s, size_t pos) {
  uint32_t v;
  std::memcpy(&v, s.data() + pos, 4);
  return v;
}
uint16_t read_u16_at(std::string_view s, size_t pos) {
  uint16_t v;
  std::memcpy(&v, s.data() + pos, 2);
  return v;
}

}  // namespace

void ZipWriter::add(std::string_view name, std::string_view data) {
  if (finished_) throw Error("ZipWriter already finished");
  uint32_t crc = crc32(data);
  uint16_t method = 0;
  std::string deflated;
  std::string_view payload = data;
  if (level_ > 0) {
    deflated = deflate_raw(data, level_);
    if (deflated.size() < data.size()) {
      method = 8;
      payload = deflated;
    }
  }
  if (data.size() > kMax32 || payload.size() > kMax32 || out_.size() > kMax32)
    throw DataError("zip entry exceeds 32-bit archive limits");

  Central c{std::string(name), crc, payload.size(), data.size(), method, out_.size()};
  put_u32(out_, kLocalSig);
  put_u16(out_, 20);  // version needed
  put_u16(out_, 0);   // flags
  put_u16(out_, method);
  put_u16(out_, kDosTime);
  put_u16(out_, kDosDate);
  put_u32(out_, crc);
  put_u32(out_, (uint32_t)payload.size());
  put_u32(out_, (uint32_t)data.size());
  put_u16(out_, (uint16_t)name.size());
  put_u16(out_, 0);  // extra len
  out_.append(name.data(), name.size());
  out_.append(payload.data(), payload.size());
  central_.push_back(std::move(c));
}

std::string ZipWriter::finish() {
  if (finished_) throw Error("ZipWriter already finished");
  finished_ = true;
  uint64_t cdir_offset = out_.size();
  for (const auto& c : central_) {
    put_u32(out_, kCentralSig);
    put_u16(out_, 20);  // version made by
    put_u16(out_, 20);  // version needed
    put_u16(out_, 0);   // flags
    put_u16(out_, c.method);
    put_u16(out_, kDosTime);
    put_u16(out_, kDosDate);
    put_u32(out_, c.crc);
    put_u32(out_, (uint32_t)c.csize);
    put_u32(out_, (uint32_t)c.usize);
    put_u16(out_, (uint16_t)c.name.size());
    put_u16(out_, 0);  // extra
    put_u16(out_, 0);  // comment
    put_u16(out_, 0);  // disk
    put_u16(out_, 0);  // internal attrs
    put_u32(out_, 0);  // external attrs
    put_u32(out_, (uint32_t)c.offset);
    out_.append(c.name);
  }
  uint64_t cdir_size = out_.size() - cdir_offset;
  if (out_.size() > kMax32 || central_.size() > 0xffff)
    throw DataError("zip archive exceeds 32-bit limits");
  put_u32(out_, kEndSig);
  put_u16(out_, 0);
  put_u16(out_, 0);
  put_u16(out_, (uint16_t)central_.size());
  put_u16(out_, (uint16_t)central_.size());
  put_u32(out_, (uint32_t)cdir_size);
  put_u32(out_, (uint32_t)cdir_offset);
  put_u16(out_, 0);
  return std::move(out_);
}

uint64_t ZipWriter::stored_size(const std::vector<std::pair<size_t, uint64_t>>& entries) {
  uint64_t total = 22;  // end record
  for (const auto& [name_len, data_size] : entries)
    total += 30 + name_len + data_size + 46 + name_len;
  return total;
}

std::vector<ZipEntry> zip_read(std::string_view archive) {
  if (archive.size() < 22) throw DataError("zip: archive too small");
  // Locate the end-of-central-directory record (no archive comment support
  // beyond scanning the final 64 KiB).
  size_t scan_from = archive.size() >= (65536 + 22) ? archive.size() - 65536 - 22 : 0;
  size_t end_pos = std::string_view::npos;
  for (size_t pos = archive.size() - 22 + 1; pos-- > scan_from;) {
    if (read_u32_at(archive, pos) == kEndSig) {
      end_pos = pos;
      break;
    }
  }
  if (end_pos == std::string_view::npos) throw DataError("zip: end record not found");
  uint16_t count = read_u16_at(archive, end_pos + 10);
  uint32_t cdir_size = read_u32_at(archive, end_pos + 12);
  uint32_t cdir_offset = read_u32_at(archive, end_pos + 16);
  if ((uint64_t)cdir_offset + cdir_size > archive.size())
    throw DataError("zip: central directory out of range");

  std::vector<ZipEntry> entries;
  entries.reserve(count);
  size_t pos = cdir_offset;
  for (uint16_t i = 0; i < count; ++i) {
    if (pos + 46 > archive.size() || read_u32_at(archive, pos) != kCentralSig)
      throw DataError("zip: bad central directory entry");
    uint16_t method = read_u16_at(archive, pos + 10);
    uint32_t crc = read_u32_at(archive, pos + 16);
    uint32_t csize = read_u32_at(archive, pos + 20);
    uint32_t usize = read_u32_at(archive, pos + 24);
    uint16_t name_len = read_u16_at(archive, pos + 28);
    uint16_t extra_len = read_u16_at(archive, pos + 30);
    uint16_t comment_len = read_u16_at(archive, pos + 32);
    uint32_t local_offset = read_u32_at(archive, pos + 42);
    if (pos + 46 + name_len > archive.size()) throw DataError("zip: truncated entry name");
    std::string name(archive.substr(pos + 46, name_len));
    pos += 46 + name_len + extra_len + comment_len;

    if ((uint64_t)local_offset + 30 > archive.size() ||
        read_u32_at(archive, local_offset) != kLocalSig)
      throw DataError("zip: bad local header for entry " + name);
    uint16_t lname_len = read_u16_at(archive, local_offset + 26);
    uint16_t lextra_len = read_u16_at(archive, local_offset + 28);
    uint64_t data_off = (uint64_t)local_offset + 30 + lname_len + lextra_len;
    if (data_off + csize > archive.size())
      throw DataError("zip: truncated entry data for " + name);
    std::string_view payload = archive.substr(data_off, csize);

    std::string data;
    if (method == 0) {
      if (csize != usize) throw DataError("zip: stored entry size mismatch for " + name);
      data.assign(payload);
    } else if (method == 8) {
      try {
        data = inflate_raw(payload, usize);
      } catch (const DataError&) {
        throw DataError("zip: corrupt deflate stream in entry " + name);
      }
    } else {
      throw DataError("zip: unsupported compression method in entry " + name);
    }
    if (crc32(data) != crc) throw DataError("zip: CRC mismatch in entry " + name);
    entries.push_back(ZipEntry{std::move(name), std::move(data)});
  }
  return entries;
}

}  // namespace folio::util
