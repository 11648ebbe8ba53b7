#include "folio/corpus/volume_zip.hpp"

#include <algorithm>

#include "folio/util/errors.hpp"
#include "folio/util/utf8.hpp"
#include "folio/util/zip.hpp"

namespace folio::corpus {

namespace {

// Accepts "1.txt" .. "00000001.txt"; returns the 8-digit sequence.
std::string sequence_from_entry_name(const std::string& name) {
  size_t dot = name.rfind(".txt");
  if (dot == std::string::npos || dot + 4 != name.size() || dot == 0 || dot > 8)
    throw DataError("unexpected zip entry name: " + name);
  uint64_t n = 0;
  for (size_t i = 0; i < dot; ++i) {
    char c = name[i];
    if (c < '0' || c > '9') throw DataError("unexpected zip entry name: " + name);
    n = n * 10 + (uint64_t)(c - '0');
  }
  return page_sequence(n);
}

}  // namespace

VolumeRecord parse_volume_zip(std::string_view archive, VolumeId id) {
  auto entries = util::zip_read(archive);
  std::vector<PageRecord> pages;
  pages.reserve(entries.size());
  for (auto& e : entries) {
    std::string seq = sequence_from_entry_name(e.name);
    if (!util::utf8_valid(e.data))
      throw DataError("entry " + e.name + " is not valid UTF-8");
    pages.push_back(make_page(std::move(seq), std::move(e.data)));
  }
  try {
    return make_volume(std::move(id), std::move(pages));
  } catch (const DataError& err) {
    throw DataError(std::string("volume archive: ") + err.what());
  }
}

std::string serialize_volume_zip(const VolumeRecord& v, int level) {
  util::ZipWriter w(level);
  for (const auto& p : v.pages) w.add(p.sequence + ".txt", p.contents);
  return w.finish();
}

}  // namespace folio::corpus
