#include "folio/corpus/types.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "folio/util/errors.hpp"
#include "folio/util/utf8.hpp"

namespace folio::corpus {

namespace {

bool path_safe(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         c == '.' || c == '_' || c == '-';
}

int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

VolumeId::VolumeId(std::string v) : value(std::move(v)) {
  if (value.empty()) throw PreconditionError("volume id must be non-empty");
}

std::string VolumeId::encode_for_path() const {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    if (path_safe(c)) {
      out.push_back(c);
    } else {
      unsigned char u = (unsigned char)c;
      out.push_back('+');
      out.push_back(hex[u >> 4]);
      out.push_back(hex[u & 0xf]);
    }
  }
  return out;
}

VolumeId VolumeId::decode_from_path(std::string_view encoded) {
  std::string out;
  out.reserve(encoded.size());
  for (size_t i = 0; i < encoded.size(); ++i) {
    char c = encoded[i];
    if (c == '+') {
      if (i + 2 >= encoded.size()) throw DataError("truncated +xx escape in encoded id");
      int hi = hex_val(encoded[i + 1]), lo = hex_val(encoded[i + 2]);
      if (hi < 0 || lo < 0) throw DataError("bad +xx escape in encoded id");
      out.push_back((char)((hi << 4) | lo));
      i += 2;
    } else if (path_safe(c)) {
      out.push_back(c);
    } else {
      throw DataError("unsafe character in encoded id");
    }
  }
  return VolumeId(std::move(out));
}

std::string page_sequence(uint64_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08llu", (unsigned long long)n);
  return buf;
}

bool is_page_sequence(std::string_view s) {
  if (s.size() != 8) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

PageRecord make_page(std::string sequence, std::string contents, util::ChecksumType type,
                     std::optional<std::string> label) {
  if (!is_page_sequence(sequence))
    throw PreconditionError("page sequence must be 8 decimal digits: " + sequence);
  auto chars = util::utf8_count(contents);
  if (!chars) throw DataError("page contents are not valid UTF-8");
  PageRecord p;
  p.sequence = std::move(sequence);
  p.byte_count = contents.size();
  p.character_count = *chars;
  p.checksum = util::hex_digest(type, contents);
  p.checksum_type = type;
  p.page_number_label = std::move(label);
  p.contents = std::move(contents);
  return p;
}

VolumeRecord make_volume(VolumeId id, std::vector<PageRecord> pages, int32_t access_level,
                         std::string language) {
  std::sort(pages.begin(), pages.end(),
            [](const PageRecord& a, const PageRecord& b) { return a.sequence < b.sequence; });
  VolumeRecord v;
  v.id = std::move(id);
  v.access_level = access_level;
  v.language = std::move(language);
  for (size_t i = 0; i < pages.size(); ++i) {
    if (i > 0 && pages[i].sequence == pages[i - 1].sequence)
      throw DataError("duplicate page sequence " + pages[i].sequence);
    v.volume_byte_count += pages[i].byte_count;
    v.volume_character_count += pages[i].character_count;
  }
  v.pages = std::move(pages);
  return v;
}

StructuralMetadata make_structural(VolumeId id, uint64_t page_count,
                                   std::vector<PageChecksum> checksums,
                                   std::vector<PageSize> sizes) {
  if (page_count != checksums.size() || page_count != sizes.size())
    throw PreconditionError("structural metadata list lengths must equal page count");
  for (size_t i = 1; i < checksums.size(); ++i)
    if (checksums[i].sequence <= checksums[i - 1].sequence)
      throw PreconditionError("structural checksum sequences must be strictly increasing");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i].sequence <= sizes[i - 1].sequence)
      throw PreconditionError("structural size sequences must be strictly increasing");
  return StructuralMetadata{std::move(id), page_count, std::move(checksums), std::move(sizes)};
}

StructuralMetadata derive_structural(const VolumeRecord& v) {
  std::vector<PageChecksum> checksums;
  std::vector<PageSize> sizes;
  checksums.reserve(v.pages.size());
  sizes.reserve(v.pages.size());
  for (const auto& p : v.pages) {
    checksums.push_back({p.sequence, p.checksum, p.checksum_type});
    sizes.push_back({p.sequence, p.byte_count});
  }
  return make_structural(v.id, v.pages.size(), std::move(checksums), std::move(sizes));
}

void SizeStats::check() const {
  bool ordered = min_kb <= q1_kb && q1_kb <= median_kb && median_kb <= q3_kb && q3_kb <= max_kb;
  bool mean_ok = mean_kb >= min_kb && mean_kb <= max_kb;
  if (!ordered || !mean_ok) throw DataError("size stats violate ordering invariant");
}

std::string SizeStats::to_csv() const {
  std::ostringstream os;
  os << "stat,kb\n";
  char buf[64];
  auto row = [&](const char* name, double v) {
    std::snprintf(buf, sizeof buf, "%s,%.3f\n", name, v);
    os << buf;
  };
  row("min", min_kb);
  row("q1", q1_kb);
  row("median", median_kb);
  row("mean", mean_kb);
  row("q3", q3_kb);
  row("max", max_kb);
  return os.str();
}

SizeStats reference_size_model() {
  SizeStats s;
  s.min_kb = 8;
  s.q1_kb = 136;
  s.median_kb = 330;
  s.mean_kb = 516;
  s.q3_kb = 664;
  s.max_kb = 26583;
  s.check();
  return s;
}

ValidationReport validate_volume(const VolumeRecord& v, const StructuralMetadata& s) {
  if (v.id != s.id) throw PreconditionError("validate_volume: id mismatch");
  ValidationReport report;
  if (v.pages.size() != s.page_count) {
    report.mismatches.push_back({MismatchKind::PageCount, "",
                                 "volume has " + std::to_string(v.pages.size()) +
                                     " pages, structural metadata lists " +
                                     std::to_string(s.page_count)});
  }
  auto find_page = [&](const std::string& seq) -> const PageRecord* {
    auto it = std::lower_bound(
        v.pages.begin(), v.pages.end(), seq,
        [](const PageRecord& p, const std::string& q) { return p.sequence < q; });
    return (it != v.pages.end() && it->sequence == seq) ? &*it : nullptr;
  };
  for (const auto& ps : s.sizes) {
    const PageRecord* p = find_page(ps.sequence);
    if (!p) {
      report.mismatches.push_back(
          {MismatchKind::MissingPage, ps.sequence, "page listed in structural metadata is absent"});
      continue;
    }
    if (p->byte_count != ps.bytes)
      report.mismatches.push_back({MismatchKind::PageSize, ps.sequence,
                                   "expected " + std::to_string(ps.bytes) + " bytes, found " +
                                       std::to_string(p->byte_count)});
  }
  for (const auto& pc : s.checksums) {
    const PageRecord* p = find_page(pc.sequence);
    if (!p) continue;  // already reported by the size pass
    std::string actual = util::hex_digest(pc.type, p->contents);
    if (actual != pc.checksum)
      report.mismatches.push_back(
          {MismatchKind::PageChecksum, pc.sequence, util::checksum_name(pc.type) + " mismatch"});
  }
  return report;
}

}  // namespace folio::corpus
