#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folio/util/digest.hpp"

namespace folio::corpus {

// Identifier of one digitized volume. Real library identifiers contain
// characters that are unsafe in filenames (colons, slashes), so the id
// carries a lossless path encoding (see encode_for_path).
struct VolumeId {
  std::string value;

  VolumeId() = default;
  explicit VolumeId(std::string v);

  auto operator<=>(const VolumeId&) const = default;

  // Characters outside [A-Za-z0-9._-] become "+xx" (lowercase hex).
  std::string encode_for_path() const;
  static VolumeId decode_from_path(std::string_view encoded);
};

// 8-digit zero-padded page sequence; lexicographic order equals numeric.
std::string page_sequence(uint64_t n);
bool is_page_sequence(std::string_view s);

struct PageRecord {
  std::string sequence;
  std::string contents;
  uint64_t byte_count = 0;
  uint64_t character_count = 0;
  std::string checksum;
  util::ChecksumType checksum_type = util::ChecksumType::SHA256;
  std::optional<std::string> page_number_label;
};

// Builds a page, computing counts and checksum from the contents.
// Throws DataError when contents are not valid UTF-8.
PageRecord make_page(std::string sequence, std::string contents,
                     util::ChecksumType type = util::ChecksumType::SHA256,
                     std::optional<std::string> label = std::nullopt);

struct VolumeRecord {
  VolumeId id;
  std::vector<PageRecord> pages;  // sorted by sequence, no duplicates
  int32_t access_level = 1;
  std::string language = "en";
  uint64_t volume_byte_count = 0;
  uint64_t volume_character_count = 0;
};

// Sorts pages, rejects duplicate sequences and recomputes the volume-level
// aggregates. Every constructor path for VolumeRecord goes through here.
VolumeRecord make_volume(VolumeId id, std::vector<PageRecord> pages, int32_t access_level = 1,
                         std::string language = "en");

struct PageChecksum {
  std::string sequence;
  std::string checksum;
  util::ChecksumType type = util::ChecksumType::SHA256;
};

struct PageSize {
  std::string sequence;
  uint64_t bytes = 0;
};

struct StructuralMetadata {
  VolumeId id;
  uint64_t page_count = 0;
  std::vector<PageChecksum> checksums;  // strictly increasing sequences
  std::vector<PageSize> sizes;          // strictly increasing sequences
};

StructuralMetadata make_structural(VolumeId id, uint64_t page_count,
                                   std::vector<PageChecksum> checksums,
                                   std::vector<PageSize> sizes);

StructuralMetadata derive_structural(const VolumeRecord& v);

// Five-number summary plus mean of compressed volume sizes, in kilobytes.
struct SizeStats {
  double min_kb = 0, q1_kb = 0, median_kb = 0, mean_kb = 0, q3_kb = 0, max_kb = 0;

  void check() const;  // throws DataError when the ordering invariant fails
  std::string to_csv() const;
};

// Size summary of a large digitized-library collection, used as the default
// model for synthetic corpora. The source summary's reported minimum exceeds
// its first quartile, which cannot hold; the shipped model keeps Q1..max and
// sets min to a small consistent floor.
SizeStats reference_size_model();

enum class MismatchKind { PageCount, PageSize, PageChecksum, MissingPage };

struct Mismatch {
  MismatchKind kind;
  std::string sequence;  // empty for volume-level entries
  std::string detail;
};

struct ValidationReport {
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Integrity check of a volume against its structural metadata. Checksums are
// recomputed from page contents with the type each structural entry names.
// An id mismatch is a precondition error, not a report entry.
ValidationReport validate_volume(const VolumeRecord& v, const StructuralMetadata& s);

}  // namespace folio::corpus
