#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "folio/corpus/types.hpp"

namespace folio::corpus {

// Simplified pairtree layout: the path-encoded id is split into consecutive
// 2-character shingles (a trailing odd character forms a 1-character
// shingle), and the leaf directory holds `<encodedId>.zip`.
std::filesystem::path pairtree_path(const std::filesystem::path& root, const VolumeId& id);

void write_pairtree_volume(const std::filesystem::path& root, const VolumeId& id,
                           std::string_view archive_bytes);

struct IngestError {
  std::string path;
  std::string message;
};

struct IngestItem {
  VolumeId id;
  std::string archive;  // raw zip bytes
};

// Single-producer stream over every `<id>.zip` beneath the root, in
// deterministic (lexicographic) traversal order. Unreadable files are
// recorded and the stream continues.
class PairtreeScanner {
 public:
  explicit PairtreeScanner(std::filesystem::path root);

  std::optional<IngestItem> next();

  const std::vector<IngestError>& errors() const { return errors_; }

 private:
  std::vector<std::filesystem::path> files_;
  size_t pos_ = 0;
  std::vector<IngestError> errors_;
};

}  // namespace folio::corpus
