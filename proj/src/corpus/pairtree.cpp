#include "folio/corpus/pairtree.hpp"

#include <algorithm>
#include <fstream>

#include "folio/util/errors.hpp"

namespace folio::corpus {

namespace fs = std::filesystem;

fs::path pairtree_path(const fs::path& root, const VolumeId& id) {
  std::string enc = id.encode_for_path();
  fs::path p = root;
  for (size_t i = 0; i < enc.size(); i += 2) p /= enc.substr(i, 2);
  p /= enc + ".zip";
  return p;
}

void write_pairtree_volume(const fs::path& root, const VolumeId& id,
                           std::string_view archive_bytes) {
  fs::path p = pairtree_path(root, id);
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  if (ec) throw IoError("cannot create pairtree directory: " + p.parent_path().string());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for write: " + p.string());
  out.write(archive_bytes.data(), (std::streamsize)archive_bytes.size());
  out.flush();
  if (!out) throw IoError("write failed: " + p.string());
}

PairtreeScanner::PairtreeScanner(fs::path root) {
  if (!fs::exists(root)) throw PreconditionError("pairtree root does not exist: " + root.string());
  // Collect then sort: recursive_directory_iterator order is unspecified,
  // and the stream contract promises a deterministic traversal.
  std::error_code ec;
  for (fs::recursive_directory_iterator it(root, ec), end; it != end; it.increment(ec)) {
    if (ec) {
      errors_.push_back({root.string(), "directory walk error: " + ec.message()});
      break;
    }
    if (it->is_regular_file() && it->path().extension() == ".zip")
      files_.push_back(it->path());
  }
  std::sort(files_.begin(), files_.end());
}

std::optional<IngestItem> PairtreeScanner::next() {
  while (pos_ < files_.size()) {
    const fs::path& p = files_[pos_++];
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      errors_.push_back({p.string(), "unreadable file"});
      continue;
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
      errors_.push_back({p.string(), "read failed"});
      continue;
    }
    VolumeId id;
    try {
      id = VolumeId::decode_from_path(p.stem().string());
    } catch (const Error& e) {
      errors_.push_back({p.string(), e.what()});
      continue;
    }
    return IngestItem{std::move(id), std::move(bytes)};
  }
  return std::nullopt;
}

}  // namespace folio::corpus
