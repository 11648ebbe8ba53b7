#pragma once

#include <string>
#include <string_view>

#include "folio/corpus/types.hpp"

namespace folio::corpus {

// Raw volume format: a zip archive whose entries are pages named
// `<sequence>.txt`. Entry names of one to eight digits are accepted and
// normalized to the 8-digit form; pages come back sorted by sequence.
VolumeRecord parse_volume_zip(std::string_view archive, VolumeId id);

// Canonical archive form of a volume (deflate `level`, 0 = stored).
std::string serialize_volume_zip(const VolumeRecord& v, int level = 1);

}  // namespace folio::corpus
