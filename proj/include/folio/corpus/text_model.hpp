#pragma once

#include <string>

#include "folio/util/rng.hpp"

namespace folio::corpus {

// Deterministic OCR-flavored pseudo-text: dictionary words mixed with
// high-entropy tokens, digits and occasional accented (two-byte) characters,
// broken into sentences and ~72-column lines. The mix is tuned so the text
// stays cheap to generate yet compresses at a stable, known ratio.
void append_text(std::string& out, size_t bytes, util::Rng& rng);

std::string make_text(size_t bytes, util::Rng& rng);

// Measured raw/compressed ratio of this text under the archive codec
// (deflate level 1). Used to size synthetic pages against a compressed-size
// target; the estimator in stats.hpp measures the real ratio per volume, so
// this constant only steers generation.
inline constexpr double kTextDeflateRatio = 1.72;

}  // namespace folio::corpus
